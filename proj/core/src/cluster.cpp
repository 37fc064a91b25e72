#include "hrvtvm/cluster.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "hrvtvm/error.hpp"

namespace hrvtvm {

KMeansResult kmeans_1d(std::span<const double> values, std::size_t k) {
  if (k < 1) throw Error(ErrorKind::InvalidArgument, "k must be at least 1");
  for (double v : values) {
    if (!std::isfinite(v)) throw Error(ErrorKind::InvalidArgument, "k-means input must be finite");
  }

  std::vector<double> distinct(values.begin(), values.end());
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  if (distinct.size() < k) {
    throw Error(ErrorKind::TooFewDistinct, "k-means needs at least " + std::to_string(k) +
                                               " distinct values, got " +
                                               std::to_string(distinct.size()));
  }

  std::vector<double> centroids(k);
  for (std::size_t j = 0; j < k; ++j) {
    std::size_t idx = (k == 1) ? 0 : j * (distinct.size() - 1) / (k - 1);
    centroids[j] = distinct[idx];
  }

  KMeansResult result;
  std::vector<int> current(values.size(), -1);
  std::vector<int> next(values.size());
  while (result.iterations < kMaxKMeansIterations) {
    for (std::size_t i = 0; i < values.size(); ++i) {
      std::size_t best = 0;
      double best_dist = std::fabs(values[i] - centroids[0]);
      for (std::size_t j = 1; j < k; ++j) {
        double d = std::fabs(values[i] - centroids[j]);
        if (d < best_dist) {  // strict: ties stay with the lower centroid
          best = j;
          best_dist = d;
        }
      }
      next[i] = static_cast<int>(best);
    }
    if (next == current) break;
    current = next;

    std::vector<double> sums(k, 0.0);
    std::vector<std::size_t> counts(k, 0);
    for (std::size_t i = 0; i < values.size(); ++i) {
      sums[current[i]] += values[i];
      ++counts[current[i]];
    }
    for (std::size_t j = 0; j < k; ++j) {
      if (counts[j] > 0) centroids[j] = sums[j] / static_cast<double>(counts[j]);
    }
    ++result.iterations;
  }

  // Lloyd keeps ordered centroids ordered in 1-D; relabel anyway so the
  // ascending contract never depends on that.
  std::vector<std::size_t> order(k);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return centroids[a] < centroids[b]; });
  std::vector<int> relabel(k);
  result.centroids.resize(k);
  for (std::size_t rank = 0; rank < k; ++rank) {
    relabel[order[rank]] = static_cast<int>(rank);
    result.centroids[rank] = centroids[order[rank]];
  }
  result.assignments.resize(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) result.assignments[i] = relabel[current[i]];
  return result;
}

double rand_accuracy(std::span<const int> assignments, std::span<const std::string> truth) {
  if (assignments.size() != truth.size()) {
    throw Error(ErrorKind::LengthMismatch,
                "assignments and truth differ in length (" + std::to_string(assignments.size()) +
                    " vs " + std::to_string(truth.size()) + ")");
  }
  std::vector<std::string> labels(truth.begin(), truth.end());
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  if (labels.size() != 2) {
    throw Error(ErrorKind::LabelCount,
                "expected exactly two truth labels, got " + std::to_string(labels.size()));
  }

  std::size_t matches = 0;  // under cluster 0 -> labels[0], cluster 1 -> labels[1]
  for (std::size_t i = 0; i < assignments.size(); ++i) {
    int a = assignments[i];
    if (a != 0 && a != 1) {
      throw Error(ErrorKind::InvalidArgument, "cluster ids must be 0 or 1");
    }
    if ((a == 0) == (truth[i] == labels[0])) ++matches;
  }
  const std::size_t total = assignments.size();
  return static_cast<double>(std::max(matches, total - matches)) / static_cast<double>(total);
}

LabeledFeatures label_features(const FeatureGroup& a, const FeatureGroup& b) {
  LabeledFeatures out;
  out.values.reserve(a.values.size() + b.values.size());
  out.values.insert(out.values.end(), a.values.begin(), a.values.end());
  out.values.insert(out.values.end(), b.values.begin(), b.values.end());
  out.truth.assign(a.values.size(), a.name);
  out.truth.insert(out.truth.end(), b.values.size(), b.name);
  return out;
}

ClusteringOutcome pairwise_classify(const FeatureGroup& a, const FeatureGroup& b) {
  if (a.values.empty() || b.values.empty()) {
    throw Error(ErrorKind::EmptyInput, "each group needs at least one feature value");
  }
  if (a.name == b.name) {
    throw Error(ErrorKind::InvalidArgument, "groups must have distinct names, both are '" +
                                                a.name + "'");
  }
  auto labeled = label_features(a, b);
  auto km = kmeans_1d(labeled.values, 2);

  ClusteringOutcome out;
  out.ri = rand_accuracy(km.assignments, labeled.truth);
  out.assignments = std::move(km.assignments);
  out.centroids = std::move(km.centroids);
  out.iterations = km.iterations;
  return out;
}

}  // namespace hrvtvm
