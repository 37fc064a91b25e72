#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace hrvtvm {

inline constexpr std::size_t kMaxKMeansIterations = 1000;

struct KMeansResult {
  std::vector<int> assignments;
  std::vector<double> centroids;  // ascending
  std::size_t iterations = 0;
};

/// Deterministic 1-D Lloyd k-means. Centroids start at evenly spaced order
/// statistics of the distinct values (min and max for k = 2). Ties go to the
/// lower centroid. Stops when an assignment pass changes nothing, or after
/// kMaxKMeansIterations updates. Throws Error{TooFewDistinct} when there are
/// fewer than k distinct values, Error{InvalidArgument} for k < 1.
KMeansResult kmeans_1d(std::span<const double> values, std::size_t k = 2);

/// Best-bijection accuracy between a 2-cluster assignment and two truth labels.
/// Throws Error{LengthMismatch}, Error{LabelCount}, or Error{InvalidArgument}
/// for cluster ids outside {0, 1}.
double rand_accuracy(std::span<const int> assignments, std::span<const std::string> truth);

/// Per-recording indicator values paired with their dataset label.
struct LabeledFeatures {
  std::vector<double> values;
  std::vector<std::string> truth;
};

struct ClusteringOutcome {
  std::vector<int> assignments;
  std::vector<double> centroids;
  double ri = 0.0;
  std::size_t iterations = 0;
};

/// One dataset's feature values for a single indicator.
struct FeatureGroup {
  std::string name;
  std::vector<double> values;
};

LabeledFeatures label_features(const FeatureGroup& a, const FeatureGroup& b);

/// k-means (k = 2) over the pooled features, scored with rand_accuracy.
/// Throws Error{EmptyInput} if either group is empty; the two groups must
/// carry distinct names.
ClusteringOutcome pairwise_classify(const FeatureGroup& a, const FeatureGroup& b);

}  // namespace hrvtvm
