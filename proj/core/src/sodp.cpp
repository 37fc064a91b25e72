#include "hrvtvm/sodp.hpp"

#include <cmath>
#include <sstream>

#include "hrvtvm/error.hpp"

namespace hrvtvm {

std::string_view to_string(Quadrant q) noexcept {
  switch (q) {
    case Quadrant::I: return "I";
    case Quadrant::II: return "II";
    case Quadrant::III: return "III";
    case Quadrant::IV: return "IV";
    case Quadrant::OnAxis: return "axis";
  }
  return "axis";
}

std::vector<SodpPoint> second_order_diff(std::span<const double> intervals) {
  if (intervals.size() < kMinSeriesLength) {
    throw Error(ErrorKind::TooShort, "need at least 3 intervals to form a difference-plot point");
  }
  std::vector<SodpPoint> points;
  points.reserve(intervals.size() - 2);
  for (std::size_t i = 0; i + 2 < intervals.size(); ++i) {
    points.push_back(make_sodp_point(i, intervals[i + 1] - intervals[i],
                                     intervals[i + 2] - intervals[i + 1]));
  }
  return points;
}

std::vector<SodpPoint> second_order_diff(const RRSeries& series) {
  return second_order_diff(series.intervals());
}

RadiusCounts count_within_radius(std::span<const SodpPoint> points, double r) {
  if (points.empty()) throw Error(ErrorKind::EmptyInput, "no difference-plot points");
  if (std::isnan(r) || r <= 0.0) {
    std::ostringstream msg;
    msg << "radius must be positive, got " << r;
    throw Error(ErrorKind::InvalidArgument, msg.str());
  }
  RadiusCounts counts;
  counts.total = points.size();
  for (const auto& p : points) {
    if (!(p.distance() < r)) continue;
    ++counts.within;
    if (p.quadrant == Quadrant::OnAxis) {
      ++counts.on_axis_within;
    } else {
      ++counts.quadrant_within[static_cast<std::size_t>(p.quadrant)];
    }
  }
  return counts;
}

double ctm(std::span<const SodpPoint> points, double r) {
  auto c = count_within_radius(points, r);
  return static_cast<double>(c.within) / static_cast<double>(c.total);
}

QuadrantValues cctm(std::span<const SodpPoint> points, double r) {
  auto c = count_within_radius(points, r);
  QuadrantValues out{};
  for (std::size_t k = 0; k < 4; ++k) {
    out[k] = static_cast<double>(c.quadrant_within[k]) / static_cast<double>(c.total);
  }
  return out;
}

double on_axis_fraction(std::span<const SodpPoint> points, double r) {
  auto c = count_within_radius(points, r);
  return static_cast<double>(c.on_axis_within) / static_cast<double>(c.total);
}

double mean_distance_d(std::span<const SodpPoint> points, double r) {
  auto c = count_within_radius(points, r);
  if (c.within == 0) {
    std::ostringstream msg;
    msg << "no point lies within radius " << r;
    throw Error(ErrorKind::NoPointInRadius, msg.str());
  }
  double sum = 0.0;
  for (const auto& p : points) {
    double d = p.distance();
    if (d < r) sum += d;
  }
  return sum / static_cast<double>(c.within);
}

}  // namespace hrvtvm
