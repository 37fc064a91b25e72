#pragma once

// Second-order difference plot (SODP) and the radius-based indicators built
// on it: CTM, the per-quadrant CCTM and the mean in-radius distance D.

#include <array>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "hrvtvm/series.hpp"

namespace hrvtvm {

enum class Quadrant : std::uint8_t { I = 0, II = 1, III = 2, IV = 3, OnAxis = 4 };

std::string_view to_string(Quadrant q) noexcept;

/// Sign-strict quadrant; any zero coordinate gives OnAxis.
constexpr Quadrant classify_quadrant(double x, double y) noexcept {
  if (x > 0 && y > 0) return Quadrant::I;
  if (x < 0 && y > 0) return Quadrant::II;
  if (x < 0 && y < 0) return Quadrant::III;
  if (x > 0 && y < 0) return Quadrant::IV;
  return Quadrant::OnAxis;
}

/// One SODP point built from intervals[index], [index+1], [index+2].
struct SodpPoint {
  std::size_t index = 0;
  double x = 0.0;  // intervals[index+1] - intervals[index]
  double y = 0.0;  // intervals[index+2] - intervals[index+1]
  Quadrant quadrant = Quadrant::OnAxis;

  double distance() const noexcept { return std::sqrt(x * x + y * y); }
};

inline SodpPoint make_sodp_point(std::size_t index, double x, double y) noexcept {
  return SodpPoint{index, x, y, classify_quadrant(x, y)};
}

/// Values indexed by quadrant I..IV.
using QuadrantValues = std::array<double, 4>;

/// An indicator evaluated at radius r (r > 0).
struct RadiusIndicator {
  double r;
  double value;
};

/// Returns exactly n-2 points in index order. Throws Error{TooShort}.
std::vector<SodpPoint> second_order_diff(std::span<const double> intervals);
std::vector<SodpPoint> second_order_diff(const RRSeries& series);

/// Point counts strictly inside the radius, split by quadrant.
struct RadiusCounts {
  std::size_t total = 0;
  std::size_t within = 0;
  std::array<std::size_t, 4> quadrant_within{};
  std::size_t on_axis_within = 0;
};

/// Throws Error{EmptyInput} for no points, Error{InvalidArgument} unless r > 0.
RadiusCounts count_within_radius(std::span<const SodpPoint> points, double r);

/// Fraction of points with distance < r.
double ctm(std::span<const SodpPoint> points, double r);

/// Per-quadrant in-radius counts over the total point count. OnAxis points
/// count toward the denominator only.
QuadrantValues cctm(std::span<const SodpPoint> points, double r);

/// In-radius OnAxis points over the total; closes the identity
/// sum(cctm) + on_axis_fraction == ctm.
double on_axis_fraction(std::span<const SodpPoint> points, double r);

/// Mean distance of the points strictly inside r. Throws
/// Error{NoPointInRadius} when none qualify.
double mean_distance_d(std::span<const SodpPoint> points, double r);

}  // namespace hrvtvm
