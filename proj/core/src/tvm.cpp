#include "hrvtvm/tvm.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <utility>

#include "hrvtvm/error.hpp"

namespace hrvtvm {

std::vector<TvmPoint> build_tvm_points(std::span<const SodpPoint> points) {
  if (points.empty()) throw Error(ErrorKind::EmptyInput, "no difference-plot points");

  std::vector<TvmPoint> out;
  out.reserve(points.size());
  double le_sum = 0.0;
  for (const auto& p : points) {
    TvmPoint t;
    t.base = p;
    t.d_co = std::fabs(p.y) - std::fabs(p.x);
    t.le = p.distance();
    le_sum += t.le;
    out.push_back(t);
  }

  const double mean_le = le_sum / static_cast<double>(points.size());
  for (auto& t : out) {
    // mean_le == 0 only when every point is the origin, where d_co is 0 too
    t.l = (mean_le == 0.0) ? 0.5 : 1.0 / (1.0 + std::exp(-t.le / mean_le));
    t.z = t.d_co * t.l;
  }
  return out;
}

void validate(const Divisions& d) {
  for (std::size_t n : {d.nx, d.ny, d.nz}) {
    if (n < 1 || n > kMaxDivisionsPerAxis) {
      throw Error(ErrorKind::InvalidArgument,
                  "divisions must be between 1 and " + std::to_string(kMaxDivisionsPerAxis) +
                      " per axis, got " + std::to_string(n));
    }
  }
}

Divisions parse_divisions(std::string_view text) {
  std::array<std::size_t, 3> parts{};
  std::size_t filled = 0;
  std::size_t pos = 0;
  while (true) {
    std::size_t comma = text.find(',', pos);
    std::string_view field = text.substr(pos, comma == text.npos ? text.npos : comma - pos);
    std::size_t v = 0;
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
    if (filled == 3 || ec != std::errc() || ptr != field.data() + field.size() || field.empty()) {
      throw Error(ErrorKind::InvalidArgument,
                  "divisions must look like NX,NY,NZ, got '" + std::string(text) + "'");
    }
    parts[filled++] = v;
    if (comma == text.npos) break;
    pos = comma + 1;
  }
  if (filled != 3) {
    throw Error(ErrorKind::InvalidArgument,
                "divisions must look like NX,NY,NZ, got '" + std::string(text) + "'");
  }
  Divisions d{parts[0], parts[1], parts[2]};
  validate(d);
  return d;
}

std::uint64_t SubspaceGrid::cell_count() const noexcept {
  return static_cast<std::uint64_t>(effective_[0]) * effective_[1] * effective_[2];
}

double SubspaceGrid::mean_occupancy() const noexcept {
  return static_cast<double>(total_points_) / static_cast<double>(cell_count());
}

GridCell SubspaceGrid::cell(std::size_t ix, std::size_t iy, std::size_t iz) const {
  if (ix >= effective_[0] || iy >= effective_[1] || iz >= effective_[2]) {
    throw Error(ErrorKind::InvalidArgument, "cell index out of range");
  }
  std::uint64_t key = (static_cast<std::uint64_t>(ix) * effective_[1] + iy) * effective_[2] + iz;
  auto it = cells_.find(key);
  return it == cells_.end() ? GridCell{} : it->second;
}

std::size_t axis_bin(double value, const AxisBounds& axis, std::size_t bins) noexcept {
  if (bins <= 1 || !(axis.max > axis.min)) return 0;
  // The quotient only seeds the index; membership n*(v - lo) >= k*(hi - lo) is
  // decided in long double, where both products are exact for bins < 2048.
  double t = (value - axis.min) * static_cast<double>(bins) / (axis.max - axis.min);
  std::size_t k = t > 0.0 ? std::min(static_cast<std::size_t>(t), bins - 1) : 0;
  const long double offset =
      static_cast<long double>(value - axis.min) * static_cast<long double>(bins);
  const long double width = static_cast<long double>(axis.max - axis.min);
  auto edge = [&](std::size_t i) { return static_cast<long double>(i) * width; };
  while (k > 0 && offset < edge(k)) --k;
  while (k + 1 < bins && offset >= edge(k + 1)) ++k;
  return k;
}

SubspaceGrid build_grid(std::span<const TvmPoint> points, const Divisions& divisions) {
  validate(divisions);
  if (points.empty()) throw Error(ErrorKind::EmptyInput, "no points to grid");

  SubspaceGrid grid;
  grid.requested_ = divisions;
  grid.total_points_ = points.size();

  auto coord = [](const TvmPoint& p, int axis) {
    return axis == 0 ? p.base.x : axis == 1 ? p.base.y : p.z;
  };
  const std::array<std::size_t, 3> requested{divisions.nx, divisions.ny, divisions.nz};
  for (int axis = 0; axis < 3; ++axis) {
    auto [lo, hi] = std::minmax_element(points.begin(), points.end(),
                                        [&](const TvmPoint& a, const TvmPoint& b) {
                                          return coord(a, axis) < coord(b, axis);
                                        });
    grid.bounds_[axis] = AxisBounds{coord(*lo, axis), coord(*hi, axis)};
    grid.effective_[axis] = grid.bounds_[axis].max > grid.bounds_[axis].min ? requested[axis] : 1;
  }

  // Sorting (cell, |z|) pairs makes every per-cell sum independent of the
  // order the points arrived in.
  std::vector<std::pair<std::uint64_t, double>> keyed;
  keyed.reserve(points.size());
  for (const auto& p : points) {
    std::uint64_t key = 0;
    for (int axis = 0; axis < 3; ++axis) {
      key = key * grid.effective_[axis] +
            axis_bin(coord(p, axis), grid.bounds_[axis], grid.effective_[axis]);
    }
    keyed.emplace_back(key, std::fabs(p.z));
  }
  std::sort(keyed.begin(), keyed.end());
  for (const auto& [key, abs_z] : keyed) {
    auto& cell = grid.cells_[key];
    ++cell.count;
    cell.abs_z_sum += abs_z;
  }
  return grid;
}

double temporal_variation_entropy(const SubspaceGrid& grid) {
  const std::size_t total = grid.total_points();
  if (total == 0) return 0.0;
  const double m = static_cast<double>(total);
  const double mean_count = grid.mean_occupancy();

  // Empty cells have n_i = 0 and drop out of the sum.
  double e = 0.0;
  for (const auto& [key, cell] : grid.occupied_cells()) {
    const double n = static_cast<double>(cell.count);
    const double p = std::fabs(n - mean_count) / m;
    if (p <= 0.0) continue;
    e += n * cell.abs_z_sum * p * -std::log(p);
  }
  return e;
}

QuadrantValues quadrant_etv(std::span<const TvmPoint> points, const Divisions& divisions) {
  if (points.empty()) throw Error(ErrorKind::EmptyInput, "no points");
  validate(divisions);
  QuadrantValues out{};
  std::vector<TvmPoint> subset;
  subset.reserve(points.size());
  for (std::size_t k = 0; k < 4; ++k) {
    subset.clear();
    for (const auto& p : points) {
      if (static_cast<std::size_t>(p.base.quadrant) == k) subset.push_back(p);
    }
    out[k] = subset.empty() ? 0.0 : temporal_variation_entropy(build_grid(subset, divisions));
  }
  return out;
}

TvmResult tvm_pipeline(const RRSeries& series, const Divisions& divisions) {
  validate(divisions);
  TvmResult result;
  auto sodp = second_order_diff(series);
  result.points = build_tvm_points(sodp);
  result.grid = build_grid(result.points, divisions);
  result.etv_global = temporal_variation_entropy(result.grid);
  result.etv_quadrant = quadrant_etv(result.points, divisions);
  return result;
}

}  // namespace hrvtvm
