#pragma once

// Temporal variation measure: lifts SODP points into 3-D with
//   d_co = |y| - |x|
//   le   = sqrt(x^2 + y^2)
//   l    = 1 / (1 + exp(-le / mean(le)))
//   z    = d_co * l
// then bins the cloud inside its bounding cuboid and scores the occupancy with
// the temporal variation entropy
//   E_TV = sum_i n_i * (sum_{j in cell i} |z_j|) * p_i * (-ln p_i),
//   p_i  = |n_i - M/N| / M.

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string_view>
#include <vector>

#include "hrvtvm/series.hpp"
#include "hrvtvm/sodp.hpp"

namespace hrvtvm {

struct TvmPoint {
  SodpPoint base;
  double d_co = 0.0;
  double le = 0.0;
  double l = 0.5;
  double z = 0.0;
};

/// Computes mean(le) once over all inputs. If every point sits at the origin
/// (mean le == 0) each l is 0.5 and each z is 0. Throws Error{EmptyInput}.
std::vector<TvmPoint> build_tvm_points(std::span<const SodpPoint> points);

/// Requested number of bins along x, y and z.
struct Divisions {
  std::size_t nx = 10;
  std::size_t ny = 10;
  std::size_t nz = 10;

  friend bool operator==(const Divisions&, const Divisions&) = default;
};

inline constexpr std::size_t kMaxDivisionsPerAxis = 1'000'000;

/// Parses "NX,NY,NZ". Throws Error{InvalidArgument}.
Divisions parse_divisions(std::string_view text);
/// Throws Error{InvalidArgument} unless every axis is in [1, kMaxDivisionsPerAxis].
void validate(const Divisions& divisions);

struct AxisBounds {
  double min = 0.0;
  double max = 0.0;
};

struct GridCell {
  std::size_t count = 0;
  double abs_z_sum = 0.0;
};

/// Occupancy of the bounding cuboid of a TVM point cloud. Each axis is split
/// into equal-width half-open bins, the last bin closed on top. An axis with
/// zero extent collapses to one bin. Only occupied cells are stored; cell_count()
/// is the full N including empty cells.
class SubspaceGrid {
 public:
  const std::array<AxisBounds, 3>& bounds() const noexcept { return bounds_; }
  const Divisions& requested() const noexcept { return requested_; }
  const std::array<std::size_t, 3>& effective() const noexcept { return effective_; }

  std::uint64_t cell_count() const noexcept;
  std::size_t total_points() const noexcept { return total_points_; }
  /// M / N, averaged over every cell including empty ones.
  double mean_occupancy() const noexcept;

  /// Keyed by linear index (ix * ny + iy) * nz + iz over effective divisions.
  const std::map<std::uint64_t, GridCell>& occupied_cells() const noexcept { return cells_; }
  GridCell cell(std::size_t ix, std::size_t iy, std::size_t iz) const;

  friend SubspaceGrid build_grid(std::span<const TvmPoint> points, const Divisions& divisions);

 private:
  std::array<AxisBounds, 3> bounds_{};
  Divisions requested_{};
  std::array<std::size_t, 3> effective_{1, 1, 1};
  std::size_t total_points_ = 0;
  std::map<std::uint64_t, GridCell> cells_;
};

/// Throws Error{EmptyInput} or Error{InvalidArgument} for bad divisions.
SubspaceGrid build_grid(std::span<const TvmPoint> points, const Divisions& divisions);

/// Bin of `value` on an axis [lo, hi] split into `bins` equal parts.
std::size_t axis_bin(double value, const AxisBounds& axis, std::size_t bins) noexcept;

/// Natural log; p_i == 0 terms contribute 0. Non-negative.
double temporal_variation_entropy(const SubspaceGrid& grid);

/// E_TV of each quadrant's points on a grid over that quadrant's own bounding
/// box. l/z keep the global scaling. An empty quadrant scores 0.
QuadrantValues quadrant_etv(std::span<const TvmPoint> points, const Divisions& divisions);

struct TvmResult {
  std::vector<TvmPoint> points;
  SubspaceGrid grid;
  double etv_global = 0.0;
  QuadrantValues etv_quadrant{};
};

TvmResult tvm_pipeline(const RRSeries& series, const Divisions& divisions = {});

}  // namespace hrvtvm
