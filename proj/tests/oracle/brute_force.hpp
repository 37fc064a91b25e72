#pragma once

// Straight-line reference evaluator used only by the test suites. It shares
// no code with the library: it recomputes the difference plot, the 3-D lift and
// the entropy from the raw interval list, walks every cell of the grid densely,
// and applies the entropy formula literally as a double sum over cells and the
// points inside each cell.

#include <array>
#include <cstddef>
#include <vector>

namespace oracle {

struct Result {
  std::size_t points = 0;
  std::size_t within = 0;                     // distance < r
  std::array<std::size_t, 4> quadrant_within{};  // I..IV, distance < r
  std::size_t axis_within = 0;
  double mean_distance = 0.0;  // over points with distance < r, 0 if none
  std::vector<double> z;       // z coordinate per point
  double etv_global = 0.0;
  std::array<double, 4> etv_quadrant{};
};

Result evaluate(const std::vector<double>& intervals, double r, std::size_t nx, std::size_t ny,
                std::size_t nz);

}  // namespace oracle
