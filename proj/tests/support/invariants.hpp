#pragma once

// Property checks shared by the unit tests and the acceptance runner. Each
// returns std::nullopt on success or a description of the first violation.

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "hrvtvm/tvm.hpp"

namespace invariants {

struct Case {
  std::vector<double> series;
  hrvtvm::Divisions divisions;
  double r = 3.0;
};

/// Length 3..500, divisions from {1..6}^3 or (10,10,10), radius in (0.5, 60).
/// Integer-valued series when `whole_ms` is set.
Case random_case(std::mt19937_64& rng, bool whole_ms);

using Check = std::optional<std::string>;

/// Every output of the pipeline is bitwise unchanged by adding `shift`.
/// Requires series and shift for which the differences are exact.
Check translation(const Case& c, double shift);

/// E_TV (global and per quadrant) scales by `factor` to 1e-9 relative. For
/// power-of-two factors the points and CTM at the scaled radius are also
/// checked for exact equality.
Check scale(const Case& c, double factor);

/// CTM non-decreasing over an ascending radius grid.
Check ctm_monotone(const Case& c);

/// Quadrant counts plus the on-axis count equal the in-radius count exactly;
/// the fractions agree to rounding.
Check quadrant_sum(const Case& c);

/// E_TV >= 0, l in [0.5, 1), sign(z) == sign(d_co).
Check ranges(const Case& c);

/// Cell counts add up to n - 2; reordering points leaves the grid and E_TV
/// bitwise unchanged.
Check grid_conservation(const Case& c, std::mt19937_64& rng);

}  // namespace invariants
