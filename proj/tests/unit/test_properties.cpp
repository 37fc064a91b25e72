#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "brute_force.hpp"
#include "hrvtvm/analysis.hpp"
#include "invariants.hpp"
#include "test_support.hpp"

using namespace hrvtvm;

namespace {

void require_ok(const invariants::Check& check) {
  INFO(check.value_or(""));
  REQUIRE_FALSE(check.has_value());
}

}  // namespace

TEST_CASE("translation leaves every output bitwise unchanged", "[property]") {
  std::mt19937_64 rng(101);
  std::uniform_int_distribution<int> shift(-250, 1000);
  for (int i = 0; i < 40; ++i) {
    require_ok(invariants::translation(invariants::random_case(rng, true), shift(rng)));
  }
}

TEST_CASE("E_TV is positively scale-equivariant", "[property]") {
  std::mt19937_64 rng(202);
  for (int i = 0; i < 40; ++i) {
    auto c = invariants::random_case(rng, false);
    for (double factor : {0.5, 2.0, 10.0}) require_ok(invariants::scale(c, factor));
  }
}

// Integer-valued series often put a point exactly on a z-bin edge, where only
// exact (power-of-two) scaling is guaranteed to preserve the rounding.
TEST_CASE("power-of-two scaling of whole-millisecond series", "[property]") {
  std::mt19937_64 rng(212);
  for (int i = 0; i < 40; ++i) {
    auto c = invariants::random_case(rng, true);
    for (double factor : {0.5, 2.0, 4.0}) require_ok(invariants::scale(c, factor));
  }
}

TEST_CASE("CTM and CCTM structural properties", "[property]") {
  std::mt19937_64 rng(303);
  for (int i = 0; i < 40; ++i) {
    auto c = invariants::random_case(rng, i % 2 == 0);
    require_ok(invariants::ctm_monotone(c));
    require_ok(invariants::quadrant_sum(c));
  }
}

TEST_CASE("TVM ranges and grid conservation", "[property]") {
  std::mt19937_64 rng(404);
  for (int i = 0; i < 40; ++i) {
    auto c = invariants::random_case(rng, i % 3 == 0);
    require_ok(invariants::ranges(c));
    require_ok(invariants::grid_conservation(c, rng));
  }
}

TEST_CASE("library agrees with the brute-force evaluator", "[property]") {
  std::mt19937_64 rng(505);
  for (int i = 0; i < 25; ++i) {
    auto c = invariants::random_case(rng, i % 2 == 0);
    auto want = oracle::evaluate(c.series, c.r, c.divisions.nx, c.divisions.ny, c.divisions.nz);
    RRSeries s(c.series);
    auto pts = second_order_diff(s);
    auto counts = count_within_radius(pts, c.r);
    CHECK(counts.within == want.within);
    CHECK(counts.quadrant_within == want.quadrant_within);
    auto got = tvm_pipeline(s, c.divisions);
    CHECK(testing_support::close_rel(got.etv_global, want.etv_global, 1e-9));
    for (std::size_t k = 0; k < 4; ++k) {
      CHECK(testing_support::close_rel(got.etv_quadrant[k], want.etv_quadrant[k], 1e-9));
    }
    if (want.within > 0) {
      CHECK(testing_support::close_rel(mean_distance_d(pts, c.r), want.mean_distance, 1e-12));
    }
  }
}
