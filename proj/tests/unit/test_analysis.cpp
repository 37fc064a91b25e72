#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "hrvtvm/analysis.hpp"
#include "hrvtvm/error.hpp"
#include "test_support.hpp"

using namespace hrvtvm;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

RRSeries constant_series(std::size_t n = 20, std::string id = "flat") {
  return RRSeries(std::vector<double>(n, 800.0), Unit::Milliseconds, std::move(id));
}

}  // namespace

TEST_CASE("report examples", "[analysis]") {
  SECTION("constant series") {
    auto r = report(constant_series());
    CHECK(r.ctm == 1.0);
    CHECK(r.cctm == QuadrantValues{0, 0, 0, 0});
    REQUIRE(r.d.has_value());
    CHECK(*r.d == 0.0);
    CHECK(r.etv_global == 0.0);
    CHECK(r.etv_quadrant == QuadrantValues{0, 0, 0, 0});
    CHECK(r.source_id == "flat");
  }
  SECTION("five intervals at r_ctm = 3") {
    auto r = report(RRSeries({800, 810, 790, 805, 795}));
    CHECK(r.ctm == 0.0);
    CHECK_FALSE(r.d.has_value());  // nothing within r_d = 6
  }
  SECTION("too short") {
    CHECK_THROWS_AS(report(RRSeries({800, 810})), Error);
  }
  SECTION("parameters are validated and echoed") {
    IndicatorParams p{2.0, 5.0, {3, 4, 5}};
    auto r = report(RRSeries({800, 801, 799, 800}), p);
    CHECK(r.params.r_ctm == 2.0);
    CHECK(r.params.divisions == Divisions{3, 4, 5});
    CHECK_THROWS_AS(report(RRSeries({800, 801, 799}), IndicatorParams{0.0, 6.0, {}}), Error);
  }
}

TEST_CASE("indicator names round-trip", "[analysis]") {
  for (Indicator ind : kAllIndicators) CHECK(parse_indicator(to_string(ind)) == ind);
  CHECK_FALSE(parse_indicator("sd1").has_value());
  CHECK(depends_on_radius(Indicator::Cctm3));
  CHECK_FALSE(depends_on_radius(Indicator::Etv2));
}

TEST_CASE("indicator_value reads the matching field", "[analysis]") {
  std::mt19937_64 rng(12);
  auto r = report(RRSeries(testing_support::random_series(rng, 100, 800, 3)));
  CHECK(indicator_value(r, Indicator::Ctm) == r.ctm);
  CHECK(indicator_value(r, Indicator::Cctm2) == r.cctm[1]);
  CHECK(indicator_value(r, Indicator::Etv) == r.etv_global);
  CHECK(indicator_value(r, Indicator::Etv4) == r.etv_quadrant[3]);
  CHECK(indicator_value(r, Indicator::D) == r.d);
}

TEST_CASE("radius grids", "[analysis]") {
  auto g = default_r_grid();
  REQUIRE(g.size() == 20);
  CHECK(g.front() == 0.5);
  CHECK(g.back() == 10.0);
  CHECK(parse_r_grid("1:3:0.5") == std::vector<double>{1, 1.5, 2, 2.5, 3});
  CHECK(parse_r_grid("0.1:0.3:0.1").size() == 3);
  CHECK_THROWS_AS(parse_r_grid("1:3"), Error);
  CHECK_THROWS_AS(parse_r_grid("0:3:1"), Error);
  CHECK_THROWS_AS(parse_r_grid("3:1:1"), Error);
  CHECK_THROWS_AS(parse_r_grid("1:3:x"), Error);
}

TEST_CASE("sweep_r examples", "[analysis]") {
  std::mt19937_64 rng(77);
  SECTION("single recording, single radius") {
    RRSeries rec(testing_support::random_series(rng, 90, 800, 4));
    std::vector<DatasetGroup> groups{{"one", {rec}}};
    std::vector<double> radii{3.0};
    auto t = sweep_r(groups, Indicator::Ctm, radii);
    REQUIRE(t.rows.size() == 1);
    CHECK(t.rows[0].values[0] == report(rec).ctm);
  }
  SECTION("CTM rows are non-decreasing in r") {
    DatasetGroup g{"walk", {}};
    for (int i = 0; i < 4; ++i) g.recordings.emplace_back(testing_support::random_series(rng, 120, 800, 5));
    std::vector<DatasetGroup> groups{g};
    auto t = sweep_r(groups, Indicator::Ctm, default_r_grid());
    for (std::size_t i = 1; i < t.r_values.size(); ++i) {
      CHECK(*t.rows[0].values[i] >= *t.rows[0].values[i - 1]);
    }
  }
  SECTION("constant vs high-variance datasets, rows sorted by name") {
    DatasetGroup wild{"wild", {}};
    DatasetGroup flat{"flat", {constant_series(30, "f1"), constant_series(40, "f2")}};
    for (int i = 0; i < 3; ++i) wild.recordings.emplace_back(testing_support::random_series(rng, 100, 800, 60));
    std::vector<DatasetGroup> groups{wild, flat};
    auto t = sweep_r(groups, Indicator::Ctm, default_r_grid());
    REQUIRE(t.rows.size() == 2);
    CHECK(t.rows[0].dataset == "flat");
    for (const auto& v : t.rows[0].values) CHECK(v == 1.0);
    CHECK(*t.rows[1].values[0] < 0.5);
  }
  SECTION("D is absent where no recording has a point within r") {
    std::vector<DatasetGroup> groups{{"g", {RRSeries({800, 810, 790, 805, 795})}}};
    std::vector<double> radii{3.0, 30.0};
    auto t = sweep_r(groups, Indicator::D, radii);
    CHECK_FALSE(t.rows[0].values[0].has_value());
    CHECK_THAT(*t.rows[0].values[1], WithinAbs(21.796145384105944, 1e-9));
  }
  SECTION("errors") {
    std::vector<DatasetGroup> groups{{"g", {constant_series()}}};
    std::vector<double> radii{1.0, 1.0};
    CHECK_THROWS_AS(sweep_r(groups, Indicator::Ctm, radii), Error);
    std::vector<double> ok{1.0};
    CHECK_THROWS_AS(sweep_r(groups, Indicator::Etv1, ok), Error);
    CHECK_THROWS_AS(sweep_r(std::vector<DatasetGroup>{}, Indicator::Ctm, ok), Error);
    CHECK_THROWS_AS(sweep_r(groups, Indicator::Ctm, std::vector<double>{}), Error);
  }
}

TEST_CASE("summarize", "[analysis]") {
  SECTION("single value") {
    std::vector<double> v{4.2};
    auto s = summarize(v);
    CHECK(s.mean == 4.2);
    CHECK(s.std == 0.0);
    CHECK(s.q1 == 4.2);
    CHECK(s.q3 == 4.2);
  }
  SECTION("two values 1 and 3") {
    std::vector<double> v{3, 1};
    auto s = summarize(v);
    CHECK(s.mean == 2.0);
    CHECK_THAT(s.std, WithinRel(std::sqrt(2.0), 1e-15));
    CHECK(s.min == 1);
    CHECK(s.max == 3);
    CHECK(s.q1 == 1.5);
    CHECK(s.median == 2.0);
    CHECK(s.q3 == 2.5);
  }
  SECTION("linear-interpolation quartiles") {
    std::vector<double> v{1, 2, 3, 4};
    auto s = summarize(v);
    CHECK(s.q1 == 1.75);
    CHECK(s.median == 2.5);
    CHECK(s.q3 == 3.25);
  }
  SECTION("identical values have zero spread") {
    std::vector<double> v(7, 0.1);
    auto s = summarize(v);
    CHECK(s.std == 0.0);
    CHECK(s.mean == 0.1);
  }
  SECTION("empty") {
    CHECK_THROWS_AS(summarize(std::vector<double>{}), Error);
  }
}

TEST_CASE("aggregate", "[analysis]") {
  SECTION("single recording") {
    DatasetGroup g{"solo", {RRSeries({800, 804, 799, 801, 806, 800})}};
    auto agg = aggregate(g);
    CHECK(agg.dataset == "solo");
    REQUIRE(agg.indicators.size() == kAllIndicators.size());
    auto rep = report(g.recordings[0]);
    for (const auto& entry : agg.indicators) {
      auto v = indicator_value(rep, entry.indicator);
      if (!v) {
        CHECK_FALSE(entry.summary.has_value());
        CHECK(entry.missing == 1);
        continue;
      }
      REQUIRE(entry.summary.has_value());
      CHECK(entry.summary->mean == *v);
      CHECK(entry.summary->std == 0.0);
    }
  }
  SECTION("identical recordings") {
    std::mt19937_64 rng(4);
    auto series = testing_support::random_series(rng, 150, 800, 2);
    DatasetGroup g{"twins", {RRSeries(series, Unit::Milliseconds, "a"),
                             RRSeries(series, Unit::Milliseconds, "b"),
                             RRSeries(series, Unit::Milliseconds, "c")}};
    for (const auto& entry : aggregate(g).indicators) {
      if (entry.summary) CHECK(entry.summary->std == 0.0);
    }
  }
  SECTION("mean within range and quartiles ordered") {
    std::mt19937_64 rng(6);
    DatasetGroup g{"mix", {}};
    for (int i = 0; i < 9; ++i) {
      g.recordings.emplace_back(testing_support::random_series(rng, 60 + 10 * i, 800, 1 + i));
    }
    for (const auto& entry : aggregate(g).indicators) {
      REQUIRE(entry.summary.has_value());
      const auto& s = *entry.summary;
      CHECK(s.min <= s.mean);
      CHECK(s.mean <= s.max);
      CHECK(s.q1 <= s.median);
      CHECK(s.median <= s.q3);
    }
  }
  SECTION("empty group") {
    CHECK_THROWS_AS(aggregate(DatasetGroup{"none", {}}), Error);
  }
}
