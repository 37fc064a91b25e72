#pragma once

// Per-recording indicator reports, radius sweeps and per-dataset summaries.

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hrvtvm/series.hpp"
#include "hrvtvm/sodp.hpp"
#include "hrvtvm/tvm.hpp"

namespace hrvtvm {

enum class Indicator {
  Ctm,
  D,
  Cctm1,
  Cctm2,
  Cctm3,
  Cctm4,
  Etv,
  Etv1,
  Etv2,
  Etv3,
  Etv4,
};

inline constexpr std::array<Indicator, 11> kAllIndicators = {
    Indicator::Ctm,   Indicator::D,    Indicator::Cctm1, Indicator::Cctm2,
    Indicator::Cctm3, Indicator::Cctm4, Indicator::Etv,  Indicator::Etv1,
    Indicator::Etv2,  Indicator::Etv3, Indicator::Etv4,
};

std::string_view to_string(Indicator indicator) noexcept;
/// "ctm", "d", "cctm1".."cctm4", "etv", "etv1".."etv4".
std::optional<Indicator> parse_indicator(std::string_view text) noexcept;
/// True for CTM, D and CCTM1..4.
bool depends_on_radius(Indicator indicator) noexcept;

struct IndicatorParams {
  double r_ctm = 3.0;  // CTM and CCTM
  double r_d = 6.0;
  Divisions divisions{};
};

struct IndicatorReport {
  std::string source_id;
  double ctm = 0.0;
  QuadrantValues cctm{};
  std::optional<double> d;  // absent when no point lies within r_d
  double etv_global = 0.0;
  QuadrantValues etv_quadrant{};
  IndicatorParams params;
};

IndicatorReport report(const RRSeries& series, const IndicatorParams& params = {});
std::vector<IndicatorReport> group_reports(const DatasetGroup& group,
                                           const IndicatorParams& params = {});

std::optional<double> indicator_value(const IndicatorReport& report, Indicator indicator);

/// Radius-dependent indicator at radius r. Absent for D when nothing lies
/// inside r. Throws Error{InvalidArgument} for E_TV indicators.
std::optional<double> radius_indicator(std::span<const SodpPoint> points, Indicator indicator,
                                       double r);

struct SweepRow {
  std::string dataset;
  std::vector<std::optional<double>> values;  // aligned with SweepTable::r_values
};

struct SweepTable {
  Indicator indicator = Indicator::Ctm;
  std::vector<double> r_values;
  std::vector<SweepRow> rows;  // sorted by dataset name
};

/// 0.5, 1.0, ..., 10.0
std::vector<double> default_r_grid();
/// Inclusive arithmetic grid; `stop` is kept when it lies on the grid within
/// rounding. Throws Error{InvalidArgument}.
std::vector<double> make_r_grid(double start, double stop, double step);
/// Parses "start:stop:step".
std::vector<double> parse_r_grid(std::string_view text);

/// Mean of the indicator over each group's recordings at each r. Recordings
/// for which the indicator is undefined at some r are left out of that mean;
/// if none remain the entry is absent.
SweepTable sweep_r(std::span<const DatasetGroup> groups, Indicator indicator,
                   std::span<const double> r_values);

struct Summary {
  std::size_t count = 0;
  double mean = 0.0;
  double std = 0.0;  // sample (n-1); 0 when count == 1
  double min = 0.0;
  double q1 = 0.0;
  double median = 0.0;
  double q3 = 0.0;
  double max = 0.0;
};

/// Quartiles by linear interpolation between order statistics. Throws
/// Error{EmptyInput}.
Summary summarize(std::span<const double> values);

struct IndicatorSummary {
  Indicator indicator = Indicator::Ctm;
  std::vector<double> values;  // present per-recording values, recording order
  std::size_t missing = 0;
  std::optional<Summary> summary;  // absent when every value is missing
};

struct GroupAggregate {
  std::string dataset;
  std::vector<IndicatorSummary> indicators;  // kAllIndicators order
};

GroupAggregate aggregate_reports(std::string dataset, std::span<const IndicatorReport> reports);
/// Throws Error{EmptyInput} for a group without recordings.
GroupAggregate aggregate(const DatasetGroup& group, const IndicatorParams& params = {});

/// Present values of one indicator across reports.
std::vector<double> feature_values(std::span<const IndicatorReport> reports, Indicator indicator);

}  // namespace hrvtvm
