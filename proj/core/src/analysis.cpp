#include "hrvtvm/analysis.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>

#include "hrvtvm/error.hpp"

namespace hrvtvm {

namespace {

constexpr std::array<std::string_view, 11> kIndicatorNames = {
    "ctm", "d", "cctm1", "cctm2", "cctm3", "cctm4", "etv", "etv1", "etv2", "etv3", "etv4",
};

std::size_t quadrant_slot(Indicator indicator) {
  switch (indicator) {
    case Indicator::Cctm1: case Indicator::Etv1: return 0;
    case Indicator::Cctm2: case Indicator::Etv2: return 1;
    case Indicator::Cctm3: case Indicator::Etv3: return 2;
    case Indicator::Cctm4: case Indicator::Etv4: return 3;
    default: return 0;
  }
}

void check_radius(double r, const char* what) {
  if (!std::isfinite(r) || r <= 0.0) {
    throw Error(ErrorKind::InvalidArgument, std::string(what) + " must be a positive number");
  }
}

}  // namespace

std::string_view to_string(Indicator indicator) noexcept {
  return kIndicatorNames[static_cast<std::size_t>(indicator)];
}

std::optional<Indicator> parse_indicator(std::string_view text) noexcept {
  for (std::size_t i = 0; i < kIndicatorNames.size(); ++i) {
    if (kIndicatorNames[i] == text) return static_cast<Indicator>(i);
  }
  return std::nullopt;
}

bool depends_on_radius(Indicator indicator) noexcept {
  switch (indicator) {
    case Indicator::Ctm:
    case Indicator::D:
    case Indicator::Cctm1:
    case Indicator::Cctm2:
    case Indicator::Cctm3:
    case Indicator::Cctm4:
      return true;
    default:
      return false;
  }
}

std::optional<double> radius_indicator(std::span<const SodpPoint> points, Indicator indicator,
                                       double r) {
  switch (indicator) {
    case Indicator::Ctm:
      return ctm(points, r);
    case Indicator::D:
      if (count_within_radius(points, r).within == 0) return std::nullopt;
      return mean_distance_d(points, r);
    case Indicator::Cctm1:
    case Indicator::Cctm2:
    case Indicator::Cctm3:
    case Indicator::Cctm4:
      return cctm(points, r)[quadrant_slot(indicator)];
    default:
      throw Error(ErrorKind::InvalidArgument,
                  std::string(to_string(indicator)) + " does not depend on a radius");
  }
}

IndicatorReport report(const RRSeries& series, const IndicatorParams& params) {
  check_radius(params.r_ctm, "r_ctm");
  check_radius(params.r_d, "r_d");
  validate(params.divisions);

  IndicatorReport rep;
  rep.source_id = series.source_id();
  rep.params = params;

  auto points = second_order_diff(series);
  rep.ctm = ctm(points, params.r_ctm);
  rep.cctm = cctm(points, params.r_ctm);
  rep.d = radius_indicator(points, Indicator::D, params.r_d);

  auto lifted = build_tvm_points(points);
  rep.etv_global = temporal_variation_entropy(build_grid(lifted, params.divisions));
  rep.etv_quadrant = quadrant_etv(lifted, params.divisions);
  return rep;
}

std::vector<IndicatorReport> group_reports(const DatasetGroup& group,
                                           const IndicatorParams& params) {
  std::vector<IndicatorReport> out;
  out.reserve(group.recordings.size());
  for (const auto& rec : group.recordings) out.push_back(report(rec, params));
  return out;
}

std::optional<double> indicator_value(const IndicatorReport& rep, Indicator indicator) {
  switch (indicator) {
    case Indicator::Ctm: return rep.ctm;
    case Indicator::D: return rep.d;
    case Indicator::Cctm1:
    case Indicator::Cctm2:
    case Indicator::Cctm3:
    case Indicator::Cctm4: return rep.cctm[quadrant_slot(indicator)];
    case Indicator::Etv: return rep.etv_global;
    case Indicator::Etv1:
    case Indicator::Etv2:
    case Indicator::Etv3:
    case Indicator::Etv4: return rep.etv_quadrant[quadrant_slot(indicator)];
  }
  return std::nullopt;
}

std::vector<double> default_r_grid() { return make_r_grid(0.5, 10.0, 0.5); }

std::vector<double> make_r_grid(double start, double stop, double step) {
  if (!std::isfinite(start) || !std::isfinite(stop) || !std::isfinite(step) || start <= 0.0 ||
      step <= 0.0 || stop < start) {
    throw Error(ErrorKind::InvalidArgument,
                "radius grid needs 0 < start <= stop and step > 0");
  }
  const double span = (stop - start) / step;
  if (span > 1e6) throw Error(ErrorKind::InvalidArgument, "radius grid has too many points");
  const auto count = static_cast<std::size_t>(std::floor(span + 1e-9)) + 1;
  std::vector<double> grid(count);
  for (std::size_t i = 0; i < count; ++i) grid[i] = start + static_cast<double>(i) * step;
  return grid;
}

std::vector<double> parse_r_grid(std::string_view text) {
  std::array<double, 3> parts{};
  std::size_t filled = 0;
  std::size_t pos = 0;
  auto fail = [&] {
    return Error(ErrorKind::InvalidArgument,
                 "radius grid must look like start:stop:step, got '" + std::string(text) + "'");
  };
  while (true) {
    std::size_t colon = text.find(':', pos);
    std::string_view field = text.substr(pos, colon == text.npos ? text.npos : colon - pos);
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
    if (filled == 3 || field.empty() || ec != std::errc() || ptr != field.data() + field.size()) {
      throw fail();
    }
    parts[filled++] = v;
    if (colon == text.npos) break;
    pos = colon + 1;
  }
  if (filled != 3) throw fail();
  return make_r_grid(parts[0], parts[1], parts[2]);
}

SweepTable sweep_r(std::span<const DatasetGroup> groups, Indicator indicator,
                   std::span<const double> r_values) {
  if (groups.empty()) throw Error(ErrorKind::EmptyInput, "sweep needs at least one dataset");
  if (r_values.empty()) throw Error(ErrorKind::EmptyInput, "sweep needs at least one radius");
  if (!depends_on_radius(indicator)) {
    throw Error(ErrorKind::InvalidArgument,
                std::string(to_string(indicator)) + " does not depend on a radius");
  }
  for (std::size_t i = 0; i < r_values.size(); ++i) {
    check_radius(r_values[i], "radius");
    if (i > 0 && !(r_values[i] > r_values[i - 1])) {
      throw Error(ErrorKind::InvalidArgument, "radius grid must be strictly ascending");
    }
  }

  SweepTable table;
  table.indicator = indicator;
  table.r_values.assign(r_values.begin(), r_values.end());

  std::vector<const DatasetGroup*> ordered;
  for (const auto& g : groups) ordered.push_back(&g);
  std::stable_sort(ordered.begin(), ordered.end(),
                   [](const DatasetGroup* a, const DatasetGroup* b) { return a->name < b->name; });

  for (const DatasetGroup* g : ordered) {
    std::vector<std::vector<SodpPoint>> clouds;
    clouds.reserve(g->recordings.size());
    for (const auto& rec : g->recordings) clouds.push_back(second_order_diff(rec));

    SweepRow row;
    row.dataset = g->name;
    for (double r : r_values) {
      double sum = 0.0;
      std::size_t used = 0;
      for (const auto& cloud : clouds) {
        if (auto v = radius_indicator(cloud, indicator, r)) {
          sum += *v;
          ++used;
        }
      }
      row.values.push_back(used ? std::optional<double>(sum / static_cast<double>(used))
                                : std::nullopt);
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

Summary summarize(std::span<const double> values) {
  if (values.empty()) throw Error(ErrorKind::EmptyInput, "cannot summarize an empty sample");
  std::vector<double> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());
  const std::size_t n = sorted.size();

  Summary s;
  s.count = n;
  s.min = sorted.front();
  s.max = sorted.back();

  double sum = 0.0;
  for (double v : values) sum += v;
  // rounding can push sum/n just outside [min, max]
  s.mean = std::clamp(sum / static_cast<double>(n), s.min, s.max);

  if (n >= 2) {
    double ss = 0.0;
    for (double v : values) ss += (v - s.mean) * (v - s.mean);
    s.std = std::sqrt(ss / static_cast<double>(n - 1));
  }

  auto quantile = [&](double p) {
    const double h = static_cast<double>(n - 1) * p;
    const auto lo = static_cast<std::size_t>(std::floor(h));
    if (lo + 1 >= n) return sorted[n - 1];
    return sorted[lo] + (h - static_cast<double>(lo)) * (sorted[lo + 1] - sorted[lo]);
  };
  s.q1 = quantile(0.25);
  s.median = quantile(0.5);
  s.q3 = quantile(0.75);
  return s;
}

std::vector<double> feature_values(std::span<const IndicatorReport> reports, Indicator indicator) {
  std::vector<double> out;
  out.reserve(reports.size());
  for (const auto& rep : reports) {
    if (auto v = indicator_value(rep, indicator)) out.push_back(*v);
  }
  return out;
}

GroupAggregate aggregate_reports(std::string dataset, std::span<const IndicatorReport> reports) {
  if (reports.empty()) {
    throw Error(ErrorKind::EmptyInput, "dataset '" + dataset + "' has no recordings");
  }
  GroupAggregate agg;
  agg.dataset = std::move(dataset);
  for (Indicator ind : kAllIndicators) {
    IndicatorSummary entry;
    entry.indicator = ind;
    entry.values = feature_values(reports, ind);
    entry.missing = reports.size() - entry.values.size();
    if (!entry.values.empty()) entry.summary = summarize(entry.values);
    agg.indicators.push_back(std::move(entry));
  }
  return agg;
}

GroupAggregate aggregate(const DatasetGroup& group, const IndicatorParams& params) {
  if (group.recordings.empty()) {
    throw Error(ErrorKind::EmptyInput, "dataset '" + group.name + "' has no recordings");
  }
  auto reports = group_reports(group, params);
  return aggregate_reports(group.name, reports);
}

}  // namespace hrvtvm
