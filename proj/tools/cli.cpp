#include "cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include <CLI11.hpp>

#include "hrvtvm/hrvtvm.hpp"

namespace hrvtvm::cli {

namespace fs = std::filesystem;

namespace {

struct RunConfig {
  std::vector<std::string> inputs;
  std::string unit = "ms";
  double r_ctm = 3.0;
  double r_d = 6.0;
  std::string divisions = "10,10,10";
  std::string r_grid = "0.5:10:0.5";
  std::size_t segment_len = 0;
  std::string out;
  std::string format = "csv";
  std::vector<std::string> indicators;
};

Unit unit_of(const RunConfig& cfg) { return *parse_unit(cfg.unit); }

OutputFormat format_of(const RunConfig& cfg) {
  return cfg.format == "json" ? OutputFormat::Json : OutputFormat::Csv;
}

IndicatorParams params_of(const RunConfig& cfg) {
  return IndicatorParams{cfg.r_ctm, cfg.r_d, parse_divisions(cfg.divisions)};
}

std::vector<RRSeries> apply_segments(std::vector<RRSeries> recordings, std::size_t segment_len) {
  if (segment_len == 0) return recordings;
  std::vector<RRSeries> out;
  for (const auto& rec : recordings) {
    auto parts = split_segments(rec, segment_len);
    std::move(parts.begin(), parts.end(), std::back_inserter(out));
  }
  return out;
}

// Files load as one recording each, directories contribute every file inside.
std::vector<RRSeries> load_recordings(const RunConfig& cfg) {
  std::vector<RRSeries> all;
  for (const auto& input : cfg.inputs) {
    fs::path p(input);
    if (fs::is_directory(p)) {
      auto group = load_dataset_group(p, unit_of(cfg));
      std::move(group.recordings.begin(), group.recordings.end(), std::back_inserter(all));
    } else {
      all.push_back(load_rr_series(p, unit_of(cfg)));
    }
  }
  all = apply_segments(std::move(all), cfg.segment_len);
  std::stable_sort(all.begin(), all.end(), [](const RRSeries& a, const RRSeries& b) {
    return a.source_id() < b.source_id();
  });
  return all;
}

std::vector<DatasetGroup> load_groups(const RunConfig& cfg) {
  std::vector<DatasetGroup> groups;
  for (const auto& input : cfg.inputs) {
    auto group = load_dataset_group(input, unit_of(cfg));
    group.recordings = apply_segments(std::move(group.recordings), cfg.segment_len);
    if (group.recordings.empty()) {
      throw Error(ErrorKind::EmptyInput,
                  "dataset '" + group.name + "' has no segment of the requested length");
    }
    groups.push_back(std::move(group));
  }
  return groups;
}

void emit(const RunConfig& cfg, const std::string& payload, std::ostream& out) {
  if (cfg.out.empty()) {
    out << payload;
    return;
  }
  std::ofstream file(cfg.out, std::ios::binary | std::ios::trunc);
  if (!file) throw Error(ErrorKind::Io, "cannot write " + cfg.out);
  file << payload;
  file.close();
  if (!file) throw Error(ErrorKind::Io, "failed writing " + cfg.out);
}

void write_file(const fs::path& path, const std::string& payload) {
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw Error(ErrorKind::Io, "cannot write " + path.string());
  file << payload;
  file.close();
  if (!file) throw Error(ErrorKind::Io, "failed writing " + path.string());
}

std::vector<Indicator> indicators_of(const RunConfig& cfg, std::vector<Indicator> fallback) {
  if (cfg.indicators.empty()) return fallback;
  std::vector<Indicator> out;
  for (const auto& name : cfg.indicators) out.push_back(*parse_indicator(name));
  return out;
}

void cmd_indicators(const RunConfig& cfg, std::ostream& out) {
  const auto params = params_of(cfg);
  std::vector<IndicatorReport> reports;
  for (const auto& rec : load_recordings(cfg)) reports.push_back(report(rec, params));
  std::ostringstream buf;
  write_reports(buf, reports, format_of(cfg));
  emit(cfg, buf.str(), out);
}

void cmd_points(const RunConfig& cfg) {
  const auto recordings = load_recordings(cfg);
  std::set<std::string> seen;
  for (const auto& rec : recordings) {
    if (!seen.insert(rec.source_id()).second) {
      throw Error(ErrorKind::InvalidArgument,
                  "two recordings share the id '" + rec.source_id() + "'");
    }
  }

  std::error_code ec;
  fs::create_directories(cfg.out, ec);
  if (ec) throw Error(ErrorKind::Io, "cannot create " + cfg.out + ": " + ec.message());

  const auto format = format_of(cfg);
  const std::string ext = format == OutputFormat::Json ? ".json" : ".csv";
  for (const auto& rec : recordings) {
    auto points = second_order_diff(rec);
    auto lifted = build_tvm_points(points);
    std::ostringstream flat, solid;
    write_sodp_points(flat, points, format);
    write_tvm_points(solid, lifted, format);
    write_file(fs::path(cfg.out) / (rec.source_id() + ".sodp" + ext), flat.str());
    write_file(fs::path(cfg.out) / (rec.source_id() + ".tvm" + ext), solid.str());
  }
}

void cmd_sweep(const RunConfig& cfg, std::ostream& out) {
  const auto groups = load_groups(cfg);
  const auto grid = parse_r_grid(cfg.r_grid);
  const auto chosen = indicators_of(cfg, {Indicator::Ctm});
  std::ostringstream buf;
  if (format_of(cfg) == OutputFormat::Csv) {
    // one long table; the header is written once
    for (std::size_t i = 0; i < chosen.size(); ++i) {
      std::ostringstream part;
      write_sweep(part, sweep_r(groups, chosen[i], grid), OutputFormat::Csv);
      std::string text = part.str();
      if (i > 0) text.erase(0, text.find('\n') + 1);
      buf << text;
    }
  } else {
    if (chosen.size() != 1) {
      throw Error(ErrorKind::InvalidArgument, "json sweep output takes a single --indicator");
    }
    write_sweep(buf, sweep_r(groups, chosen.front(), grid), OutputFormat::Json);
  }
  emit(cfg, buf.str(), out);
}

void cmd_aggregate(const RunConfig& cfg, std::ostream& out) {
  const auto params = params_of(cfg);
  std::vector<GroupAggregate> aggs;
  for (const auto& g : load_groups(cfg)) aggs.push_back(aggregate(g, params));
  std::ostringstream buf;
  write_aggregates(buf, aggs, format_of(cfg));
  emit(cfg, buf.str(), out);
}

void cmd_classify(const RunConfig& cfg, std::ostream& out) {
  if (cfg.inputs.size() < 2) {
    throw Error(ErrorKind::InvalidArgument, "classify needs at least two dataset directories");
  }
  const auto params = params_of(cfg);
  const auto groups = load_groups(cfg);
  std::vector<std::vector<IndicatorReport>> reports;
  for (const auto& g : groups) reports.push_back(group_reports(g, params));

  const std::vector<Indicator> fallback(kAllIndicators.begin(), kAllIndicators.end());
  std::vector<ClassificationRow> rows;
  for (std::size_t i = 0; i < groups.size(); ++i) {
    for (std::size_t j = i + 1; j < groups.size(); ++j) {
      const std::string pair = groups[i].name + ":" + groups[j].name;
      for (Indicator ind : indicators_of(cfg, fallback)) {
        FeatureGroup a{groups[i].name, feature_values(reports[i], ind)};
        FeatureGroup b{groups[j].name, feature_values(reports[j], ind)};
        try {
          rows.push_back({pair, ind, pairwise_classify(a, b).ri});
        } catch (const Error& e) {
          throw Error(e.kind(), pair + " " + std::string(to_string(ind)) + ": " + e.what());
        }
      }
    }
  }
  std::ostringstream buf;
  write_classification(buf, rows, format_of(cfg));
  emit(cfg, buf.str(), out);
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Second-order difference plot and temporal variation measure indicators for "
               "RR-interval series"};
  app.name("hrvtvm");
  app.require_subcommand(1);

  RunConfig cfg;
  std::vector<std::string> indicator_names;
  for (Indicator ind : kAllIndicators) indicator_names.emplace_back(to_string(ind));

  auto add_common = [&](CLI::App* sub, bool radii) {
    sub->add_option("--unit", cfg.unit, "Unit of the input intervals")
        ->check(CLI::IsMember({"ms", "s", "none"}));
    sub->add_option("--segment-len", cfg.segment_len,
                    "Split each recording into non-overlapping windows of this many intervals");
    sub->add_option("--out", cfg.out, "Output path (default: standard output)");
    sub->add_option("--format", cfg.format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}));
    if (radii) {
      sub->add_option("--r-ctm", cfg.r_ctm, "Radius for CTM and CCTM")
          ->check(CLI::PositiveNumber);
      sub->add_option("--r-d", cfg.r_d, "Radius for D")->check(CLI::PositiveNumber);
      sub->add_option("--divisions", cfg.divisions, "Grid divisions NX,NY,NZ");
    }
  };

  auto* indicators = app.add_subcommand("indicators", "Per-recording indicator report");
  indicators->add_option("inputs", cfg.inputs, "RR files or directories")->required();
  add_common(indicators, true);

  auto* points = app.add_subcommand("points", "Write 2-D and 3-D scatter points per recording");
  points->add_option("inputs", cfg.inputs, "RR files or directories")->required();
  add_common(points, false);
  points->get_option("--out")->required()->description("Output directory");

  auto* sweep = app.add_subcommand("sweep", "Mean radius-dependent indicator per dataset over r");
  sweep->add_option("datasets", cfg.inputs, "Dataset directories")->required();
  add_common(sweep, false);
  sweep->add_option("--r-grid", cfg.r_grid, "Radius grid start:stop:step");
  sweep->add_option("--indicator", cfg.indicators, "ctm, d or cctm1..cctm4 (repeatable)")
      ->check(CLI::IsMember({"ctm", "d", "cctm1", "cctm2", "cctm3", "cctm4"}))
      ->delimiter(',');

  auto* aggregate_cmd =
      app.add_subcommand("aggregate", "Per-dataset summary statistics and boxplot data");
  aggregate_cmd->add_option("datasets", cfg.inputs, "Dataset directories")->required();
  add_common(aggregate_cmd, true);

  auto* classify = app.add_subcommand("classify", "Pairwise k-means classification accuracy");
  classify->add_option("datasets", cfg.inputs, "Dataset directories (two or more)")->required();
  add_common(classify, true);
  classify->add_option("--indicator", cfg.indicators, "Indicators to score (default: all)")
      ->check(CLI::IsMember(indicator_names))
      ->delimiter(',');

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    if (*indicators) cmd_indicators(cfg, out);
    if (*points) cmd_points(cfg);
    if (*sweep) cmd_sweep(cfg, out);
    if (*aggregate_cmd) cmd_aggregate(cfg, out);
    if (*classify) cmd_classify(cfg, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"hrvtvm"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace hrvtvm::cli
