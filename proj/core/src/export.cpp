#include "hrvtvm/export.hpp"

#include <cstdio>
#include <cstdlib>
#include <string_view>
#include <variant>
#include <vector>

#include <json.hpp>

namespace hrvtvm {

namespace {

using Null = std::monostate;
using Field = std::variant<Null, std::string, std::uint64_t, double, std::vector<double>>;

// Column names plus rows; rendered either as CSV or as a JSON array of objects.
struct Table {
  std::vector<std::string_view> columns;
  std::vector<std::vector<Field>> rows;
};

double rounded(double value) { return std::strtod(format_number(value).c_str(), nullptr); }

std::string csv_field(const Field& f) {
  struct Visitor {
    std::string operator()(Null) const { return {}; }
    std::string operator()(const std::string& s) const {
      if (s.find_first_of(",\"\n") == std::string::npos) return s;
      std::string quoted = "\"";
      for (char c : s) {
        if (c == '"') quoted.push_back('"');
        quoted.push_back(c);
      }
      quoted.push_back('"');
      return quoted;
    }
    std::string operator()(std::uint64_t v) const { return std::to_string(v); }
    std::string operator()(double v) const { return format_number(v); }
    std::string operator()(const std::vector<double>& vs) const {
      std::string joined;
      for (std::size_t i = 0; i < vs.size(); ++i) {
        if (i) joined.push_back(';');
        joined += format_number(vs[i]);
      }
      return joined;
    }
  };
  return std::visit(Visitor{}, f);
}

nlohmann::ordered_json json_field(const Field& f) {
  struct Visitor {
    nlohmann::ordered_json operator()(Null) const { return nullptr; }
    nlohmann::ordered_json operator()(const std::string& s) const { return s; }
    nlohmann::ordered_json operator()(std::uint64_t v) const { return v; }
    nlohmann::ordered_json operator()(double v) const { return rounded(v); }
    nlohmann::ordered_json operator()(const std::vector<double>& vs) const {
      auto arr = nlohmann::ordered_json::array();
      for (double v : vs) arr.push_back(rounded(v));
      return arr;
    }
  };
  return std::visit(Visitor{}, f);
}

void render(std::ostream& out, const Table& table, OutputFormat format) {
  if (format == OutputFormat::Csv) {
    for (std::size_t i = 0; i < table.columns.size(); ++i) {
      if (i) out << ',';
      out << table.columns[i];
    }
    out << '\n';
    for (const auto& row : table.rows) {
      for (std::size_t i = 0; i < row.size(); ++i) {
        if (i) out << ',';
        out << csv_field(row[i]);
      }
      out << '\n';
    }
    return;
  }
  auto doc = nlohmann::ordered_json::array();
  for (const auto& row : table.rows) {
    nlohmann::ordered_json obj = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < row.size(); ++i) {
      obj[std::string(table.columns[i])] = json_field(row[i]);
    }
    doc.push_back(std::move(obj));
  }
  out << doc.dump(2) << '\n';
}

Field optional_field(const std::optional<double>& v) {
  return v ? Field{*v} : Field{Null{}};
}

std::string quadrant_label(Quadrant q) { return std::string(to_string(q)); }

}  // namespace

std::string format_number(double value) {
  if (value == 0.0) value = 0.0;  // no "-0"
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9g", value);
  return buf;
}

void write_sodp_points(std::ostream& out, std::span<const SodpPoint> points, OutputFormat format) {
  Table t{{"index", "x", "y", "quadrant"}, {}};
  for (const auto& p : points) {
    t.rows.push_back({std::uint64_t{p.index}, p.x, p.y, quadrant_label(p.quadrant)});
  }
  render(out, t, format);
}

void write_tvm_points(std::ostream& out, std::span<const TvmPoint> points, OutputFormat format) {
  Table t{{"index", "x", "y", "d_co", "le", "l", "z", "quadrant"}, {}};
  for (const auto& p : points) {
    t.rows.push_back({std::uint64_t{p.base.index}, p.base.x, p.base.y, p.d_co, p.le, p.l, p.z,
                      quadrant_label(p.base.quadrant)});
  }
  render(out, t, format);
}

void write_reports(std::ostream& out, std::span<const IndicatorReport> reports,
                   OutputFormat format) {
  Table t{{"source_id", "ctm", "cctm1", "cctm2", "cctm3", "cctm4", "d", "etv", "etv1", "etv2",
           "etv3", "etv4", "r_ctm", "r_d", "nx", "ny", "nz"},
          {}};
  for (const auto& r : reports) {
    t.rows.push_back({r.source_id, r.ctm, r.cctm[0], r.cctm[1], r.cctm[2], r.cctm[3],
                      optional_field(r.d), r.etv_global, r.etv_quadrant[0], r.etv_quadrant[1],
                      r.etv_quadrant[2], r.etv_quadrant[3], r.params.r_ctm, r.params.r_d,
                      std::uint64_t{r.params.divisions.nx}, std::uint64_t{r.params.divisions.ny},
                      std::uint64_t{r.params.divisions.nz}});
  }
  render(out, t, format);
}

void write_sweep(std::ostream& out, const SweepTable& table, OutputFormat format) {
  Table t{{"dataset", "indicator", "r", "value"}, {}};
  const std::string indicator(to_string(table.indicator));
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < table.r_values.size(); ++i) {
      t.rows.push_back({row.dataset, indicator, table.r_values[i], optional_field(row.values[i])});
    }
  }
  render(out, t, format);
}

void write_aggregates(std::ostream& out, std::span<const GroupAggregate> aggregates,
                      OutputFormat format) {
  Table t{{"dataset", "indicator", "n", "missing", "mean", "std", "min", "q1", "median", "q3",
           "max", "values"},
          {}};
  for (const auto& agg : aggregates) {
    for (const auto& entry : agg.indicators) {
      std::vector<Field> row{agg.dataset, std::string(to_string(entry.indicator)),
                             std::uint64_t{entry.values.size()}, std::uint64_t{entry.missing}};
      if (entry.summary) {
        const Summary& s = *entry.summary;
        for (double v : {s.mean, s.std, s.min, s.q1, s.median, s.q3, s.max}) row.emplace_back(v);
      } else {
        row.insert(row.end(), 7, Field{Null{}});
      }
      row.emplace_back(entry.values);
      t.rows.push_back(std::move(row));
    }
  }
  render(out, t, format);
}

void write_classification(std::ostream& out, std::span<const ClassificationRow> rows,
                          OutputFormat format) {
  Table t{{"pair", "indicator", "ri"}, {}};
  for (const auto& r : rows) {
    t.rows.push_back({r.pair, std::string(to_string(r.indicator)), r.ri});
  }
  render(out, t, format);
}

}  // namespace hrvtvm
