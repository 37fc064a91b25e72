#include "hrvtvm/series.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <system_error>

#include "hrvtvm/error.hpp"

namespace hrvtvm {

namespace fs = std::filesystem;

std::optional<Unit> parse_unit(std::string_view text) noexcept {
  if (text == "ms") return Unit::Milliseconds;
  if (text == "s") return Unit::Seconds;
  if (text == "none") return Unit::Unitless;
  return std::nullopt;
}

std::string_view to_string(Unit unit) noexcept {
  switch (unit) {
    case Unit::Milliseconds: return "ms";
    case Unit::Seconds: return "s";
    case Unit::Unitless: return "none";
  }
  return "none";
}

RRSeries::RRSeries(std::vector<double> intervals, Unit unit, std::string source_id)
    : intervals_(std::move(intervals)), unit_(unit), source_id_(std::move(source_id)) {
  for (std::size_t i = 0; i < intervals_.size(); ++i) {
    double v = intervals_[i];
    if (!std::isfinite(v) || v <= 0.0) {
      std::ostringstream msg;
      msg << "interval " << (i + 1) << " must be finite and positive, got " << v;
      throw Error(ErrorKind::Validation, msg.str());
    }
  }
  if (intervals_.size() < kMinSeriesLength) {
    std::ostringstream msg;
    msg << "series has " << intervals_.size() << " intervals; at least " << kMinSeriesLength
        << " are required";
    throw Error(ErrorKind::TooShort, msg.str());
  }
}

namespace {

std::string_view trim(std::string_view s) {
  auto is_space = [](char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; };
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

double parse_token(std::string_view token, std::size_t line) {
  std::string_view digits = token;
  if (!digits.empty() && digits.front() == '+') digits.remove_prefix(1);
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (ec != std::errc() || ptr != digits.data() + digits.size() || digits.empty()) {
    throw Error(ErrorKind::Parse,
                "line " + std::to_string(line) + ": not a number: '" + std::string(token) + "'",
                line);
  }
  if (!std::isfinite(value) || value <= 0.0) {
    throw Error(ErrorKind::Validation,
                "line " + std::to_string(line) + ": interval must be finite and positive, got '" +
                    std::string(token) + "'",
                line);
  }
  return value;
}

void parse_line(std::string_view line, std::size_t line_no, std::vector<double>& out) {
  if (line.find(',') != std::string_view::npos) {
    std::size_t start = 0;
    while (true) {
      std::size_t comma = line.find(',', start);
      std::string_view field =
          trim(line.substr(start, comma == std::string_view::npos ? line.npos : comma - start));
      bool last = comma == std::string_view::npos;
      if (field.empty()) {
        // a trailing comma is tolerated, an empty field in the middle is not
        if (!last) throw Error(ErrorKind::Parse, "line " + std::to_string(line_no) + ": empty field", line_no);
      } else {
        out.push_back(parse_token(field, line_no));
      }
      if (last) break;
      start = comma + 1;
    }
    return;
  }
  std::istringstream words{std::string(line)};
  std::string word;
  while (words >> word) out.push_back(parse_token(word, line_no));
}

}  // namespace

RRSeries parse_rr_text(std::string_view text, Unit unit, std::string source_id) {
  std::vector<double> values;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    std::string_view raw = text.substr(pos, eol == std::string_view::npos ? text.npos : eol - pos);
    ++line_no;
    std::string_view line = trim(raw);
    if (!line.empty() && line.front() != '#') parse_line(line, line_no, values);
    if (eol == std::string_view::npos) break;
    pos = eol + 1;
  }
  return RRSeries(std::move(values), unit, std::move(source_id));
}

RRSeries load_rr_series(const fs::path& path, Unit unit) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Io, "cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw Error(ErrorKind::Io, "cannot read " + path.string());
  try {
    return parse_rr_text(buffer.str(), unit, path.stem().string());
  } catch (const Error& e) {
    throw Error(e.kind(), path.string() + ": " + e.what(), e.line());
  }
}

namespace {

bool accepted_extension(const fs::path& p) {
  std::string ext = p.extension().string();
  std::transform(ext.begin(), ext.end(), ext.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return ext == ".txt" || ext == ".csv";
}

std::string directory_name(const fs::path& dir) {
  fs::path p = dir.lexically_normal();
  if (!p.has_filename()) p = p.parent_path();
  std::string name = p.filename().string();
  if (name.empty() || name == "." || name == "..") {
    std::error_code ec;
    fs::path canon = fs::weakly_canonical(dir, ec);
    if (!ec) name = canon.filename().string();
  }
  return name;
}

}  // namespace

DatasetGroup load_dataset_group(const fs::path& dir, Unit unit) {
  std::error_code ec;
  if (!fs::is_directory(dir, ec)) throw Error(ErrorKind::Io, "not a directory: " + dir.string());

  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir, ec)) {
    if (entry.is_regular_file() && accepted_extension(entry.path())) files.push_back(entry.path());
  }
  if (ec) throw Error(ErrorKind::Io, "cannot list " + dir.string() + ": " + ec.message());
  if (files.empty()) {
    throw Error(ErrorKind::EmptyDirectory, "no .txt or .csv files in " + dir.string());
  }
  std::sort(files.begin(), files.end(), [](const fs::path& a, const fs::path& b) {
    return a.filename().string() < b.filename().string();
  });

  DatasetGroup group;
  group.name = directory_name(dir);
  group.recordings.reserve(files.size());
  for (const auto& f : files) group.recordings.push_back(load_rr_series(f, unit));
  return group;
}

std::string format_rr_text(const RRSeries& series) {
  std::string out;
  char buf[64];
  for (double v : series.intervals()) {
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    out.append(buf, ptr);
    out.push_back('\n');
  }
  return out;
}

std::vector<RRSeries> split_segments(const RRSeries& series, std::size_t segment_len) {
  if (segment_len < kMinSeriesLength) {
    throw Error(ErrorKind::InvalidArgument,
                "segment length must be at least " + std::to_string(kMinSeriesLength));
  }
  std::vector<RRSeries> segments;
  auto all = series.intervals();
  for (std::size_t start = 0, k = 0; start + segment_len <= all.size(); start += segment_len, ++k) {
    auto part = all.subspan(start, segment_len);
    segments.emplace_back(std::vector<double>(part.begin(), part.end()), series.unit(),
                          series.source_id() + "#" + std::to_string(k));
  }
  return segments;
}

}  // namespace hrvtvm
