#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hrvtvm {

/// Unit tag carried by a series. Metadata only: every computation downstream
/// works in whatever unit the intervals were given in.
enum class Unit { Milliseconds, Seconds, Unitless };

/// Accepts "ms", "s" and "none".
std::optional<Unit> parse_unit(std::string_view text) noexcept;
std::string_view to_string(Unit unit) noexcept;

/// Minimum number of intervals for a series to produce one difference-plot point.
inline constexpr std::size_t kMinSeriesLength = 3;

/// Immutable RR-interval series. Every interval is finite and strictly
/// positive, and there are at least kMinSeriesLength of them.
class RRSeries {
 public:
  /// Throws Error{Validation} naming the 1-based position of the first bad
  /// interval, or Error{TooShort}.
  explicit RRSeries(std::vector<double> intervals, Unit unit = Unit::Milliseconds,
                    std::string source_id = {});

  std::span<const double> intervals() const noexcept { return intervals_; }
  std::size_t size() const noexcept { return intervals_.size(); }
  Unit unit() const noexcept { return unit_; }
  const std::string& source_id() const noexcept { return source_id_; }

 private:
  std::vector<double> intervals_;
  Unit unit_;
  std::string source_id_;
};

/// Recordings belonging to one dataset (e.g. one PhysioNet database).
struct DatasetGroup {
  std::string name;
  std::vector<RRSeries> recordings;
};

/// Parses RR text: one interval per line, or a single comma/whitespace
/// separated row. Blank lines and lines starting with '#' are skipped.
RRSeries parse_rr_text(std::string_view text, Unit unit, std::string source_id);

/// Loads a file via parse_rr_text; source_id is the file stem. Error messages
/// are prefixed with the path.
RRSeries load_rr_series(const std::filesystem::path& path, Unit unit);

/// Loads every .txt/.csv file in `dir` (lexicographic order, non-recursive).
/// The group is named after the directory.
DatasetGroup load_dataset_group(const std::filesystem::path& dir, Unit unit);

/// One interval per line at round-trip precision; parse_rr_text reads it back
/// to the identical sequence.
std::string format_rr_text(const RRSeries& series);

/// Non-overlapping windows of `segment_len` intervals; a trailing remainder
/// shorter than `segment_len` is dropped. Segment ids are "<id>#<k>".
std::vector<RRSeries> split_segments(const RRSeries& series, std::size_t segment_len);

}  // namespace hrvtvm
