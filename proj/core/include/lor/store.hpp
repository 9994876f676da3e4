#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace lor {

struct RemarkRecord {
  std::uint64_t seq = 0;
  std::string student_id;
  std::string reviewer_id;
  std::string remark_text;
};

// Tab/newline/backslash escaping for single-line record fields.
std::string escape_field(std::string_view raw);
std::string unescape_field(std::string_view escaped);  // throws std::invalid_argument on bad escapes

// Append-only remark log: one tab-separated record per line,
// `seq \t student_id \t reviewer_id \t escaped_text`. Sequence numbers are
// global and strictly increasing, surviving process restarts. Writers take
// an advisory flock on a sidecar lock file; readers ignore a trailing
// partial line so they can run alongside a writer.
class RemarkStore {
 public:
  explicit RemarkStore(std::filesystem::path path);

  const std::filesystem::path& path() const { return path_; }

  // Validates non-empty fields, appends durably, returns the assigned seq.
  std::uint64_t put(std::string_view student_id, std::string_view reviewer_id,
                    std::string_view remark_text);

  // Records for one student in sequence order; [] for an unknown student.
  std::vector<RemarkRecord> list(std::string_view student_id) const;

  std::vector<RemarkRecord> all() const;

 private:
  std::uint64_t scan_max_seq() const;

  std::filesystem::path path_;
};

}  // namespace lor
