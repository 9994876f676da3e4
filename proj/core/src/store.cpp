#include "lor/store.hpp"

#include <fcntl.h>
#include <sys/file.h>
#include <unistd.h>

#include <algorithm>
#include <cerrno>
#include <cstring>
#include <fstream>
#include <stdexcept>
#include <string>

namespace lor {

std::string escape_field(std::string_view raw) {
  std::string out;
  out.reserve(raw.size());
  for (char ch : raw) {
    switch (ch) {
      case '\\': out += "\\\\"; break;
      case '\t': out += "\\t"; break;
      case '\n': out += "\\n"; break;
      default: out.push_back(ch);
    }
  }
  return out;
}

std::string unescape_field(std::string_view escaped) {
  std::string out;
  out.reserve(escaped.size());
  for (std::size_t i = 0; i < escaped.size(); ++i) {
    if (escaped[i] != '\\') {
      out.push_back(escaped[i]);
      continue;
    }
    if (i + 1 == escaped.size()) {
      throw std::invalid_argument("dangling backslash");
    }
    switch (escaped[++i]) {
      case '\\': out.push_back('\\'); break;
      case 't': out.push_back('\t'); break;
      case 'n': out.push_back('\n'); break;
      default: throw std::invalid_argument(std::string("bad escape \\") + escaped[i]);
    }
  }
  return out;
}

namespace {

class FileLock {
 public:
  explicit FileLock(const std::filesystem::path& path) {
    fd_ = ::open(path.c_str(), O_CREAT | O_RDWR, 0644);
    if (fd_ < 0) {
      throw std::runtime_error("cannot open lock file " + path.string() + ": " +
                               std::strerror(errno));
    }
    if (::flock(fd_, LOCK_EX) != 0) {
      int err = errno;
      ::close(fd_);
      throw std::runtime_error("cannot lock " + path.string() + ": " + std::strerror(err));
    }
  }
  ~FileLock() {
    ::flock(fd_, LOCK_UN);
    ::close(fd_);
  }
  FileLock(const FileLock&) = delete;
  FileLock& operator=(const FileLock&) = delete;

 private:
  int fd_;
};

// Parses one complete record line; line_no is 1-based for error messages.
RemarkRecord parse_record(const std::string& line, std::size_t line_no) {
  RemarkRecord record;
  std::size_t pos = 0;
  std::string fields[4];
  for (int i = 0; i < 3; ++i) {
    std::size_t tab = line.find('\t', pos);
    if (tab == std::string::npos) {
      throw std::runtime_error("store line " + std::to_string(line_no) +
                               ": expected 4 tab-separated fields");
    }
    fields[i] = line.substr(pos, tab - pos);
    pos = tab + 1;
  }
  fields[3] = line.substr(pos);

  try {
    record.seq = std::stoull(fields[0]);
  } catch (const std::exception&) {
    throw std::runtime_error("store line " + std::to_string(line_no) + ": bad sequence '" +
                             fields[0] + "'");
  }
  record.student_id = fields[1];
  record.reviewer_id = fields[2];
  try {
    record.remark_text = unescape_field(fields[3]);
  } catch (const std::invalid_argument& err) {
    throw std::runtime_error("store line " + std::to_string(line_no) + ": " + err.what());
  }
  if (record.student_id.empty() || record.reviewer_id.empty() || record.remark_text.empty()) {
    throw std::runtime_error("store line " + std::to_string(line_no) + ": empty field");
  }
  return record;
}

}  // namespace

RemarkStore::RemarkStore(std::filesystem::path path) : path_(std::move(path)) {}

std::uint64_t RemarkStore::scan_max_seq() const {
  std::uint64_t max_seq = 0;
  for (const RemarkRecord& record : all()) {
    max_seq = std::max(max_seq, record.seq);
  }
  return max_seq;
}

std::uint64_t RemarkStore::put(std::string_view student_id, std::string_view reviewer_id,
                               std::string_view remark_text) {
  if (student_id.empty() || reviewer_id.empty() || remark_text.empty()) {
    throw std::invalid_argument("student_id, reviewer_id and remark_text must be non-empty");
  }

  FileLock lock(path_.string() + ".lock");
  std::uint64_t seq = scan_max_seq() + 1;

  std::string line = std::to_string(seq);
  line += '\t';
  line += escape_field(student_id);
  line += '\t';
  line += escape_field(reviewer_id);
  line += '\t';
  line += escape_field(remark_text);
  line += '\n';

  int fd = ::open(path_.c_str(), O_CREAT | O_WRONLY | O_APPEND, 0644);
  if (fd < 0) {
    throw std::runtime_error("cannot open store " + path_.string() + ": " +
                             std::strerror(errno));
  }
  ssize_t written = ::write(fd, line.data(), line.size());
  int write_errno = errno;
  ::fsync(fd);
  ::close(fd);
  if (written != static_cast<ssize_t>(line.size())) {
    throw std::runtime_error("short write to store " + path_.string() + ": " +
                             std::strerror(write_errno));
  }
  return seq;
}

std::vector<RemarkRecord> RemarkStore::all() const {
  std::vector<RemarkRecord> records;
  std::ifstream in(path_, std::ios::binary);
  if (!in) {
    if (!std::filesystem::exists(path_)) {
      return records;  // no store yet, nothing recorded
    }
    throw std::runtime_error("cannot read store " + path_.string());
  }

  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (in.eof()) {
      break;  // trailing partial line (no newline): a writer may be mid-append
    }
    if (line.empty()) continue;
    records.push_back(parse_record(line, line_no));
  }
  return records;
}

std::vector<RemarkRecord> RemarkStore::list(std::string_view student_id) const {
  std::vector<RemarkRecord> records;
  for (RemarkRecord& record : all()) {
    if (record.student_id == student_id) {
      records.push_back(std::move(record));
    }
  }
  return records;
}

}  // namespace lor
