#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lor/analyzer.hpp"
#include "lor/rational.hpp"

namespace lor {

struct SentenceScore {
  std::size_t sentence_index = 0;
  std::vector<std::string> aspect_path;  // root-to-node order, or {"GENERAL"}
  BigInt g;                              // aspect value
  Rational s;                            // opinion value
  int c = 1;                             // branch counter
  Rational f;                            // summarized value (g*s)/10^(c-1)
};

struct RemarkScore {
  std::vector<SentenceScore> units;
  std::vector<std::string> skipped;  // per-sentence skip reasons, for audit
  std::optional<Rational> average;   // empty when no unit was scorable

  std::size_t n() const { return units.size(); }
};

struct StudentReport {
  struct Entry {
    std::string reviewer_id;
    std::uint64_t seq = 0;
    RemarkScore score;
  };
  std::string student_id;
  std::vector<Entry> remarks;
  Rational overall;                     // mean of defined remark averages
  std::vector<std::size_t> excluded;    // indexes into remarks with no scorable unit
};

// (g*s)/10^(c-1), exact. Throws std::domain_error when g < 1, c < 1 or s
// is outside [0,10].
Rational summarize(const BigInt& g, const Rational& s, int c);

SentenceScore to_sentence_score(const SentenceAnalysis& analysis, const ScoredUnit& unit);

RemarkScore score_remark(std::vector<SentenceScore> units);

// Full pipeline for one remark text.
RemarkScore score_remark_text(const AspectTree& tree, const Lexicon& lexicon,
                              std::string_view remark, const AnalysisConfig& config);

// Unweighted mean of the defined remark averages; remarks with n = 0 are
// skipped. Throws std::runtime_error("no scorable remarks") if none remain.
Rational aggregate_student(std::span<const RemarkScore> remark_scores);

}  // namespace lor
