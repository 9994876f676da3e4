#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "lor/aspect_tree.hpp"
#include "lor/lexicon.hpp"

namespace lor {

struct AnalysisConfig {
  bool general_enabled = true;  // score aspect-free sentences against the identity aspect
  int modifier_window = 3;      // max token gap between a modifier and its opinion term
  bool emit_trace = false;      // CLI-level verbose traversal output
};

struct Sentence {
  std::size_t index = 0;  // 0-based position within the remark
  std::string raw;        // text after marker stripping, before tokenization
  std::vector<std::string> tokens;
};

// One scorable unit: an aspect match (or the GENERAL fallback) paired with
// the sentence's opinion value.
struct ScoredUnit {
  bool general = false;
  const AspectNode* node = nullptr;  // null for GENERAL
  TokenSpan aspect_span;             // empty for GENERAL
  TraversalResult traversal;         // value 1 / count 1 / path {"GENERAL"} for GENERAL
  Rational opinion;                  // shared op_value of the sentence
  std::vector<OpinionTermMatch> terms;
};

struct SentenceAnalysis {
  Sentence sentence;
  std::vector<ScoredUnit> units;
  std::string skipped_reason;  // non-empty iff units is empty

  bool skipped() const { return units.empty(); }
};

// Splits on '.', '!', '?', strips leading enumeration markers ("i)", "(1)",
// "1." and the like), drops empty fragments, keeps a trailing unterminated
// fragment.
std::vector<Sentence> split_sentences(std::string_view remark);

// Lowercase tokens split on whitespace with surrounding punctuation
// stripped; internal hyphens survive ("co-curricular" is one token).
std::vector<std::string> tokenize(std::string_view text);

SentenceAnalysis analyze_sentence(const AspectTree& tree, const Lexicon& lexicon,
                                  Sentence sentence, const AnalysisConfig& config);

std::vector<SentenceAnalysis> analyze_remark(const AspectTree& tree, const Lexicon& lexicon,
                                             std::string_view remark,
                                             const AnalysisConfig& config);

}  // namespace lor
