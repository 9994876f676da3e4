#include "lor/scoring.hpp"

#include <algorithm>
#include <stdexcept>

namespace lor {

Rational summarize(const BigInt& g, const Rational& s, int c) {
  if (c < 1) {
    throw std::domain_error("branch count must be >= 1");
  }
  if (g < 1) {
    throw std::domain_error("aspect value must be >= 1");
  }
  if (s < Rational(0) || s > Rational(10)) {
    throw std::domain_error("opinion value must be in [0,10]");
  }
  return Rational(g) * s / Rational(pow10(c - 1));
}

SentenceScore to_sentence_score(const SentenceAnalysis& analysis, const ScoredUnit& unit) {
  SentenceScore score;
  score.sentence_index = analysis.sentence.index;
  // Root-to-node order, root itself omitted ({"GENERAL"} stays as is).
  score.aspect_path.assign(unit.traversal.path.rbegin(), unit.traversal.path.rend());
  if (!unit.general && score.aspect_path.size() > 1) {
    score.aspect_path.erase(score.aspect_path.begin());
  }
  score.g = unit.traversal.aspect_value;
  score.s = unit.opinion;
  score.c = unit.traversal.branch_count;
  score.f = summarize(score.g, score.s, score.c);
  return score;
}

RemarkScore score_remark(std::vector<SentenceScore> units) {
  RemarkScore remark;
  remark.units = std::move(units);
  if (remark.units.empty()) {
    return remark;
  }
  Rational sum = 0;
  for (const SentenceScore& unit : remark.units) {
    sum += unit.f;
  }
  remark.average = sum / Rational(static_cast<long long>(remark.units.size()));
  return remark;
}

RemarkScore score_remark_text(const AspectTree& tree, const Lexicon& lexicon,
                              std::string_view remark, const AnalysisConfig& config) {
  std::vector<SentenceScore> units;
  std::vector<std::string> skipped;
  for (const SentenceAnalysis& analysis : analyze_remark(tree, lexicon, remark, config)) {
    if (analysis.skipped()) {
      skipped.push_back("sentence " + std::to_string(analysis.sentence.index) + ": " +
                        analysis.skipped_reason);
      continue;
    }
    for (const ScoredUnit& unit : analysis.units) {
      units.push_back(to_sentence_score(analysis, unit));
    }
  }
  RemarkScore score = score_remark(std::move(units));
  score.skipped = std::move(skipped);
  return score;
}

Rational aggregate_student(std::span<const RemarkScore> remark_scores) {
  Rational sum = 0;
  long long defined = 0;
  for (const RemarkScore& remark : remark_scores) {
    if (remark.average) {
      sum += *remark.average;
      ++defined;
    }
  }
  if (defined == 0) {
    throw std::runtime_error("no scorable remarks");
  }
  return sum / Rational(defined);
}

}  // namespace lor
