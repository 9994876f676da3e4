#include "lor/analyzer.hpp"

#include <algorithm>
#include <cctype>

#include "text_util.hpp"

namespace lor {

namespace {

bool is_terminator(char ch) { return ch == '.' || ch == '!' || ch == '?'; }

bool is_roman(std::string_view text) {
  if (text.empty()) return false;
  return std::all_of(text.begin(), text.end(), [](unsigned char ch) {
    return std::string_view("ivxlcdm").find(
               static_cast<char>(std::tolower(ch))) != std::string_view::npos;
  });
}

bool is_digits(std::string_view text) {
  if (text.empty()) return false;
  return std::all_of(text.begin(), text.end(),
                     [](unsigned char ch) { return std::isdigit(ch) != 0; });
}

// Matches "i)", "ii)", "(1)", "1)", "(iv)" and, because the splitter already
// consumed the dot of "1.", a bare "(1" / "1" / "iv" fragment remnant.
bool is_enumeration_marker(std::string_view word) {
  bool open = !word.empty() && word.front() == '(';
  if (open) word.remove_prefix(1);
  bool close = !word.empty() && word.back() == ')';
  if (close) word.remove_suffix(1);
  if (word.empty()) return false;
  if (is_digits(word)) return true;
  // Roman numerals need a delimiter; a bare "i" or "mix" is a word.
  return is_roman(word) && (open || close);
}

std::string_view strip_enumeration_markers(std::string_view text) {
  while (true) {
    text = detail::trim(text);
    std::size_t word_end = 0;
    while (word_end < text.size() &&
           !std::isspace(static_cast<unsigned char>(text[word_end]))) {
      ++word_end;
    }
    if (word_end == 0 || word_end == text.size()) {
      // A fragment that is nothing but a marker ("1" left over from "1.").
      return is_enumeration_marker(text) ? std::string_view{} : text;
    }
    if (!is_enumeration_marker(text.substr(0, word_end))) {
      return text;
    }
    text.remove_prefix(word_end);
  }
}

}  // namespace

std::vector<Sentence> split_sentences(std::string_view remark) {
  std::vector<Sentence> sentences;
  std::size_t start = 0;
  auto emit = [&](std::string_view fragment) {
    std::string_view raw = strip_enumeration_markers(fragment);
    if (raw.empty()) return;
    Sentence sentence;
    sentence.index = sentences.size();
    sentence.raw = std::string(raw);
    sentence.tokens = tokenize(raw);
    sentences.push_back(std::move(sentence));
  };
  for (std::size_t i = 0; i < remark.size(); ++i) {
    if (is_terminator(remark[i])) {
      emit(remark.substr(start, i - start));
      start = i + 1;
    }
  }
  emit(remark.substr(start));
  return sentences;
}

std::vector<std::string> tokenize(std::string_view text) {
  std::vector<std::string> tokens;
  std::size_t i = 0;
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    std::size_t end = i;
    while (end < text.size() && !std::isspace(static_cast<unsigned char>(text[end]))) {
      ++end;
    }
    std::string_view word = text.substr(i, end - i);
    i = end;

    auto is_punct = [](unsigned char ch) { return ch < 0x80 && std::ispunct(ch); };
    while (!word.empty() && is_punct(word.front())) word.remove_prefix(1);
    while (!word.empty() && is_punct(word.back())) word.remove_suffix(1);
    if (!word.empty()) {
      tokens.push_back(detail::to_lower(word));
    }
  }
  return tokens;
}

SentenceAnalysis analyze_sentence(const AspectTree& tree, const Lexicon& lexicon,
                                  Sentence sentence, const AnalysisConfig& config) {
  SentenceAnalysis analysis;
  analysis.sentence = std::move(sentence);
  const auto& tokens = analysis.sentence.tokens;

  if (tokens.empty()) {
    analysis.skipped_reason = "no tokens";
    return analysis;
  }

  std::vector<AspectMatch> aspects = tree.find_aspects(tokens);
  std::vector<TokenSpan> aspect_spans;
  aspect_spans.reserve(aspects.size());
  for (const AspectMatch& match : aspects) {
    aspect_spans.push_back(match.span);
  }

  std::vector<OpinionTermMatch> terms =
      lexicon.match_opinion_terms(tokens, aspect_spans, config.modifier_window);

  if (aspects.empty() && !config.general_enabled) {
    analysis.skipped_reason = "no aspect match";
    return analysis;
  }
  if (terms.empty()) {
    analysis.skipped_reason = "no opinion terms";
    return analysis;
  }

  Rational op_value = opinion_value(terms);

  if (aspects.empty()) {
    ScoredUnit unit;
    unit.general = true;
    unit.traversal.aspect_value = 1;
    unit.traversal.branch_count = 1;
    unit.traversal.path = {"GENERAL"};
    unit.opinion = op_value;
    unit.terms = terms;
    analysis.units.push_back(std::move(unit));
    return analysis;
  }

  for (const AspectMatch& match : aspects) {
    ScoredUnit unit;
    unit.node = match.node;
    unit.aspect_span = match.span;
    unit.traversal = tree.evaluate(*match.node);
    unit.opinion = op_value;  // opinion terms are shared across the sentence's aspects
    unit.terms = terms;
    analysis.units.push_back(std::move(unit));
  }
  return analysis;
}

std::vector<SentenceAnalysis> analyze_remark(const AspectTree& tree, const Lexicon& lexicon,
                                             std::string_view remark,
                                             const AnalysisConfig& config) {
  std::vector<SentenceAnalysis> analyses;
  for (Sentence& sentence : split_sentences(remark)) {
    analyses.push_back(analyze_sentence(tree, lexicon, std::move(sentence), config));
  }
  return analyses;
}

}  // namespace lor
