#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "lor/aspect_tree.hpp"  // TokenSpan, ParseError, ValidationError
#include "lor/rational.hpp"

namespace lor {

enum class Role { opinion, negator, intensifier };

std::string_view role_name(Role role);

struct LexiconEntry {
  std::string phrase;  // lowercase, 1-4 tokens
  Role role = Role::opinion;
  int base_score = 0;  // meaningful only for role == opinion, range [0,10]
  std::size_t token_count = 1;
};

struct ModifierMatch {
  const LexiconEntry* entry = nullptr;
  TokenSpan span;
};

struct OpinionTermMatch {
  const LexiconEntry* entry = nullptr;
  TokenSpan span;
  std::vector<ModifierMatch> modifiers;  // in surface order
  int effective_score = 0;               // base score after modifiers, clamped to [0,10]
};

// base_score transformed by each modifier in order: a negator reflects about
// the neutral midpoint (s' = 10 - s), an intensifier moves one step away
// from neutral (s' = s+1 if s >= 5 else s-1). Clamped to [0,10] after each step.
int apply_modifiers(int base_score, std::span<const ModifierMatch> modifiers);

// Arithmetic mean of the effective scores, exact. Throws
// std::invalid_argument("no opinion terms") on an empty list.
Rational opinion_value(std::span<const OpinionTermMatch> matches);

// Sentiment dictionary: opinion phrases with base scores plus negator and
// intensifier phrases. Immutable after load.
class Lexicon {
 public:
  static constexpr int kMinScore = 0;
  static constexpr int kMaxScore = 10;
  static constexpr int kNeutral = 5;

  static Lexicon parse(std::istream& in);
  static Lexicon parse(std::string_view text);
  static Lexicon load(std::istream& in);
  static Lexicon load(std::string_view text);
  static Lexicon load_file(const std::string& path);

  std::vector<std::string> validate() const;

  std::size_t size() const { return entries_.size(); }
  std::size_t count(Role role) const;
  const LexiconEntry* find(std::string_view phrase) const;

  // Longest non-overlapping lexicon matches outside exclude_spans, with
  // modifiers attached to the nearest following opinion term within
  // modifier_window tokens. When no opinion phrase occurs outside the
  // excluded spans but an excluded span itself spells an opinion entry
  // (trait adjectives doubling as aspects), that span supplies the term.
  std::vector<OpinionTermMatch> match_opinion_terms(
      std::span<const std::string> tokens,
      std::span<const TokenSpan> exclude_spans,
      int modifier_window = 3) const;

 private:
  Lexicon() = default;

  std::vector<LexiconEntry> entries_;
  std::unordered_map<std::string, std::size_t> index_;  // phrase -> first entry
  std::size_t max_phrase_tokens_ = 1;
};

}  // namespace lor
