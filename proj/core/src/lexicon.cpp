#include "lor/lexicon.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "text_util.hpp"

namespace lor {

std::string_view role_name(Role role) {
  switch (role) {
    case Role::opinion: return "opinion";
    case Role::negator: return "negator";
    case Role::intensifier: return "intensifier";
  }
  return "?";
}

namespace {

Role parse_role(std::string_view field, std::size_t line) {
  if (field == "opinion") return Role::opinion;
  if (field == "negator") return Role::negator;
  if (field == "intensifier") return Role::intensifier;
  throw ParseError(line, "unknown role '" + std::string(field) + "'");
}

}  // namespace

int apply_modifiers(int base_score, std::span<const ModifierMatch> modifiers) {
  int score = base_score;
  for (const ModifierMatch& mod : modifiers) {
    if (mod.entry->role == Role::negator) {
      score = Lexicon::kMaxScore - score;
    } else {
      score += score >= Lexicon::kNeutral ? 1 : -1;
    }
    score = std::clamp(score, Lexicon::kMinScore, Lexicon::kMaxScore);
  }
  return score;
}

Rational opinion_value(std::span<const OpinionTermMatch> matches) {
  if (matches.empty()) {
    throw std::invalid_argument("no opinion terms");
  }
  Rational sum = 0;
  for (const OpinionTermMatch& match : matches) {
    sum += match.effective_score;
  }
  return sum / Rational(static_cast<long long>(matches.size()));
}

Lexicon Lexicon::parse(std::istream& in) {
  Lexicon lexicon;
  std::string line;
  std::size_t line_no = 0;

  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::string_view trimmed = detail::trim(line);
    if (trimmed.empty() || trimmed.front() == '#') continue;

    auto fields = detail::split(line, '\t');
    if (fields.size() < 2) {
      throw ParseError(line_no, "expected <phrase>\\t<role>[\\t<score>]");
    }

    LexiconEntry entry;
    entry.phrase = detail::to_lower(detail::trim(fields[0]));
    if (entry.phrase.empty()) {
      throw ParseError(line_no, "empty phrase");
    }
    entry.token_count = detail::count_tokens(entry.phrase);
    entry.role = parse_role(detail::trim(fields[1]), line_no);

    std::string_view score_field =
        fields.size() > 2 ? detail::trim(fields[2]) : std::string_view{};
    if (entry.role == Role::opinion) {
      if (score_field.empty()) {
        throw ParseError(line_no, "missing score for opinion '" + entry.phrase + "'");
      }
      auto [ptr, ec] =
          std::from_chars(score_field.data(), score_field.data() + score_field.size(),
                          entry.base_score);
      if (ec != std::errc() || ptr != score_field.data() + score_field.size()) {
        throw ParseError(line_no, "bad score '" + std::string(score_field) + "'");
      }
    } else if (!score_field.empty()) {
      throw ParseError(line_no, "score not allowed for role " +
                                    std::string(role_name(entry.role)));
    }

    lexicon.max_phrase_tokens_ = std::max(lexicon.max_phrase_tokens_, entry.token_count);
    lexicon.entries_.push_back(std::move(entry));
    lexicon.index_.emplace(lexicon.entries_.back().phrase, lexicon.entries_.size() - 1);
  }
  return lexicon;
}

Lexicon Lexicon::parse(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse(in);
}

Lexicon Lexicon::load(std::istream& in) {
  Lexicon lexicon = parse(in);
  if (auto violations = lexicon.validate(); !violations.empty()) {
    throw ValidationError(std::move(violations));
  }
  return lexicon;
}

Lexicon Lexicon::load(std::string_view text) {
  std::istringstream in{std::string(text)};
  return load(in);
}

Lexicon Lexicon::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open lexicon file: " + path);
  }
  return load(in);
}

std::vector<std::string> Lexicon::validate() const {
  std::vector<std::string> violations;
  std::set<std::string> seen;
  std::set<std::string> reported;
  for (const LexiconEntry& entry : entries_) {
    if (!seen.insert(entry.phrase).second && reported.insert(entry.phrase).second) {
      violations.push_back("duplicate phrase: " + entry.phrase);
    }
    if (entry.role == Role::opinion &&
        (entry.base_score < kMinScore || entry.base_score > kMaxScore)) {
      violations.push_back("score out of range [0,10]: " + entry.phrase);
    }
    if (entry.token_count > 4) {
      violations.push_back("phrase longer than 4 tokens: " + entry.phrase);
    }
  }
  return violations;
}

std::size_t Lexicon::count(Role role) const {
  return static_cast<std::size_t>(
      std::count_if(entries_.begin(), entries_.end(),
                    [role](const LexiconEntry& e) { return e.role == role; }));
}

const LexiconEntry* Lexicon::find(std::string_view phrase) const {
  auto it = index_.find(std::string(phrase));
  return it == index_.end() ? nullptr : &entries_[it->second];
}

std::vector<OpinionTermMatch> Lexicon::match_opinion_terms(
    std::span<const std::string> tokens, std::span<const TokenSpan> exclude_spans,
    int modifier_window) const {
  auto excluded = [&](std::size_t begin, std::size_t end) {
    TokenSpan candidate{begin, end};
    return std::any_of(exclude_spans.begin(), exclude_spans.end(),
                       [&](const TokenSpan& span) { return span.overlaps(candidate); });
  };

  std::vector<OpinionTermMatch> opinions;
  std::vector<ModifierMatch> modifiers;

  std::size_t i = 0;
  while (i < tokens.size()) {
    std::size_t longest = std::min(max_phrase_tokens_, tokens.size() - i);
    bool matched = false;
    for (std::size_t len = longest; len >= 1; --len) {
      if (excluded(i, i + len)) continue;
      const LexiconEntry* entry = find(detail::join_tokens(tokens, i, i + len));
      if (entry == nullptr) continue;
      if (entry->role == Role::opinion) {
        opinions.push_back({entry, {i, i + len}, {}, entry->base_score});
      } else {
        modifiers.push_back({entry, {i, i + len}});
      }
      i += len;
      matched = true;
      break;
    }
    if (!matched) ++i;
  }

  // Trait-adjective fallback: an aspect token that is itself an opinion
  // entry supplies the term when nothing else does.
  if (opinions.empty()) {
    std::vector<TokenSpan> sorted(exclude_spans.begin(), exclude_spans.end());
    std::sort(sorted.begin(), sorted.end(),
              [](const TokenSpan& a, const TokenSpan& b) { return a.begin < b.begin; });
    for (const TokenSpan& span : sorted) {
      const LexiconEntry* entry = find(detail::join_tokens(tokens, span.begin, span.end));
      if (entry != nullptr && entry->role == Role::opinion) {
        opinions.push_back({entry, span, {}, entry->base_score});
      }
    }
  }

  // Each modifier attaches to the nearest following opinion term whose gap
  // stays inside the window; unattached modifiers are dropped.
  for (const ModifierMatch& mod : modifiers) {
    OpinionTermMatch* target = nullptr;
    for (OpinionTermMatch& op : opinions) {
      if (op.span.begin < mod.span.end) continue;
      std::size_t gap = op.span.begin - mod.span.end;
      if (gap >= static_cast<std::size_t>(modifier_window)) continue;
      if (target == nullptr || op.span.begin < target->span.begin) {
        target = &op;
      }
    }
    if (target != nullptr) {
      target->modifiers.push_back(mod);
    }
  }
  for (OpinionTermMatch& op : opinions) {
    op.effective_score = apply_modifiers(op.entry->base_score, op.modifiers);
  }
  return opinions;
}

}  // namespace lor
