#pragma once

#include <cstddef>
#include <iosfwd>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "lor/rational.hpp"

namespace lor {

// Raised on malformed input files; line numbers are 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& reason);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Raised when a parsed file violates semantic rules (range, uniqueness).
// Carries the full violation list, not just the first one.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(std::vector<std::string> violations);
  const std::vector<std::string>& violations() const { return violations_; }

 private:
  std::vector<std::string> violations_;
};

// Half-open token index range [begin, end).
struct TokenSpan {
  std::size_t begin = 0;
  std::size_t end = 0;

  std::size_t size() const { return end - begin; }
  bool overlaps(const TokenSpan& other) const {
    return begin < other.end && other.begin < end;
  }
  bool operator==(const TokenSpan& other) const = default;
};

struct AspectNode {
  std::string name;                   // lowercase single token
  std::vector<std::string> synonyms;  // lowercase phrases, 1-4 tokens each
  int branch_weight = 0;              // weight of the incoming branch; 0 on the root only
  int depth = 0;                      // root is 0
  const AspectNode* parent = nullptr;
  std::vector<std::unique_ptr<AspectNode>> children;

  bool is_root() const { return parent == nullptr; }
};

struct AspectMatch {
  const AspectNode* node = nullptr;
  TokenSpan span;
  std::string phrase;  // the surface phrase that matched (name or synonym)
};

struct TraversalResult {
  BigInt aspect_value;    // product of branch weights on the root path
  int branch_count = 0;   // number of branches traversed = node depth
  std::vector<std::string> path;  // node names, matched node first, root last
};

// Weighted aspect taxonomy. Immutable after load; every query is a pure
// function of (tree, input), so one tree may serve concurrent analyses.
class AspectTree {
 public:
  static constexpr int kMinWeight = 1;
  static constexpr int kMaxWeight = 10;

  // Structural parse of the tree file format. Throws ParseError on bad
  // depth/weight syntax or an orphan depth jump. Semantic rules (weight
  // range, phrase uniqueness) are left to validate().
  static AspectTree parse(std::istream& in);
  static AspectTree parse(std::string_view text);

  // parse + validate; throws ValidationError listing every violation.
  static AspectTree load(std::istream& in);
  static AspectTree load(std::string_view text);
  static AspectTree load_file(const std::string& path);

  // Empty iff all invariants hold. Each entry names the node and the rule.
  std::vector<std::string> validate() const;

  const AspectNode& root() const { return *root_; }
  std::size_t node_count() const { return node_count_; }

  // Exact name-or-synonym lookup, input already lowercase.
  const AspectNode* find(std::string_view phrase) const;

  // All non-overlapping matches, left to right, longest phrase first at
  // each position. Names and synonyms compete equally.
  std::vector<AspectMatch> find_aspects(std::span<const std::string> tokens) const;

  // Root-path product and branch counter for a non-root node of this tree.
  // Throws std::invalid_argument for the root.
  TraversalResult evaluate(const AspectNode& node) const;

 private:
  AspectTree() = default;
  void index_phrase(const std::string& phrase, const AspectNode* node);

  std::unique_ptr<AspectNode> root_;
  std::size_t node_count_ = 0;
  std::size_t max_phrase_tokens_ = 1;
  // Insertion-ordered phrase list; keeps duplicates so validate() can report them.
  std::vector<std::pair<std::string, const AspectNode*>> phrases_;
  std::unordered_map<std::string, const AspectNode*> index_;  // first occurrence wins
};

}  // namespace lor
