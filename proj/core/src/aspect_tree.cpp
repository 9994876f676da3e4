#include "lor/aspect_tree.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

#include "text_util.hpp"

namespace lor {

namespace {

std::string line_message(std::size_t line, const std::string& reason) {
  return "line " + std::to_string(line) + ": " + reason;
}

int parse_int_field(std::string_view field, std::size_t line, const char* what) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc() || ptr != field.data() + field.size()) {
    throw ParseError(line, std::string("bad ") + what + " '" + std::string(field) + "'");
  }
  return value;
}

}  // namespace

ParseError::ParseError(std::size_t line, const std::string& reason)
    : std::runtime_error(line_message(line, reason)), line_(line) {}

ValidationError::ValidationError(std::vector<std::string> violations)
    : std::runtime_error(violations.empty() ? "validation failed"
                                            : "validation failed: " + violations.front() +
                                                  (violations.size() > 1 ? " (+" +
                                                       std::to_string(violations.size() - 1) +
                                                       " more)"
                                                                         : "")),
      violations_(std::move(violations)) {}

void AspectTree::index_phrase(const std::string& phrase, const AspectNode* node) {
  phrases_.emplace_back(phrase, node);
  index_.emplace(phrase, node);  // keeps the first occurrence
  max_phrase_tokens_ = std::max(max_phrase_tokens_, detail::count_tokens(phrase));
}

AspectTree AspectTree::parse(std::istream& in) {
  AspectTree tree;
  std::vector<AspectNode*> stack;  // stack[d] = last node seen at depth d
  std::string line;
  std::size_t line_no = 0;

  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::string_view trimmed = detail::trim(line);
    if (trimmed.empty() || trimmed.front() == '#') continue;

    auto fields = detail::split(line, '\t');
    if (fields.size() < 2) {
      throw ParseError(line_no, "expected <depth>\\t<name>[\\t<weight>[\\t<synonyms>]]");
    }
    int depth = parse_int_field(detail::trim(fields[0]), line_no, "depth");
    if (depth < 0) {
      throw ParseError(line_no, "negative depth");
    }
    std::string name = detail::to_lower(detail::trim(fields[1]));
    if (name.empty()) {
      throw ParseError(line_no, "empty node name");
    }

    std::string_view weight_field =
        fields.size() > 2 ? detail::trim(fields[2]) : std::string_view{};
    std::string_view synonyms_field =
        fields.size() > 3 ? detail::trim(fields[3]) : std::string_view{};

    auto node = std::make_unique<AspectNode>();
    node->name = name;
    node->depth = depth;

    if (depth == 0) {
      if (tree.root_) {
        throw ParseError(line_no, "second root line");
      }
      if (!weight_field.empty()) {
        throw ParseError(line_no, "root line must have an empty weight field");
      }
    } else {
      if (weight_field.empty()) {
        throw ParseError(line_no, "missing weight for non-root node '" + name + "'");
      }
      node->branch_weight = parse_int_field(weight_field, line_no, "weight");
      if (static_cast<std::size_t>(depth) > stack.size()) {
        throw ParseError(line_no, "depth " + std::to_string(depth) +
                                      " has no parent at depth " + std::to_string(depth - 1));
      }
    }

    for (std::string_view raw_syn : detail::split(synonyms_field, ',')) {
      std::string_view syn = detail::trim(raw_syn);
      if (!syn.empty()) {
        node->synonyms.push_back(detail::to_lower(syn));
      }
    }

    AspectNode* raw = node.get();
    if (depth == 0) {
      tree.root_ = std::move(node);
    } else {
      AspectNode* parent = stack[depth - 1];
      raw->parent = parent;
      parent->children.push_back(std::move(node));
    }
    stack.resize(depth);
    stack.push_back(raw);
    ++tree.node_count_;

    if (!raw->is_root()) {
      tree.index_phrase(raw->name, raw);
    }
    for (const std::string& syn : raw->synonyms) {
      tree.index_phrase(syn, raw);
    }
  }

  if (!tree.root_) {
    throw ParseError(line_no, "no root line (depth 0) found");
  }
  return tree;
}

AspectTree AspectTree::parse(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse(in);
}

AspectTree AspectTree::load(std::istream& in) {
  AspectTree tree = parse(in);
  if (auto violations = tree.validate(); !violations.empty()) {
    throw ValidationError(std::move(violations));
  }
  return tree;
}

AspectTree AspectTree::load(std::string_view text) {
  std::istringstream in{std::string(text)};
  return load(in);
}

AspectTree AspectTree::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open tree file: " + path);
  }
  return load(in);
}

std::vector<std::string> AspectTree::validate() const {
  std::vector<std::string> violations;

  std::set<std::string> seen;
  std::set<std::string> reported;
  for (const auto& [phrase, node] : phrases_) {
    if (!seen.insert(phrase).second && reported.insert(phrase).second) {
      violations.push_back("duplicate name/synonym: " + phrase);
    }
  }

  std::vector<const AspectNode*> todo{root_.get()};
  while (!todo.empty()) {
    const AspectNode* node = todo.back();
    todo.pop_back();
    if (!node->is_root() &&
        (node->branch_weight < kMinWeight || node->branch_weight > kMaxWeight)) {
      violations.push_back("weight out of range [1,10]: " + node->name);
    }
    for (const std::string& syn : node->synonyms) {
      if (detail::count_tokens(syn) > 4) {
        violations.push_back("synonym longer than 4 tokens: " + syn);
      }
    }
    if (detail::count_tokens(node->name) != 1) {
      violations.push_back("name is not a single token: " + node->name);
    }
    for (const auto& child : node->children) {
      todo.push_back(child.get());
    }
  }
  return violations;
}

const AspectNode* AspectTree::find(std::string_view phrase) const {
  auto it = index_.find(std::string(phrase));
  return it == index_.end() ? nullptr : it->second;
}

std::vector<AspectMatch> AspectTree::find_aspects(std::span<const std::string> tokens) const {
  std::vector<AspectMatch> matches;
  std::size_t i = 0;
  while (i < tokens.size()) {
    std::size_t longest = std::min(max_phrase_tokens_, tokens.size() - i);
    bool matched = false;
    for (std::size_t len = longest; len >= 1; --len) {
      std::string phrase = detail::join_tokens(tokens, i, i + len);
      if (const AspectNode* node = find(phrase)) {
        matches.push_back({node, {i, i + len}, std::move(phrase)});
        i += len;
        matched = true;
        break;
      }
    }
    if (!matched) ++i;
  }
  return matches;
}

TraversalResult AspectTree::evaluate(const AspectNode& node) const {
  if (node.is_root()) {
    throw std::invalid_argument("cannot evaluate the root: no branch to traverse");
  }
  TraversalResult result;
  result.aspect_value = 1;
  for (const AspectNode* cur = &node; cur != nullptr; cur = cur->parent) {
    result.path.push_back(cur->name);
    if (!cur->is_root()) {
      result.aspect_value *= cur->branch_weight;
      ++result.branch_count;
    }
  }
  return result;
}

}  // namespace lor
