// Acceptance suite: one pass/fail line per criterion, nonzero exit when any
// criterion fails.

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "lor/analyzer.hpp"
#include "lor/aspect_tree.hpp"
#include "lor/lexicon.hpp"
#include "lor/rational.hpp"
#include "lor/scoring.hpp"
#include "lor/store.hpp"
#include "test_support.hpp"
#include "tree_oracle.hpp"

namespace fs = std::filesystem;
using lor::BigInt;
using lor::Rational;
using test_support::run_command;
using test_support::shell_quote;

namespace {

const std::string kBin = ASPECTSCORE_BIN;
const std::string kFixtures = FIXTURES_DIR;

std::string base_cmd() {
  return shell_quote(kBin) + " --tree " + shell_quote(kFixtures + "/aspect_tree.tsv") +
         " --lexicon " + shell_quote(kFixtures + "/lexicon.tsv");
}

struct Check {
  bool ok = true;
  std::string detail;

  void expect(bool condition, const std::string& message) {
    if (!condition && ok) {
      ok = false;
      detail = message;
    }
  }
};

// Criterion 1: end-to-end reproduction of the case-study table through the
// CLI, exact rendered values, under one second.
Check criterion_table_reproduction() {
  Check check;
  const std::string expected1 =
      "sentence\taspect\tg\ts\tc\tf\n"
      "0\tpersonality>traits>obedient\t216\t7\t3\t15.12\n"
      "1\tacademics>subjects>dbms\t120\t6\t3\t7.2\n"
      "2\tacademics>regularity>attendance\t216\t9\t3\t19.44\n"
      "3\tactivities>co-curricular\t8\t4\t2\t3.2\n"
      "average\t11.24\n";
  const std::string expected2 =
      "sentence\taspect\tg\ts\tc\tf\n"
      "0\tpersonality>traits>punctual\t288\t7\t3\t20.16\n"
      "1\tactivities>co-curricular\t8\t8\t2\t6.4\n"
      "2\tacademics\t4\t7\t1\t28\n"
      "3\textra-curricular>dancing\t48\t5\t2\t24\n"
      "average\t19.64\n";

  auto start = std::chrono::steady_clock::now();
  auto result1 = run_command(base_cmd() + " score " + shell_quote(test_support::kRemark1));
  auto result2 = run_command(base_cmd() + " score " + shell_quote(test_support::kRemark2));
  auto elapsed = std::chrono::steady_clock::now() - start;

  check.expect(result1.exit_code == 0, "remark (1) exit code " +
                                           std::to_string(result1.exit_code));
  check.expect(result1.out == expected1, "remark (1) output mismatch:\n" + result1.out);
  check.expect(result2.exit_code == 0, "remark (2) exit code " +
                                           std::to_string(result2.exit_code));
  check.expect(result2.out == expected2, "remark (2) output mismatch:\n" + result2.out);
  check.expect(elapsed < std::chrono::seconds(1), "scoring took over one second");
  return check;
}

// Criterion 2: the formula layer alone reproduces every f value and both
// averages from the published (g, s, c) triples.
Check criterion_formula_layer() {
  Check check;
  struct Row {
    long long g;
    long long s;
    int c;
    const char* f;
  };
  const std::vector<Row> remark1{{216, 7, 3, "15.12"},
                                 {120, 6, 3, "7.2"},
                                 {216, 9, 3, "19.44"},
                                 {8, 4, 2, "3.2"}};
  const std::vector<Row> remark2{{288, 7, 3, "20.16"},
                                 {8, 8, 2, "6.4"},
                                 {4, 7, 1, "28"},
                                 {48, 5, 2, "24"}};
  auto run = [&](const std::vector<Row>& rows, const char* expected_average) {
    std::vector<lor::SentenceScore> units;
    for (const Row& row : rows) {
      lor::SentenceScore unit;
      unit.g = row.g;
      unit.s = row.s;
      unit.c = row.c;
      unit.f = lor::summarize(unit.g, unit.s, unit.c);
      check.expect(lor::render_score(unit.f) == row.f,
                   std::string("f mismatch, expected ") + row.f + " got " +
                       lor::render_score(unit.f));
      units.push_back(std::move(unit));
    }
    auto score = lor::score_remark(std::move(units));
    check.expect(score.average.has_value(), "missing average");
    check.expect(lor::render_score(*score.average) == expected_average,
                 std::string("average mismatch, expected ") + expected_average + " got " +
                     lor::render_score(*score.average));
  };
  run(remark1, "11.24");
  run(remark2, "19.64");
  return check;
}

// Criterion 3: traversal vs brute-force path products and BFS depths on 200
// random trees.
Check criterion_path_oracle() {
  Check check;
  std::mt19937 rng(20250824);
  for (int trial = 0; trial < 200; ++trial) {
    auto random_tree = test_support::make_random_tree(rng, 100);
    lor::AspectTree tree = lor::AspectTree::load(random_tree.to_file_text());
    for (int i = 1; i < static_cast<int>(random_tree.nodes.size()); ++i) {
      const lor::AspectNode* node = tree.find(random_tree.node_name(i));
      if (node == nullptr) {
        check.expect(false, "node lookup failed in trial " + std::to_string(trial));
        return check;
      }
      auto result = tree.evaluate(*node);
      check.expect(result.aspect_value == random_tree.oracle_product(i),
                   "product mismatch in trial " + std::to_string(trial));
      check.expect(result.branch_count == random_tree.oracle_depth(i),
                   "depth mismatch in trial " + std::to_string(trial));
    }
  }
  return check;
}

// Criterion 4: exhaustive modifier algebra over integer base scores 0..10.
Check criterion_modifier_algebra() {
  Check check;
  lor::LexiconEntry negator{"not", lor::Role::negator, 0, 1};
  lor::LexiconEntry intensifier{"very", lor::Role::intensifier, 0, 1};
  lor::ModifierMatch neg{&negator, {0, 1}};
  lor::ModifierMatch very{&intensifier, {0, 1}};

  for (int s = 0; s <= 10; ++s) {
    check.expect(lor::apply_modifiers(s, std::vector{neg, neg}) == s,
                 "double negation not identity at s=" + std::to_string(s));
    int boosted = lor::apply_modifiers(s, std::vector{very});
    check.expect(boosted >= 0 && boosted <= 10,
                 "intensifier out of range at s=" + std::to_string(s));
    int negated = lor::apply_modifiers(s, std::vector{neg});
    if (s > 5) check.expect(negated < 5, "negation kept s>5 positive");
    if (s < 5) check.expect(negated > 5, "negation kept s<5 negative");
  }
  return check;
}

// Criterion 5: aggregation properties on 1000 random unit lists, plus the
// fixed student aggregate.
Check criterion_aggregation() {
  Check check;
  std::mt19937 rng(77);
  std::uniform_int_distribution<int> len_dist(1, 12);
  std::uniform_int_distribution<int> g_dist(1, 2000);
  std::uniform_int_distribution<int> s_dist(0, 10);
  std::uniform_int_distribution<int> c_dist(1, 6);
  for (int trial = 0; trial < 1000; ++trial) {
    std::vector<lor::SentenceScore> units;
    for (int i = 0, n = len_dist(rng); i < n; ++i) {
      lor::SentenceScore unit;
      unit.g = g_dist(rng);
      unit.s = s_dist(rng);
      unit.c = c_dist(rng);
      unit.f = lor::summarize(unit.g, unit.s, unit.c);
      units.push_back(std::move(unit));
    }
    auto score = lor::score_remark(units);
    Rational sum = 0;
    for (const auto& unit : units) sum += unit.f;
    check.expect(*score.average * Rational(static_cast<long long>(units.size())) == sum,
                 "average*n != sum(f) in trial " + std::to_string(trial));
    std::shuffle(units.begin(), units.end(), rng);
    check.expect(*lor::score_remark(units).average == *score.average,
                 "permutation changed the average in trial " + std::to_string(trial));
  }

  auto remark = [](long long num) {
    lor::RemarkScore score;
    score.units.resize(1);
    score.average = Rational(BigInt(num), BigInt(100));
    return score;
  };
  std::vector<lor::RemarkScore> remarks{remark(1124), remark(1964)};
  check.expect(lor::render_score(lor::aggregate_student(remarks)) == "15.44",
               "aggregate of 11.24 and 19.64 is not 15.44");
  return check;
}

// Criterion 6: byte-identical records output for each remark and its
// uppercased variant.
Check criterion_case_invariance() {
  Check check;
  for (const std::string& remark : {test_support::kRemark1, test_support::kRemark2}) {
    std::string cmd = base_cmd() + " --format records score ";
    auto baseline = run_command(cmd + shell_quote(remark));
    auto repeat = run_command(cmd + shell_quote(remark));
    auto upper = run_command(cmd + shell_quote(test_support::upper_ascii(remark)));
    check.expect(baseline.exit_code == 0, "score failed");
    check.expect(repeat.out == baseline.out, "repeated run differed");
    check.expect(upper.out == baseline.out, "uppercased remark changed the records output");
  }
  return check;
}

// Criterion 7: store round trip for awkward content and sequence
// monotonicity across a simulated restart.
Check criterion_store_roundtrip() {
  Check check;
  fs::path path = test_support::temp_path("acceptance_store");
  std::string awkward = "tab\there\nand newline, caf\xc3\xa9 \xe2\x98\x85 back\\slash";
  {
    lor::RemarkStore store(path);
    check.expect(store.put("s1", "t1", awkward) == 1, "first seq not 1");
    auto records = store.list("s1");
    check.expect(records.size() == 1 && records[0].remark_text == awkward,
                 "round trip altered the remark text");
  }
  {
    lor::RemarkStore reopened(path);
    check.expect(reopened.put("s1", "t2", "after restart") == 2,
                 "sequence not monotone across restart");
    check.expect(reopened.list("s1").size() == 2, "record lost across restart");
  }
  std::error_code ec;
  fs::remove(path, ec);
  fs::remove(path.string() + ".lock", ec);
  return check;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<Check()> run;
  };
  const std::vector<Criterion> criteria{
      {"criterion-1 case-study table reproduction (exact, <1s)", criterion_table_reproduction},
      {"criterion-2 formula layer reproduces f values and averages",
       criterion_formula_layer},
      {"criterion-3 path-product oracle equivalence on 200 random trees",
       criterion_path_oracle},
      {"criterion-4 modifier algebra, exhaustive over base scores",
       criterion_modifier_algebra},
      {"criterion-5 aggregation properties on 1000 random unit lists",
       criterion_aggregation},
      {"criterion-6 determinism and case invariance of records output",
       criterion_case_invariance},
      {"criterion-7 store round trip and restart monotonicity", criterion_store_roundtrip},
  };

  int failures = 0;
  for (const Criterion& criterion : criteria) {
    Check check;
    try {
      check = criterion.run();
    } catch (const std::exception& err) {
      check.ok = false;
      check.detail = std::string("exception: ") + err.what();
    }
    std::cout << (check.ok ? "PASS  " : "FAIL  ") << criterion.name << "\n";
    if (!check.ok) {
      std::cout << "      " << check.detail << "\n";
      ++failures;
    }
  }
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) +
                                                            " criteria failed")
            << "\n";
  return failures == 0 ? 0 : 1;
}
