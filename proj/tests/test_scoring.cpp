#include <doctest.h>

#include <algorithm>
#include <random>

#include "lor/scoring.hpp"
#include "test_support.hpp"

using lor::BigInt;
using lor::Rational;

namespace {

lor::SentenceScore unit_with(BigInt g, Rational s, int c) {
  lor::SentenceScore unit;
  unit.g = std::move(g);
  unit.s = std::move(s);
  unit.c = c;
  unit.f = lor::summarize(unit.g, unit.s, unit.c);
  return unit;
}

}  // namespace

TEST_CASE("summarize reproduces the case-study values exactly") {
  CHECK(lor::summarize(216, 7, 3) == Rational(BigInt(1512), BigInt(100)));
  CHECK(lor::render_score(lor::summarize(216, 7, 3)) == "15.12");
  CHECK(lor::render_score(lor::summarize(120, 6, 3)) == "7.2");
  CHECK(lor::render_score(lor::summarize(216, 9, 3)) == "19.44");
  CHECK(lor::render_score(lor::summarize(8, 4, 2)) == "3.2");
  CHECK(lor::render_score(lor::summarize(288, 7, 3)) == "20.16");
  CHECK(lor::render_score(lor::summarize(8, 8, 2)) == "6.4");
  CHECK(lor::summarize(4, 7, 1) == Rational(28));
  CHECK(lor::summarize(48, 5, 2) == Rational(24));
  CHECK(lor::summarize(9, 0, 2) == Rational(0));
}

TEST_CASE("summarize domain errors") {
  CHECK_THROWS_AS(lor::summarize(0, 5, 1), std::domain_error);
  CHECK_THROWS_AS(lor::summarize(5, 5, 0), std::domain_error);
  CHECK_THROWS_AS(lor::summarize(5, 11, 1), std::domain_error);
  CHECK_THROWS_AS(lor::summarize(5, -1, 1), std::domain_error);
}

TEST_CASE("summarize monotonicity and depth normalization") {
  // increasing s for fixed (g, c)
  CHECK(lor::summarize(12, 4, 2) < lor::summarize(12, 5, 2));
  // increasing g for fixed (s, c), s > 0
  CHECK(lor::summarize(12, 4, 2) < lor::summarize(13, 4, 2));
  // deepening with branch weight w multiplies f by w/10
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> weight_dist(1, 10);
  std::uniform_int_distribution<int> g_dist(1, 500);
  std::uniform_int_distribution<int> s_dist(0, 10);
  for (int trial = 0; trial < 100; ++trial) {
    BigInt g = g_dist(rng);
    Rational s = s_dist(rng);
    int c = 1 + trial % 4;
    int w = weight_dist(rng);
    CHECK(lor::summarize(g * w, s, c + 1) ==
          lor::summarize(g, s, c) * Rational(BigInt(w), BigInt(10)));
  }
}

TEST_CASE("score_remark averages the case-study units") {
  auto remark1 = lor::score_remark({unit_with(216, 7, 3), unit_with(120, 6, 3),
                                    unit_with(216, 9, 3), unit_with(8, 4, 2)});
  REQUIRE(remark1.average);
  CHECK(*remark1.average == Rational(BigInt(1124), BigInt(100)));
  CHECK(lor::render_score(*remark1.average) == "11.24");

  auto remark2 = lor::score_remark({unit_with(288, 7, 3), unit_with(8, 8, 2),
                                    unit_with(4, 7, 1), unit_with(48, 5, 2)});
  REQUIRE(remark2.average);
  CHECK(lor::render_score(*remark2.average) == "19.64");

  auto singleton = lor::score_remark({unit_with(7, 3, 1)});
  CHECK(*singleton.average == lor::summarize(7, 3, 1));

  auto empty = lor::score_remark({});
  CHECK(empty.n() == 0);
  CHECK_FALSE(empty.average.has_value());
}

TEST_CASE("score_remark permutation invariance and sum identity") {
  std::mt19937 rng(123);
  std::uniform_int_distribution<int> len_dist(1, 10);
  std::uniform_int_distribution<int> g_dist(1, 1000);
  std::uniform_int_distribution<int> s_dist(0, 10);
  std::uniform_int_distribution<int> c_dist(1, 5);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<lor::SentenceScore> units;
    for (int i = 0, n = len_dist(rng); i < n; ++i) {
      units.push_back(unit_with(g_dist(rng), s_dist(rng), c_dist(rng)));
    }
    auto score = lor::score_remark(units);
    REQUIRE(score.average);
    Rational sum = 0;
    for (const auto& unit : units) sum += unit.f;
    CHECK(*score.average * Rational(static_cast<long long>(units.size())) == sum);

    std::shuffle(units.begin(), units.end(), rng);
    CHECK(*lor::score_remark(units).average == *score.average);
  }
}

TEST_CASE("aggregate_student") {
  auto remark = [](long long num, long long den) {
    lor::RemarkScore score;
    score.units.resize(1);
    score.average = Rational(BigInt(num), BigInt(den));
    return score;
  };

  std::vector<lor::RemarkScore> both{remark(1124, 100), remark(1964, 100)};
  CHECK(lor::render_score(lor::aggregate_student(both)) == "15.44");

  std::vector<lor::RemarkScore> one{remark(1124, 100)};
  CHECK(lor::aggregate_student(one) == Rational(BigInt(1124), BigInt(100)));

  std::vector<lor::RemarkScore> with_empty{remark(1124, 100), lor::RemarkScore{}};
  CHECK(lor::aggregate_student(with_empty) == Rational(BigInt(1124), BigInt(100)));

  std::vector<lor::RemarkScore> none{lor::RemarkScore{}};
  CHECK_THROWS_AS(lor::aggregate_student(none), std::runtime_error);

  std::vector<lor::RemarkScore> same{remark(7, 2), remark(7, 2), remark(7, 2)};
  CHECK(lor::aggregate_student(same) == Rational(BigInt(7), BigInt(2)));
}
