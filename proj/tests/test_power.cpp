#include <doctest.h>

#include <stdexcept>

#include <array>

#include "oracles.hpp"
#include "repwords/morphism.hpp"
#include "repwords/power.hpp"

using namespace repwords;

namespace {

const std::array<Rational, 4> kAlphas{Rational(2), Rational(7, 3), Rational(5, 2), Rational(3)};

}  // namespace

TEST_CASE("word_exponent examples") {
  auto e = word_exponent(Word::parse("00"));
  CHECK(e.exponent == Rational(2));
  CHECK(e.period == 1);
  e = word_exponent(Word::parse("01"));
  CHECK(e.exponent == Rational(1));
  CHECK(e.period == 2);
  e = word_exponent(Word::parse("0110110"));
  CHECK(e.exponent == Rational(7, 3));
  CHECK(e.period == 3);
  CHECK_THROWS_WITH_AS(word_exponent(Word{}), "empty word has no exponent", std::invalid_argument);
}

TEST_CASE("word_exponent matches brute-force period scan") {
  for (std::size_t n = 1; n <= 12; ++n) {
    for (const auto& w : oracle::all_words(n)) {
      const auto e = word_exponent(w);
      REQUIRE(e.period == oracle::min_period(w));
      REQUIRE(e.exponent == Rational(static_cast<std::int64_t>(n), static_cast<std::int64_t>(e.period)));
    }
  }
}

TEST_CASE("threshold rejects alpha <= 1") {
  CHECK_THROWS_WITH_AS(PowerThreshold(Rational(1), false), "exponent threshold must exceed 1",
                       std::invalid_argument);
  CHECK_THROWS_AS(find_violation(Word::parse("01"), Rational(1, 2), true), std::invalid_argument);
  CHECK_THROWS_AS(is_power_free(Word::parse("01"), Rational(1), true), std::invalid_argument);
  CHECK_THROWS_AS(extend_check(Word::parse("01"), 0, Rational(0), false), std::invalid_argument);
}

TEST_CASE("minimal forbidden lengths") {
  const PowerThreshold sq(Rational(2), false);
  CHECK(sq.min_forbidden_length(1) == 2);
  CHECK(sq.min_forbidden_length(3) == 6);
  const PowerThreshold ov(Rational(2), true);
  CHECK(ov.min_forbidden_length(1) == 3);
  CHECK(ov.min_forbidden_length(3) == 7);
  const PowerThreshold t73(Rational(7, 3), false);
  CHECK(t73.min_forbidden_length(3) == 7);
  CHECK(t73.min_forbidden_length(4) == 10);
  const PowerThreshold t73p(Rational(7, 3), true);
  CHECK(t73p.min_forbidden_length(3) == 8);
}

TEST_CASE("find_violation examples") {
  // "000" at (start 0, period 1) repeats over all three letters.
  auto v = find_violation(Word::parse("000"), Rational(2), false);
  REQUIRE(v);
  CHECK(*v == PowerWitness{0, 1, 3});

  CHECK_FALSE(find_violation(morse_block(0, 6), Rational(2), true));

  CHECK_FALSE(find_violation(Word::parse("0110110"), Rational(7, 3), true));
  v = find_violation(Word::parse("0110110"), Rational(7, 3), false);
  REQUIRE(v);
  CHECK(*v == PowerWitness{0, 3, 7});
  CHECK(v->exponent() == Rational(7, 3));
}

TEST_CASE("find_violation prefers the earliest start, then the shortest period") {
  // 0101 at start 0 beats 00 at start 4; its period-2 run extends to length 5.
  auto v = find_violation(Word::parse("0101000"), Rational(2), false);
  REQUIRE(v);
  CHECK(*v == PowerWitness{0, 2, 5});
  // Both periods 1 and 3 fail at start 0 of 000000; period 1 wins.
  v = find_violation(Word::parse("000000"), Rational(2), false);
  REQUIRE(v);
  CHECK(*v == PowerWitness{0, 1, 6});
}

TEST_CASE("is_power_free examples") {
  CHECK(is_power_free(Word::parse("010011"), Rational(7, 3), false));
  CHECK_FALSE(is_power_free(Word::parse("00100100"), Rational(7, 3), false));
  CHECK(is_power_free(Word{}, Rational(2), false));
}

TEST_CASE("extend_check examples") {
  CHECK_FALSE(extend_check(Word::parse("0"), 0, Rational(2), false));
  // 011011 = (011)^2 has exponent exactly 2, allowed under the strict threshold.
  CHECK(oracle::power_free(Word::parse("011011"), 2, 1, true));
  CHECK(extend_check(Word::parse("01101"), 1, Rational(2), true));
  CHECK(oracle::power_free(Word::parse("01101"), 7, 3, false));
  CHECK(extend_check(Word::parse("0110"), 1, Rational(7, 3), false));
}

TEST_CASE("find_violation agrees with the triple-loop oracle (n <= 12)") {
  for (const auto& alpha : kAlphas) {
    for (bool strict : {false, true}) {
      const PowerThreshold t(alpha, strict);
      for (std::size_t n = 0; n <= 12; ++n) {
        for (const auto& w : oracle::all_words(n)) {
          const auto got = find_violation(w.letters(), t);
          const auto want = oracle::first_violation(w, alpha.num(), alpha.den(), strict);
          REQUIRE(got.has_value() == want.has_value());
          if (!got) continue;
          REQUIRE(got->start == want->start);
          REQUIRE(got->period == want->period);
          REQUIRE(got->length == want->length);
          REQUIRE(got->holds_in(w));
          REQUIRE(t.forbids(got->length, got->period));
        }
      }
    }
  }
}

TEST_CASE("extend_check agrees with full recheck (n <= 14)") {
  for (const auto& alpha : kAlphas) {
    for (bool strict : {false, true}) {
      const PowerThreshold t(alpha, strict);
      for (std::size_t n = 0; n <= 14; ++n) {
        for (const auto& w : oracle::all_words(n)) {
          if (!is_power_free(w.letters(), t)) continue;
          for (Letter c = 0; c < 2; ++c) {
            Word ext = w;
            ext.push_back(c);
            REQUIRE(extend_check(w, c, alpha, strict) == oracle::power_free(ext, alpha.num(), alpha.den(), strict));
          }
        }
      }
    }
  }
}

TEST_CASE("violations persist under extension") {
  for (std::size_t n = 1; n <= 10; ++n) {
    for (const auto& w : oracle::all_words(n)) {
      for (bool strict : {false, true}) {
        if (is_power_free(w, Rational(7, 3), strict)) continue;
        for (Letter c = 0; c < 2; ++c) {
          Word ext = w;
          ext.push_back(c);
          REQUIRE_FALSE(is_power_free(ext, Rational(7, 3), strict));
          Word pre{c};
          pre.append(w);
          REQUIRE_FALSE(is_power_free(pre, Rational(7, 3), strict));
        }
      }
    }
  }
}

TEST_CASE("power-freeness is monotone in the threshold") {
  for (std::size_t n = 1; n <= 11; ++n) {
    for (const auto& w : oracle::all_words(n)) {
      for (std::size_t i = 0; i < kAlphas.size(); ++i) {
        if (!is_power_free(w, kAlphas[i], false)) continue;
        for (std::size_t j = i; j < kAlphas.size(); ++j) REQUIRE(is_power_free(w, kAlphas[j], false));
        REQUIRE(is_power_free(w, kAlphas[i], true));
      }
    }
  }
}

TEST_CASE("first_violation_end finds the shortest failing prefix") {
  const PowerThreshold t(Rational(2), false);
  CHECK(first_violation_end(Word::parse("0100101").letters(), t) == std::optional<std::size_t>(4));
  CHECK_FALSE(first_violation_end(Word::parse("010").letters(), t));
  for (const auto& w : oracle::all_words(10)) {
    const auto end = first_violation_end(w.letters(), t);
    if (!end) {
      REQUIRE(oracle::power_free(w, 2, 1, false));
      continue;
    }
    REQUIRE_FALSE(oracle::power_free(w.prefix(*end), 2, 1, false));
    REQUIRE(oracle::power_free(w.prefix(*end - 1), 2, 1, false));
  }
}
