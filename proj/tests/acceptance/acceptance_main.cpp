// Acceptance gate: one PASS/FAIL line per criterion, exit 1 if any fails.

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "oracles.hpp"
#include "repwords/claims.hpp"
#include "repwords/constructions.hpp"
#include "repwords/morphism.hpp"
#include "repwords/power.hpp"
#include "repwords/search.hpp"
#include "repwords/squares.hpp"

using namespace repwords;

namespace {

using Clock = std::chrono::steady_clock;

constexpr double kShortLimit = 120.0;
constexpr double kLongLimit = 300.0;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

bool square_of_length_at(const Word& w, std::uint64_t pos, std::uint64_t len) {
  if (len % 2 != 0 || pos + len > w.size()) return false;
  const std::uint64_t h = len / 2;
  for (std::uint64_t i = 0; i < h; ++i) {
    if (w[pos + i] != w[pos + h + i]) return false;
  }
  return true;
}

bool window_holds(const Word& w, const SquareWindow& win) {
  for (auto j = win.first_position; j <= win.last_position; ++j) {
    if (!square_of_length_at(w, j, win.square_length)) return false;
  }
  return true;
}

struct Check {
  bool ok = true;
  std::string note;
  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      note = what;
    }
  }
};

Check criterion1() {
  Check c;
  const Word f = Word::parse(pinned::kUnavoidableFactor);
  struct Case {
    Rational alpha;
    bool strict;
    std::size_t bound;
  };
  for (const Case& k : {Case{Rational(2), true, pinned::kOverlapFreeBound},
                        Case{Rational(7, 3), false, pinned::kSevenThirdsBound}}) {
    const auto t0 = Clock::now();
    const auto spec = unavoidable_factor_claim("u", k.alpha, k.strict, k.bound, f);
    const auto r = spec.run();
    const double dt = seconds_since(t0);
    c.require(r.holds, "bound " + std::to_string(k.bound) + " refuted");
    c.require(dt < kShortLimit, "bound " + std::to_string(k.bound) + " took " + std::to_string(dt) + "s");

    const auto mutated = unavoidable_factor_claim("m", k.alpha, k.strict, k.bound - 6, f);
    const auto m = mutated.run();
    c.require(!m.holds, "bound " + std::to_string(k.bound - 6) + " not refuted");
    c.require(mutated.witness_valid(m), "invalid witness at bound " + std::to_string(k.bound - 6));
    if (m.witness) {
      const Word& w = std::get<Word>(*m.witness);
      c.require(w.size() == k.bound - 5 && !w.contains(f) &&
                    oracle::power_free(w, k.alpha.num(), k.alpha.den(), k.strict),
                "witness fails the independent check");
    }
  }
  return c;
}

Check criterion2() {
  Check c;
  const auto t0 = Clock::now();
  const auto r = verify_squares_theorem(pinned::kSquaresMaxLen, pinned::kSquaresConverseMaxLen);
  const double dt = seconds_since(t0);
  c.require(r.holds, "exception found");
  c.require(r.stats.at("forward_squares") > 0 && r.stats.at("converse_conjugates") > 0, "empty check");
  c.require(dt < kLongLimit, "took " + std::to_string(dt) + "s");
  return c;
}

Check criterion3() {
  Check c;
  const Word w = Word::parse(pinned::kSharpnessSquare);
  c.require(w.size() == 38, "length");
  const auto r = verify_counterexample(w);
  c.require(r.holds, "verifier rejects the word");
  c.require(oracle::is_square(w), "not a square");
  c.require(oracle::power_free(w, 7, 3, true), "contains a (7/3)+-power");
  c.require(!oracle::power_free(w, 7, 3, false), "no 7/3-power");
  bool conj = false;
  for (const Word& a : enumerate_script_A(w.size())) {
    if (a.size() != w.size()) continue;
    for (std::size_t k = 0; k < a.size(); ++k) conj = conj || a.rotated_left(k) == w;
  }
  c.require(!conj, "is a conjugate of a Thue-Morse square");
  return c;
}

Check criterion4() {
  Check c;
  auto timed = [&](const std::string& name, const Word& w, const PowerThreshold& t, std::size_t min_len) {
    const auto t0 = Clock::now();
    const auto end = first_violation_end(w.letters(), t);
    const double dt = seconds_since(t0);
    c.require(w.size() >= min_len, name + " too short");
    c.require(!end, name + " fails at length " + (end ? std::to_string(*end) : ""));
    c.require(dt < kShortLimit, name + " took " + std::to_string(dt) + "s");
  };
  timed("g_3", g_word_prefix(3), PowerThreshold(Rational(7, 3), true), 1);
  timed("a_6", a_word_prefix(6), PowerThreshold(Rational(7, 3), false), 1);
  const Rational alpha(21, 10);
  timed("general_3", general_word_prefix(general_params(alpha), 3), PowerThreshold(alpha, false), 10000);
  return c;
}

Check criterion5() {
  Check c;
  const Word g = g_word_prefix(3);
  for (unsigned n = 1; n <= 2; ++n) c.require(window_holds(g, g_word_windows(n)), "g window " + std::to_string(n));

  const Word a = a_word_prefix(7);
  std::uint64_t next = 0;
  for (unsigned n = 0; n <= 4; ++n) {
    const auto win = a_word_windows(n);
    c.require(win.first_position == next, "a windows leave a gap before " + std::to_string(n));
    c.require(window_holds(a, win), "a window " + std::to_string(n));
    next = win.last_position + 1;
  }

  const auto p = general_params(Rational(21, 10));
  const Word cw = general_word_prefix(p, 3);
  next = 0;
  for (unsigned n = 0; n <= 1; ++n) {
    const auto win = general_word_windows(p, n);
    c.require(win.first_position == next, "general windows leave a gap before " + std::to_string(n));
    c.require(window_holds(cw, win), "general window " + std::to_string(n));
    next = win.last_position + 1;
  }
  return c;
}

Check criterion6() {
  Check c;
  const std::array<Rational, 4> alphas{Rational(2), Rational(7, 3), Rational(5, 2), Rational(3)};
  for (const auto& alpha : alphas) {
    for (bool strict : {false, true}) {
      const PowerThreshold t(alpha, strict);
      for (std::size_t n = 0; n <= 16 && c.ok; ++n) {
        for (std::uint64_t b = 0; b < (std::uint64_t{1} << n) && c.ok; ++b) {
          const Word w = oracle::from_bits(b, n);
          const auto got = find_violation(w.letters(), t);
          const auto want = oracle::first_violation(w, alpha.num(), alpha.den(), strict);
          const bool same = got.has_value() == want.has_value() &&
                            (!got || (got->start == want->start && got->period == want->period &&
                                      got->length == want->length));
          c.require(same, "find_violation on " + w.to_string() + " at " + alpha.to_string() +
                              (strict ? "+" : ""));
          if (n == 16 || got) continue;
          for (Letter x = 0; x < 2; ++x) {
            Word ext = w;
            ext.push_back(x);
            c.require(extend_check(w, x, alpha, strict) == oracle::power_free(ext, alpha.num(), alpha.den(), strict),
                      "extend_check on " + ext.to_string());
          }
        }
      }
    }
  }
  return c;
}

Check criterion7() {
  Check c;
  for (unsigned n = 0; n <= pinned::kProgressionMaxN; ++n) {
    c.require(verify_progression(n).holds, "progression " + std::to_string(n));
  }
  c.require(verify_oddsq(pinned::kOddSqMaxHalf).holds, "odd squares");
  const auto sf = verify_squarefact(pinned::kSquareFactMaxLen);
  c.require(sf.holds, "square factorization");
  c.require(!sf.exemptions.empty(), "no exemptions");
  c.require(std::find(sf.exemptions.begin(), sf.exemptions.end(), Word::parse("00")) != sf.exemptions.end(),
            "00 not exempt");

  const Rational a(7, 3);
  const PowerThreshold t(a, false);
  std::uint64_t factored = 0;
  for_each_power_free(t, pinned::kKsFactorMaxLen, [&](std::span<const Letter> x) {
    const Word w{std::vector<Letter>(x.begin(), x.end())};
    try {
      const auto f = ks_factorize(w, a);
      const bool ok = f.u.size() <= 2 && f.v.size() <= 2 && f.u + oracle::thue_morse_image(f.y) + f.v == w;
      c.require(ok, "bad factorization of " + w.to_string());
    } catch (const std::exception&) {
      c.require(false, "no factorization of " + w.to_string());
    }
    ++factored;
    return c.ok;
  });
  c.require(factored > 0, "no words factored");
  return c;
}

Check criterion8() {
  Check c;
  const Word t = iterate(thue_morse(), 0, 12);
  c.require(t.size() == 4096, "length");
  c.require(!first_violation_end(t.letters(), PowerThreshold(Rational(2), true)), "overlap found");
  c.require(oracle::power_free(t.prefix(256), 2, 1, true), "oracle finds an overlap");
  for (std::size_t len = 2; len <= t.size(); len += 2) c.require(!square_of_length_at(t, 0, len), "square prefix");
  c.require(verify_ilie(pinned::kIlieMaxLen).holds, "Ilie property");
  return c;
}

Check criterion9() {
  Check c;
  const Word a6 = a_word_prefix(6);
  const Word a7 = a_word_prefix(7);
  c.require(a7.starts_with(a6), "prefixes do not nest");
  bool found = false;
  std::size_t where = 0;
  for (std::size_t i = 0; i < a6.size() && !found; ++i) {
    if (i + 100 > a7.size()) break;
    bool none = true;
    for (std::size_t len = 2; len <= 100 && none; len += 2) none = !square_of_length_at(a7, i, len);
    if (none) {
      found = true;
      where = i;
    }
  }
  c.require(found, "every position starts a short square");
  if (found) c.note = "position " + std::to_string(where);
  return c;
}

}  // namespace

int main() {
  const std::array<std::pair<const char*, std::function<Check()>>, 9> criteria{{
      {"1 unavoidable factor bounds", criterion1},
      {"2 squares theorem to 48/96", criterion2},
      {"3 sharpness example", criterion3},
      {"4 construction prefixes", criterion4},
      {"5 square windows", criterion5},
      {"6 oracle equivalence n<=16", criterion6},
      {"7 lemmas", criterion7},
      {"8 Thue-Morse facts", criterion8},
      {"9 non-squareful evidence", criterion9},
  }};
  int failures = 0;
  for (const auto& [name, fn] : criteria) {
    const auto t0 = Clock::now();
    Check c;
    try {
      c = fn();
    } catch (const std::exception& e) {
      c.ok = false;
      c.note = std::string("exception: ") + e.what();
    }
    const double dt = seconds_since(t0);
    std::printf("%s criterion %s (%.2fs)%s%s\n", c.ok ? "PASS" : "FAIL", name, dt, c.note.empty() ? "" : ": ",
                c.note.c_str());
    std::fflush(stdout);
    failures += !c.ok;
  }
  return failures == 0 ? 0 : 1;
}
