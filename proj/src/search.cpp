#include "repwords/search.hpp"

#include <array>
#include <stdexcept>

#include "repwords/morphism.hpp"
#include "repwords/squares.hpp"

namespace repwords {

namespace {

const Rational kSevenThirds(7, 3);

bool ends_with(std::span<const Letter> w, const Word& f) {
  if (f.size() > w.size()) return false;
  const std::size_t off = w.size() - f.size();
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (w[off + i] != f[i]) return false;
  }
  return true;
}

Word to_word(std::span<const Letter> s) { return Word(std::vector<Letter>(s.begin(), s.end())); }

Word doubled(std::span<const Letter> x) {
  std::vector<Letter> v(x.begin(), x.end());
  v.insert(v.end(), x.begin(), x.end());
  return Word(std::move(v));
}

}  // namespace

EnumerationReport enumerate_power_free(const Rational& alpha, bool strict, std::size_t max_len,
                                       bool collect_words) {
  const PowerThreshold t(alpha, strict);
  EnumerationReport rep;
  rep.alpha = alpha;
  rep.strict = strict;
  rep.counts.assign(max_len + 1, 0);
  rep.counts[0] = 1;
  if (collect_words) rep.exemplars.emplace().push_back(Word{});
  rep.nodes = for_each_power_free(t, max_len, [&](std::span<const Letter> w) {
    ++rep.counts[w.size()];
    if (collect_words) rep.exemplars->push_back(to_word(w));
    return true;
  });
  if (collect_words) std::stable_sort(rep.exemplars->begin(), rep.exemplars->end(), ShortLex{});
  return rep;
}

ClaimResult verify_unavoidable_factor(const Rational& alpha, bool strict, std::size_t bound, const Word& factor) {
  if (bound < 1) throw std::invalid_argument("bound must be at least 1");
  const PowerThreshold t(alpha, strict);
  ClaimResult res;
  res.claim_id = "unavoidable-" + std::to_string(bound);
  const std::size_t target = bound + 1;
  std::size_t longest = 0;
  std::optional<Word> avoiding;
  const std::uint64_t nodes = for_each_power_free(t, target, [&](std::span<const Letter> w) {
    if (avoiding) return false;
    if (ends_with(w, factor)) return false;
    longest = std::max(longest, w.size());
    if (w.size() == target) avoiding = to_word(w);
    return true;
  });
  res.holds = !avoiding.has_value();
  if (avoiding) res.witness = *avoiding;
  res.stats["nodes"] = nodes;
  res.stats["longest_avoiding_length"] = longest;
  res.detail = "every " + alpha.to_string() + (strict ? "+" : "") + "-power-free word of length " +
               std::to_string(target) + " contains " + factor.to_string();
  return res;
}

ClaimResult verify_progression(unsigned n) {
  const PowerThreshold t(kSevenThirds, false);
  const std::size_t block = std::size_t{1} << n;
  ClaimResult res;
  res.claim_id = "progression-" + std::to_string(n);
  res.holds = true;
  std::uint64_t nodes = 0;
  std::uint64_t complete = 0;
  for (Letter a = 0; a < 2 && res.holds; ++a) {
    for (Letter b = 0; b < 2 && res.holds; ++b) {
      const Word uv = morse_block(a, n) + morse_block(b, n);
      if (!is_power_free(uv.letters(), t)) continue;
      nodes += for_each_power_free(
          t, 4 * block,
          [&](std::span<const Letter> w) {
            if (!res.holds) return false;
            if (w.size() < 4 * block) return true;
            ++complete;
            if (!as_morse_block(to_word(w.subspan(2 * block, block)))) {
              res.holds = false;
              res.witness = to_word(w);
            }
            return false;
          },
          uv.letters());
    }
  }
  res.stats["nodes"] = nodes;
  res.stats["complete_words"] = complete;
  res.detail = "x is a Morse block in every 7/3-power-free uvxy with Morse blocks u, v of length " +
               std::to_string(block);
  return res;
}

std::optional<Word> thue_morse_preimage(const Word& w) {
  if (w.size() % 2 != 0) return std::nullopt;
  std::vector<Letter> y(w.size() / 2);
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (w[2 * i] == w[2 * i + 1]) return std::nullopt;
    y[i] = w[2 * i];
  }
  return Word(std::move(y));
}

KsFactorization ks_factorize(const Word& x, const Rational& alpha) {
  if (alpha <= Rational(2) || alpha > kSevenThirds) {
    throw std::invalid_argument("factorization requires 2 < alpha <= 7/3");
  }
  if (!is_power_free(x, alpha, false)) throw std::invalid_argument("word is not alpha-power-free");
  static const std::array<Word, 5> affixes{Word{}, Word{0}, Word{1}, Word{0, 0}, Word{1, 1}};
  for (const Word& u : affixes) {
    if (!x.starts_with(u)) continue;
    for (const Word& v : affixes) {
      if (u.size() + v.size() > x.size() || !x.ends_with(v)) continue;
      const Word mid = x.substr(u.size(), x.size() - u.size() - v.size());
      auto y = thue_morse_preimage(mid);
      if (y && is_power_free(*y, alpha, false)) return {u, std::move(*y), v};
    }
  }
  throw std::runtime_error("factorization failed");
}

ClaimResult verify_oddsq(std::size_t max_half) {
  const PowerThreshold t(kSevenThirds, false);
  ClaimResult res;
  res.claim_id = "oddsq-" + std::to_string(max_half);
  res.holds = true;
  std::uint64_t checked = 0;
  // Squares mu(y) = xx with |x| = |y| odd; mu(y) power-free forces y power-free.
  const std::uint64_t nodes = for_each_power_free(t, max_half, [&](std::span<const Letter> y) {
    if (!res.holds) return false;
    if (y.size() % 2 == 1) {
      ++checked;
      const Word img = thue_morse().apply(to_word(y));
      if (ranges_equal(img.letters(), 0, y.size(), y.size()) && is_power_free(img.letters(), t)) {
        res.holds = false;
        res.witness = img;
      }
    }
    return true;
  });
  // |x| >= 5: over every y of length 1 or 3, power-free or not.
  std::uint64_t small = 0;
  for (std::size_t m = 1; m < 5 && res.holds; m += 2) {
    for (std::uint32_t bits = 0; bits < (1U << m); ++bits) {
      std::vector<Letter> y(m);
      for (std::size_t i = 0; i < m; ++i) y[i] = static_cast<Letter>((bits >> (m - 1 - i)) & 1U);
      const Word img = thue_morse().apply(Word(std::move(y)));
      ++small;
      if (ranges_equal(img.letters(), 0, m, m) && is_power_free(img.letters(), t)) {
        res.holds = false;
        res.witness = img;
        break;
      }
    }
  }
  res.stats["nodes"] = nodes;
  res.stats["odd_preimages_checked"] = checked;
  res.stats["short_preimages_exhausted"] = small;
  res.detail = "no 7/3-power-free square mu(y) with |y| odd and |y| <= " + std::to_string(max_half);
  return res;
}

SquareFactCase square_fact_case(const Word& xx) {
  if (thue_morse_preimage(xx)) return SquareFactCase::image;
  if (xx.size() >= 2 && xx[0] != xx[xx.size() - 1] && thue_morse_preimage(xx.substr(1, xx.size() - 2))) {
    return SquareFactCase::flanked;
  }
  return SquareFactCase::neither;
}

ClaimResult verify_squarefact(std::size_t max_len) {
  if (max_len < 10 || max_len % 2 != 0) throw std::invalid_argument("max_len must be even and at least 10");
  const PowerThreshold t(kSevenThirds, false);
  ClaimResult res;
  res.claim_id = "squarefact-" + std::to_string(max_len);
  res.holds = true;
  std::uint64_t squares = 0;
  const std::uint64_t nodes = for_each_power_free(t, max_len / 2, [&](std::span<const Letter> x) {
    if (!res.holds) return false;
    const Word xx = doubled(x);
    if (!is_power_free(xx.letters(), t)) return true;
    ++squares;
    if (square_fact_case(xx) != SquareFactCase::neither) return true;
    if (xx.size() <= 8) {
      res.exemptions.push_back(xx);
    } else {
      res.holds = false;
      res.witness = xx;
    }
    return true;
  });
  std::sort(res.exemptions.begin(), res.exemptions.end(), ShortLex{});
  res.stats["nodes"] = nodes;
  res.stats["squares_checked"] = squares;
  res.stats["short_exemptions"] = res.exemptions.size();
  res.detail = "7/3-power-free squares of length 10.." + std::to_string(max_len) +
               " are mu(y) or ~a mu(y) a";
  return res;
}

ClaimResult verify_squares_theorem(std::size_t max_len, std::size_t converse_max_len) {
  if (max_len < 2 || max_len % 2 != 0) throw std::invalid_argument("max_len must be even and at least 2");
  const PowerThreshold t(kSevenThirds, false);
  ClaimResult res;
  res.claim_id = "squares73-" + std::to_string(max_len);
  res.holds = true;
  std::uint64_t forward = 0;
  std::uint64_t small = 0;
  const std::uint64_t nodes = for_each_power_free(t, max_len / 2, [&](std::span<const Letter> x) {
    if (!res.holds) return false;
    const Word xx = doubled(x);
    if (!is_power_free(xx.letters(), t)) return true;
    ++forward;
    if (xx.size() <= 8) ++small;
    if (!classify_script_A(xx)) {
      res.holds = false;
      res.witness = xx;
    }
    return true;
  });
  std::uint64_t converse = 0;
  if (res.holds) {
    for (const Word& c : enumerate_script_A(converse_max_len, true)) {
      ++converse;
      const bool square = ranges_equal(c.letters(), 0, c.size() / 2, c.size() / 2);
      if (!square || !is_power_free(c.letters(), t)) {
        res.holds = false;
        res.witness = c;
        break;
      }
    }
  }
  res.stats["nodes"] = nodes;
  res.stats["forward_squares"] = forward;
  res.stats["squares_up_to_8"] = small;
  res.stats["converse_conjugates"] = converse;
  res.detail = "7/3-power-free squares of length <= " + std::to_string(max_len) +
               " are exactly the conjugates of Thue-Morse squares (converse to " +
               std::to_string(converse_max_len) + ")";
  return res;
}

ClaimResult verify_counterexample(const Word& w) {
  ClaimResult res;
  res.claim_id = "counterexample-" + std::to_string(w.size());
  const bool square = w.size() % 2 == 0 && ranges_equal(w.letters(), 0, w.size() / 2, w.size() / 2);
  const bool plus_free = is_power_free(w, kSevenThirds, true);
  const auto sharp = find_violation(w, kSevenThirds, false);
  const bool outside = !classify_script_A(w).has_value();
  res.holds = square && plus_free && sharp.has_value() && outside;
  res.stats["square"] = square;
  res.stats["plus_power_free"] = plus_free;
  res.stats["has_exponent_7_3_factor"] = sharp.has_value();
  res.stats["outside_conjugates"] = outside;
  if (res.holds) {
    res.witness = *sharp;
  } else {
    res.witness = w;
  }
  res.detail = "square, (7/3)+-power-free, contains a 7/3-power, not a conjugate of a Thue-Morse square";
  return res;
}

ClaimResult verify_ilie(std::size_t max_len) {
  ClaimResult res;
  res.claim_id = "ilie-" + std::to_string(max_len);
  res.holds = true;
  std::uint64_t words = 0;
  for (std::size_t n = 0; n <= max_len && res.holds; ++n) {
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
      std::vector<Letter> v(n);
      for (std::size_t i = 0; i < n; ++i) v[i] = static_cast<Letter>((bits >> (n - 1 - i)) & 1U);
      Word w(std::move(v));
      ++words;
      if (!check_ilie(w).empty()) {
        res.holds = false;
        res.witness = std::move(w);
        break;
      }
    }
  }
  res.stats["words_checked"] = words;
  res.detail = "square-position property (rightmost occurrences) holds on every binary word of length <= " +
               std::to_string(max_len);
  return res;
}

ClaimResult verify_ks_factorization(std::size_t max_len) {
  const PowerThreshold t(kSevenThirds, false);
  ClaimResult res;
  res.claim_id = "ksfactor-" + std::to_string(max_len);
  res.holds = true;
  std::uint64_t words = 1;
  auto check = [&](const Word& x) {
    try {
      const auto f = ks_factorize(x, kSevenThirds);
      if (f.u + thue_morse().apply(f.y) + f.v == x && is_power_free(f.y.letters(), t)) return true;
    } catch (const std::runtime_error&) {
    }
    res.holds = false;
    res.witness = x;
    return false;
  };
  check(Word{});
  const std::uint64_t nodes = for_each_power_free(t, max_len, [&](std::span<const Letter> x) {
    if (!res.holds) return false;
    ++words;
    return check(to_word(x));
  });
  res.stats["nodes"] = nodes;
  res.stats["words_factored"] = words;
  res.detail = "every 7/3-power-free word of length <= " + std::to_string(max_len) + " is u mu(y) v";
  return res;
}

}  // namespace repwords
