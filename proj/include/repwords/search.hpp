#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "repwords/power.hpp"
#include "repwords/rational.hpp"
#include "repwords/word.hpp"

namespace repwords {

/// Depth-first walk over the power-free extensions of `start` up to
/// `max_len` letters, letter 0 before letter 1. `visit(word)` is called on
/// every power-free extension (not on `start` itself) and returns whether to
/// descend further. Returns the number of visited nodes.
template <class Visit>
std::uint64_t for_each_power_free(const PowerThreshold& t, std::size_t max_len, Visit&& visit,
                                  std::span<const Letter> start = {}) {
  std::vector<Letter> buf(start.begin(), start.end());
  buf.reserve(max_len + 1);
  std::uint64_t nodes = 0;
  auto rec = [&](auto&& self) -> void {
    if (buf.size() >= max_len) return;
    for (Letter c = 0; c < 2; ++c) {
      buf.push_back(c);
      if (!has_suffix_violation(buf, t)) {
        ++nodes;
        if (visit(std::span<const Letter>(buf))) self(self);
      }
      buf.pop_back();
    }
  };
  rec(rec);
  return nodes;
}

struct EnumerationReport {
  Rational alpha;
  bool strict = false;
  /// counts[n] = number of power-free words of length n.
  std::vector<std::uint64_t> counts;
  std::optional<std::vector<Word>> exemplars;
  std::uint64_t nodes = 0;
};

EnumerationReport enumerate_power_free(const Rational& alpha, bool strict, std::size_t max_len,
                                       bool collect_words = false);

using ClaimWitness = std::variant<Word, PowerWitness>;

struct ClaimResult {
  std::string claim_id;
  bool holds = false;
  std::optional<ClaimWitness> witness;
  /// Search-size counters; never timings.
  std::map<std::string, std::uint64_t> stats;
  /// Words set aside by a hypothesis of the claim (e.g. short squares).
  std::vector<Word> exemptions;
  std::string detail;
};

/// Every power-free word of length bound+1 contains `factor`. On failure the
/// witness is the first avoiding word of that length in search order.
ClaimResult verify_unavoidable_factor(const Rational& alpha, bool strict, std::size_t bound, const Word& factor);

/// For 7/3-power-free uvxy with |u|=|v|=|x|=|y|=2^n and Morse blocks u, v,
/// x is a Morse block.
ClaimResult verify_progression(unsigned n);

struct KsFactorization {
  Word u;
  Word y;
  Word v;
};

/// x = u mu(y) v with u, v in {e, 0, 1, 00, 11}; smallest |u| first, then
/// smallest |v|. Requires 2 < alpha <= 7/3 and x alpha-power-free
/// (std::invalid_argument otherwise); throws std::runtime_error
/// ("factorization failed") if nothing fits.
KsFactorization ks_factorize(const Word& x, const Rational& alpha);

/// Inverse Thue–Morse image: y with mu(y) = w, if any.
std::optional<Word> thue_morse_preimage(const Word& w);

/// Squares mu(y) with |y| odd are never 7/3-power-free, for |y| <= max_half.
ClaimResult verify_oddsq(std::size_t max_half);

/// 7/3-power-free squares xx with 8 < |xx| <= max_len are mu(y) or ~a mu(y) a.
ClaimResult verify_squarefact(std::size_t max_len);

/// 7/3-power-free squares of length <= max_len are conjugates of the
/// Thue–Morse squares, and conversely up to converse_max_len.
ClaimResult verify_squares_theorem(std::size_t max_len, std::size_t converse_max_len);

/// Checks that w is a square, is (7/3)^+-power-free, contains a factor of
/// exponent at least 7/3, and is not a conjugate of a Thue–Morse square.
ClaimResult verify_counterexample(const Word& w);

/// Ilie's square-position property on every binary word of length <= max_len.
ClaimResult verify_ilie(std::size_t max_len);

/// ks_factorize succeeds and recomposes on every 7/3-power-free word of
/// length <= max_len.
ClaimResult verify_ks_factorization(std::size_t max_len);

/// Case test for the square factorization lemma.
enum class SquareFactCase { image, flanked, neither };
SquareFactCase square_fact_case(const Word& xx);

}  // namespace repwords
