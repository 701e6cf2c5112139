#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "repwords/morphism.hpp"
#include "repwords/rational.hpp"
#include "repwords/word.hpp"

namespace repwords {

/// Closed range of positions at which a square of `square_length` letters
/// starts in the limit word.
struct SquareWindow {
  std::uint64_t first_position = 0;
  std::uint64_t last_position = 0;
  std::uint64_t square_length = 0;

  friend bool operator==(const SquareWindow&, const SquareWindow&) = default;
};

/// X_n = removed^{-1} (lead · step(X_{n-1})), X_0 = seed.
///
/// All three constructions are instances: the g-word drops 011010 from
/// g(X), the word a prepends 0 to mu^2(X), and the general construction drops
/// u from mu^s(0 · X). The removed prefix is checked letter by letter; a
/// mismatch throws std::logic_error.
struct Recurrence {
  Word seed;
  Word lead;
  Morphism step;
  Word removed;

  Word prefix(unsigned n) const;
  /// |X_n| computed from letter counts, without generating the word.
  std::uint64_t length(unsigned n) const;
};

/// Parameters of the general construction: s >= 3, t >= 5, beta = 3 - t/2^s
/// with 2 < beta, and mu^s(0) with its length-t prefix removed begins with 00.
class GeneralParams {
 public:
  /// Validates all conditions; throws std::invalid_argument otherwise.
  static GeneralParams make(unsigned s, unsigned t);

  unsigned s() const noexcept { return s_; }
  unsigned t() const noexcept { return t_; }
  const Rational& beta() const noexcept { return beta_; }
  /// t' = 2^s - t.
  std::uint64_t t_prime() const noexcept { return (std::uint64_t{1} << s_) - t_; }
  /// Prefix of length t of mu^s(0).
  Word u() const;
  /// u^{-1} mu^s(0).
  Word u_prime() const;

  friend bool operator==(const GeneralParams&, const GeneralParams&) = default;

 private:
  GeneralParams(unsigned s, unsigned t, Rational beta) : s_(s), t_(t), beta_(beta) {}
  unsigned s_;
  unsigned t_;
  Rational beta_;
};

Recurrence g_recurrence();
Recurrence a_recurrence();
Recurrence general_recurrence(const GeneralParams& p);

Word g_word_prefix(unsigned n);
Word a_word_prefix(unsigned n);
Word general_word_prefix(const GeneralParams& p, unsigned n);

/// Window of squares of length 6*21^n starting at [0, |x|-1]; n >= 1.
SquareWindow g_word_windows(unsigned n);
/// Window [(4^n-1)/3, (4^{n+1}-1)/3 - 1] of squares of length 2*4^{n+1}.
SquareWindow a_word_windows(unsigned n);
/// n = 0: base window [0, t'-1], squares of length 2^{s+1}.
/// n >= 1: [F_n, F_n + G_n - 1], squares of length 2^{(n+1)s+1}.
SquareWindow general_word_windows(const GeneralParams& p, unsigned n);

/// Smallest (s, t) in (s, then t) order for 2 < alpha < 7/3.
GeneralParams general_params(const Rational& alpha);
/// Same search with only alpha > 2 required; s is capped at 30.
GeneralParams search_general_params(const Rational& alpha);

enum class Construction { g, a, general };
Construction parse_construction(std::string_view name);

/// Letter-at-a-time generation of X_n with memory proportional to n and the
/// morphism image sizes; yields exactly Recurrence::prefix(n).
class ConstructionStream {
 public:
  ConstructionStream(Recurrence rec, unsigned iterations);
  std::optional<Letter> next();

 private:
  struct Level {
    std::size_t lead_pos = 0;
    int block_letter = -1;
    std::size_t block_pos = 0;
    std::size_t dropped = 0;
  };
  std::optional<Letter> pull(unsigned k);
  std::optional<Letter> raw(unsigned k);

  Recurrence rec_;
  std::vector<Level> levels_;
  std::size_t seed_pos_ = 0;
};

}  // namespace repwords
