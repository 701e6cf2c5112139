#pragma once

#include <cstddef>
#include <optional>
#include <span>

#include "repwords/rational.hpp"
#include "repwords/word.hpp"

namespace repwords {

/// Certifies that host[start, start+length) has period `period`.
struct PowerWitness {
  std::size_t start = 0;
  std::size_t period = 1;
  std::size_t length = 1;

  Rational exponent() const {
    return Rational(static_cast<std::int64_t>(length), static_cast<std::int64_t>(period));
  }
  /// Letter-by-letter check against the host word.
  bool holds_in(const Word& host) const noexcept;

  friend bool operator==(const PowerWitness&, const PowerWitness&) = default;
};

/// Forbidden exponents: e >= alpha, or e > alpha when `strict` (alpha^+ powers).
class PowerThreshold {
 public:
  /// Throws std::invalid_argument("exponent threshold must exceed 1") when alpha <= 1.
  PowerThreshold(Rational alpha, bool strict);

  const Rational& alpha() const noexcept { return alpha_; }
  bool strict() const noexcept { return strict_; }

  /// Smallest length L such that a factor of length L and period p is forbidden.
  std::size_t min_forbidden_length(std::size_t period) const noexcept {
    const auto k = static_cast<std::int64_t>(period);
    return static_cast<std::size_t>(strict_ ? alpha_.floor_times(k) + 1 : alpha_.ceil_times(k));
  }
  bool forbids(std::size_t length, std::size_t period) const noexcept {
    return length >= min_forbidden_length(period);
  }

 private:
  Rational alpha_;
  bool strict_;
};

struct WordExponent {
  Rational exponent;
  std::size_t period;
};

/// Smallest period of w and the exponent |w|/period. Throws on the empty word.
WordExponent word_exponent(const Word& w);

/// First forbidden factor ordered by (start, period), reported at maximal
/// length for that (start, period). Absent iff w is power-free under the
/// threshold.
std::optional<PowerWitness> find_violation(const Word& w, const Rational& alpha, bool strict);
std::optional<PowerWitness> find_violation(std::span<const Letter> w, const PowerThreshold& t);

bool is_power_free(const Word& w, const Rational& alpha, bool strict);
bool is_power_free(std::span<const Letter> w, const PowerThreshold& t);

/// True iff w·c is power-free, assuming w already is. Only factors that end
/// at the appended letter are inspected.
bool extend_check(const Word& w, Letter c, const Rational& alpha, bool strict);

/// Whether some forbidden factor of w ends at its last letter.
bool has_suffix_violation(std::span<const Letter> w, const PowerThreshold& t) noexcept;

/// Length of the shortest forbidden prefix of w (one past the letter that
/// first completes a forbidden factor), or absent if w is power-free.
/// Runs the incremental checker letter by letter.
std::optional<std::size_t> first_violation_end(std::span<const Letter> w, const PowerThreshold& t);

}  // namespace repwords
