#include "repwords/power.hpp"

#include <stdexcept>
#include <vector>

namespace repwords {

bool PowerWitness::holds_in(const Word& host) const noexcept {
  if (period == 0 || length < period || start > host.size() || length > host.size() - start) {
    return false;
  }
  for (std::size_t i = start; i + period < start + length; ++i) {
    if (host[i] != host[i + period]) return false;
  }
  return true;
}

PowerThreshold::PowerThreshold(Rational alpha, bool strict) : alpha_(alpha), strict_(strict) {
  if (alpha_ <= Rational(1)) throw std::invalid_argument("exponent threshold must exceed 1");
}

WordExponent word_exponent(const Word& w) {
  if (w.empty()) throw std::invalid_argument("empty word has no exponent");
  // Smallest period = |w| - longest proper border (prefix function).
  const std::size_t n = w.size();
  std::vector<std::size_t> border(n, 0);
  for (std::size_t i = 1; i < n; ++i) {
    std::size_t k = border[i - 1];
    while (k > 0 && w[i] != w[k]) k = border[k - 1];
    if (w[i] == w[k]) ++k;
    border[i] = k;
  }
  const std::size_t period = n - border[n - 1];
  return {Rational(static_cast<std::int64_t>(n), static_cast<std::int64_t>(period)), period};
}

// For a fixed period p, let M[j] = (w[j] == w[j+p]). A forbidden factor with
// period p is a run of true M-values of length >= need = Lmin(p) - p. Every such
// run contains a multiple of `need`, so only those checkpoints seed a scan.
std::optional<PowerWitness> find_violation(std::span<const Letter> w, const PowerThreshold& t) {
  const std::size_t n = w.size();
  constexpr std::size_t none = static_cast<std::size_t>(-1);
  std::size_t best_start = none;
  PowerWitness best;

  for (std::size_t p = 1;; ++p) {
    const std::size_t lmin = t.min_forbidden_length(p);
    if (lmin > n) break;
    const std::size_t need = lmin - p;
    const std::size_t limit = n - p;
    const std::size_t scan_end = best_start == none ? limit : std::min(limit, best_start + need);

    std::size_t j = 0;
    while (j < scan_end) {
      if (w[j] != w[j + p]) {
        j += need;
        continue;
      }
      std::size_t a = j;
      while (a > 0 && w[a - 1] == w[a - 1 + p]) --a;
      std::size_t b = j + 1;
      while (b < limit && w[b] == w[b + p]) ++b;
      if (b - a >= need) {
        if (a < best_start) {
          best_start = a;
          best = PowerWitness{a, p, b - a + p};
        }
        break;
      }
      j = (b / need + 1) * need;
    }
  }
  if (best_start == none) return std::nullopt;
  return best;
}

std::optional<PowerWitness> find_violation(const Word& w, const Rational& alpha, bool strict) {
  return find_violation(w.letters(), PowerThreshold(alpha, strict));
}

bool is_power_free(std::span<const Letter> w, const PowerThreshold& t) {
  return !find_violation(w, t).has_value();
}

bool is_power_free(const Word& w, const Rational& alpha, bool strict) {
  return is_power_free(w.letters(), PowerThreshold(alpha, strict));
}

bool has_suffix_violation(std::span<const Letter> w, const PowerThreshold& t) noexcept {
  const std::size_t n = w.size();
  for (std::size_t p = 1;; ++p) {
    const std::size_t lmin = t.min_forbidden_length(p);
    if (lmin > n) return false;
    // The length-lmin suffix has period p iff w[j] == w[j+p] on [n-lmin, n-p).
    const std::size_t lo = n - lmin;
    std::size_t j = n - p;
    while (j > lo && w[j - 1] == w[j - 1 + p]) --j;
    if (j == lo) return true;
  }
}

bool extend_check(const Word& w, Letter c, const Rational& alpha, bool strict) {
  const PowerThreshold t(alpha, strict);
  Word ext = w;
  ext.push_back(c);
  return !has_suffix_violation(ext.letters(), t);
}

std::optional<std::size_t> first_violation_end(std::span<const Letter> w, const PowerThreshold& t) {
  for (std::size_t k = 1; k <= w.size(); ++k) {
    if (has_suffix_violation(w.first(k), t)) return k;
  }
  return std::nullopt;
}

}  // namespace repwords
