#include "repwords/constructions.hpp"

#include <array>
#include <bit>
#include <stdexcept>
#include <string>

namespace repwords {

namespace {

using Counts = std::array<std::uint64_t, 2>;

Counts letter_counts(const Word& w) { return {w.count(0), w.count(1)}; }

std::uint64_t ipow(std::uint64_t base, unsigned e) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < e; ++i) {
    if (r > UINT64_MAX / base) throw std::out_of_range("window parameters overflow 64 bits");
    r *= base;
  }
  return r;
}

// Letter i of mu^s(0) is the parity of popcount(i).
Letter thue_morse_letter(std::uint64_t i) { return static_cast<Letter>(std::popcount(i) & 1); }

}  // namespace

Word Recurrence::prefix(unsigned n) const {
  Word x = seed;
  for (unsigned k = 0; k < n; ++k) {
    Word next = lead + step.apply(x);
    if (!next.starts_with(removed)) {
      throw std::logic_error("internal invariant failure: iteration " + std::to_string(k + 1) +
                             " does not begin with " + removed.to_string());
    }
    x = next.suffix_from(removed.size());
  }
  return x;
}

std::uint64_t Recurrence::length(unsigned n) const {
  Counts c = letter_counts(seed);
  const Counts l = letter_counts(lead);
  const Counts i0 = letter_counts(step.image(0));
  const Counts i1 = letter_counts(step.image(1));
  const Counts r = letter_counts(removed);
  for (unsigned k = 0; k < n; ++k) {
    Counts next{};
    for (int a = 0; a < 2; ++a) next[a] = l[a] + c[0] * i0[a] + c[1] * i1[a] - r[a];
    c = next;
  }
  return c[0] + c[1];
}

GeneralParams GeneralParams::make(unsigned s, unsigned t) {
  if (s < 3) throw std::invalid_argument("general construction requires s >= 3");
  if (s > 30) throw std::invalid_argument("general construction supports s <= 30");
  if (t < 5) throw std::invalid_argument("general construction requires t >= 5");
  const std::uint64_t block = std::uint64_t{1} << s;
  // beta = 3 - t/2^s > 2 iff t < 2^s; the 00 condition needs two letters after t.
  if (t + 2 > block) throw std::invalid_argument("general construction requires t <= 2^s - 2");
  if (thue_morse_letter(t) != 0 || thue_morse_letter(t + 1) != 0) {
    throw std::invalid_argument("mu^s(0) without its length-t prefix must begin with 00");
  }
  const Rational beta = Rational(3) - Rational(t, static_cast<std::int64_t>(block));
  return GeneralParams(s, t, beta);
}

Word GeneralParams::u() const { return morse_block(0, s_).prefix(t_); }
Word GeneralParams::u_prime() const { return morse_block(0, s_).suffix_from(t_); }

Recurrence g_recurrence() {
  return {Word::parse("0110110"), Word{}, g_morphism(), Word::parse("011010")};
}

Recurrence a_recurrence() {
  return {Word::parse("00"), Word::parse("0"), thue_morse().power(2), Word{}};
}

Recurrence general_recurrence(const GeneralParams& p) {
  const Morphism step = thue_morse().power(p.s());
  return {Word::parse("00"), step.image(0), step, p.u()};
}

Word g_word_prefix(unsigned n) { return g_recurrence().prefix(n); }
Word a_word_prefix(unsigned n) { return a_recurrence().prefix(n); }
Word general_word_prefix(const GeneralParams& p, unsigned n) { return general_recurrence(p).prefix(n); }

SquareWindow g_word_windows(unsigned n) {
  if (n < 1) throw std::invalid_argument("g-word windows require n >= 1");
  const std::uint64_t pw = ipow(21, n);
  // |x| = 21^n - (3/10)(21^n - 1); 21^n = 1 (mod 10) makes this integral.
  if ((3 * (pw - 1)) % 10 != 0) throw std::logic_error("internal invariant failure: |x| is not integral");
  const std::uint64_t x_len = pw - 3 * (pw - 1) / 10;
  return {0, x_len - 1, 6 * pw};
}

SquareWindow a_word_windows(unsigned n) {
  if (n > 30) throw std::out_of_range("a-word windows support n <= 30");
  const std::uint64_t p = ipow(4, n);
  return {(p - 1) / 3, (4 * p - 1) / 3 - 1, 8 * p};
}

SquareWindow general_word_windows(const GeneralParams& p, unsigned n) {
  const unsigned s = p.s();
  const std::uint64_t tp = p.t_prime();
  if (n == 0) return {0, tp - 1, std::uint64_t{1} << (s + 1)};
  if ((n + 1) * s + 1 > 62) throw std::out_of_range("general windows overflow 64 bits");
  const std::uint64_t block = std::uint64_t{1} << s;
  const std::uint64_t pns = std::uint64_t{1} << (n * s);
  if ((pns - 1) % (block - 1) != 0) throw std::logic_error("internal invariant failure: F_n is not integral");
  const std::uint64_t f = tp * ((pns - 1) / (block - 1));
  const std::uint64_t g = tp * pns;
  if (f >= g) throw std::logic_error("internal invariant failure: F_n >= G_n");
  return {f, f + g - 1, std::uint64_t{1} << ((n + 1) * s + 1)};
}

GeneralParams search_general_params(const Rational& alpha) {
  if (alpha <= Rational(2)) throw std::invalid_argument("general construction requires alpha > 2");
  for (unsigned s = 3; s <= 30; ++s) {
    const std::int64_t block = std::int64_t{1} << s;
    // beta < alpha  iff  t > (3 - alpha) 2^s.
    const std::int64_t t_lo = std::max<std::int64_t>(5, (Rational(3) - alpha).floor_times(block) + 1);
    for (std::int64_t t = t_lo; t + 2 <= block; ++t) {
      if (thue_morse_letter(static_cast<std::uint64_t>(t)) == 0 &&
          thue_morse_letter(static_cast<std::uint64_t>(t) + 1) == 0) {
        return GeneralParams::make(s, static_cast<unsigned>(t));
      }
    }
  }
  throw std::runtime_error("no general construction parameters with s <= 30 for alpha " + alpha.to_string());
}

GeneralParams general_params(const Rational& alpha) {
  if (alpha <= Rational(2) || alpha >= Rational(7, 3)) {
    throw std::invalid_argument("general construction parameters require 2 < alpha < 7/3");
  }
  return search_general_params(alpha);
}

Construction parse_construction(std::string_view name) {
  if (name == "g") return Construction::g;
  if (name == "a") return Construction::a;
  if (name == "general") return Construction::general;
  throw std::invalid_argument("unknown construction '" + std::string(name) + "' (expected g, a or general)");
}

ConstructionStream::ConstructionStream(Recurrence rec, unsigned iterations)
    : rec_(std::move(rec)), levels_(iterations + 1) {}

std::optional<Letter> ConstructionStream::next() { return pull(static_cast<unsigned>(levels_.size() - 1)); }

std::optional<Letter> ConstructionStream::pull(unsigned k) {
  if (k == 0) {
    if (seed_pos_ >= rec_.seed.size()) return std::nullopt;
    return rec_.seed[seed_pos_++];
  }
  Level& lv = levels_[k];
  while (true) {
    const auto c = raw(k);
    if (!c || lv.dropped >= rec_.removed.size()) return c;
    if (*c != rec_.removed[lv.dropped]) {
      throw std::logic_error("internal invariant failure: level " + std::to_string(k) +
                             " does not begin with " + rec_.removed.to_string());
    }
    ++lv.dropped;
  }
}

std::optional<Letter> ConstructionStream::raw(unsigned k) {
  Level& lv = levels_[k];
  if (lv.lead_pos < rec_.lead.size()) return rec_.lead[lv.lead_pos++];
  if (lv.block_letter >= 0) {
    const Word& img = rec_.step.image(static_cast<Letter>(lv.block_letter));
    if (lv.block_pos < img.size()) return img[lv.block_pos++];
  }
  const auto below = pull(k - 1);
  if (!below) return std::nullopt;
  lv.block_letter = *below;
  lv.block_pos = 1;
  return rec_.step.image(*below)[0];
}

}  // namespace repwords
