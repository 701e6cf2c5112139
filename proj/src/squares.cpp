#include "repwords/squares.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "repwords/morphism.hpp"

namespace repwords {

namespace {

bool is_square_at(std::span<const Letter> w, std::size_t i, std::size_t h) {
  return ranges_equal(w, i, i + h, h);
}

}  // namespace

bool SquareOccurrence::holds_in(const Word& host) const noexcept {
  if (half_length == 0 || position > host.size() || 2 * half_length > host.size() - position) return false;
  return is_square_at(host.letters(), position, half_length);
}

std::vector<std::size_t> squares_starting_at(const Word& w, std::size_t i) {
  if (i >= w.size()) throw std::out_of_range("position out of range");
  std::vector<std::size_t> halves;
  const auto letters = w.letters();
  for (std::size_t h = 1; 2 * h <= w.size() - i; ++h) {
    if (is_square_at(letters, i, h)) halves.push_back(h);
  }
  return halves;
}

std::optional<std::size_t> min_square_at(const Word& w, std::size_t i, std::size_t max_half) {
  if (i >= w.size()) throw std::out_of_range("position out of range");
  const auto letters = w.letters();
  for (std::size_t h = 1; h <= max_half && 2 * h <= w.size() - i; ++h) {
    if (is_square_at(letters, i, h)) return h;
  }
  return std::nullopt;
}

SquareProfile square_profile(const Word& w) {
  SquareProfile prof;
  prof.horizon = w.size();
  prof.positions.resize(w.size());
  const auto letters = w.letters();
  for (std::size_t i = 0; i < w.size(); ++i) {
    auto& rec = prof.positions[i];
    for (std::size_t h = 1; 2 * h <= w.size() - i; ++h) {
      if (!is_square_at(letters, i, h)) continue;
      if (!rec.min_half_length) rec.min_half_length = h;
      rec.max_half_length = h;
    }
  }
  return prof;
}

std::vector<Word> conjugates(const Word& w) {
  std::vector<Word> out;
  out.reserve(w.size() + 1);
  out.push_back(w);
  for (std::size_t r = 1; r < w.size(); ++r) out.push_back(w.rotated_left(r));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

const std::vector<Word>& script_a_bases() {
  static const std::vector<Word> bases{Word::parse("00"), Word::parse("11"), Word::parse("010010"),
                                       Word::parse("101101")};
  return bases;
}

std::optional<ScriptAWitness> classify_script_A(const Word& w) {
  const std::size_t n = w.size();
  // Lengths in the set are 2*2^k (bases 00, 11) or 6*2^k (bases 010010, 101101).
  std::size_t first_base = 0;
  std::size_t block = 0;
  if (n >= 2 && n % 2 == 0 && std::has_single_bit(n / 2)) {
    first_base = 0;
    block = n / 2;
  } else if (n >= 6 && n % 6 == 0 && std::has_single_bit(n / 6)) {
    first_base = 2;
    block = n / 6;
  } else {
    return std::nullopt;
  }
  const auto k = static_cast<unsigned>(std::countr_zero(block));
  const Morphism mk = thue_morse().power(k);
  for (std::size_t b = first_base; b < first_base + 2; ++b) {
    const Word& base = script_a_bases()[b];
    const Word image = mk.apply(base);
    for (std::size_t r = 0; r < n; ++r) {
      if (image.rotated_left(r) == w) return ScriptAWitness{k, base, r};
    }
  }
  return std::nullopt;
}

std::vector<Word> enumerate_script_A(std::size_t max_len, bool with_conjugates) {
  std::vector<Word> out;
  for (const Word& base : script_a_bases()) {
    Word img = base;
    while (img.size() <= max_len) {
      if (with_conjugates) {
        for (auto& c : conjugates(img)) out.push_back(std::move(c));
      } else {
        out.push_back(img);
      }
      img = thue_morse().apply(img);
    }
  }
  std::sort(out.begin(), out.end(), ShortLex{});
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

// True when the square of half-length h at i has no later occurrence in w.
bool rightmost_at(const Word& w, std::size_t i, std::size_t h) {
  return w.find(w.substr(i, 2 * h), i + 1) == Word::npos;
}

std::vector<std::size_t> rightmost_squares_at(const Word& w, std::size_t i) {
  std::vector<std::size_t> out;
  for (std::size_t h : squares_starting_at(w, i)) {
    if (rightmost_at(w, i, h)) out.push_back(h);
  }
  return out;
}

}  // namespace

std::vector<IlieViolation> check_ilie(const Word& w) {
  std::vector<IlieViolation> out;
  if (w.size() < 2) return out;
  std::vector<std::size_t> here = rightmost_squares_at(w, 0);
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    std::vector<std::size_t> next = rightmost_squares_at(w, i + 1);
    for (std::size_t a = 0; a < here.size(); ++a) {
      for (std::size_t b = a + 1; b < here.size(); ++b) {
        const std::size_t v = here[a];
        const std::size_t u = here[b];
        for (std::size_t ww : next) {
          if (ww != u && ww != v && ww < 2 * v) out.push_back({i, v, u, ww});
        }
      }
    }
    here = std::move(next);
  }
  return out;
}

}  // namespace repwords
