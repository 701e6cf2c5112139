#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "repwords/word.hpp"

namespace repwords {

/// Non-erasing morphism on {0,1}, given by the images of 0 and 1.
class Morphism {
 public:
  /// Throws std::invalid_argument if either image is empty.
  Morphism(Word image0, Word image1);

  const Word& image(Letter a) const noexcept { return a == 0 ? image0_ : image1_; }
  bool is_uniform() const noexcept { return image0_.size() == image1_.size(); }

  Word apply(const Word& w) const;
  /// m^n(a); iterate(a, 0) is the single letter a.
  Word iterate(Letter a, unsigned n) const;
  /// m^n as a morphism in its own right.
  Morphism power(unsigned n) const;

  /// Two lines: "0 -> <image0>" and "1 -> <image1>".
  std::string to_string() const;
  static Morphism parse(std::string_view text);

  friend bool operator==(const Morphism&, const Morphism&) = default;

 private:
  Word image0_;
  Word image1_;
};

/// Thue–Morse morphism 0 -> 01, 1 -> 10.
const Morphism& thue_morse();
/// Kolpakov–Kucherov–Tarannikov morphism preserving (7/3)^+-power-freeness.
const Morphism& kkt_morphism();
/// Complemented and swapped variant: g(0) = ~f(1), g(1) = ~f(0).
const Morphism& g_morphism();

/// Looks up "mu", "f" or "g"; throws std::invalid_argument otherwise.
const Morphism& named_morphism(std::string_view name);

inline Word apply(const Morphism& m, const Word& w) { return m.apply(w); }
inline Word iterate(const Morphism& m, Letter a, unsigned n) { return m.iterate(a, n); }

Word complement(const Word& w);

/// mu^n(a), of length 2^n.
Word morse_block(Letter a, unsigned n);
/// The letter a with w = mu^n(a) for 2^n = |w|, or absent.
std::optional<Letter> as_morse_block(const Word& w);

}  // namespace repwords
