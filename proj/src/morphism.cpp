#include "repwords/morphism.hpp"

#include <bit>
#include <sstream>
#include <stdexcept>

namespace repwords {

Morphism::Morphism(Word image0, Word image1) : image0_(std::move(image0)), image1_(std::move(image1)) {
  if (image0_.empty() || image1_.empty()) throw std::invalid_argument("morphism images must be non-empty");
}

Word Morphism::apply(const Word& w) const {
  Word out;
  out.reserve(w.count(0) * image0_.size() + w.count(1) * image1_.size());
  for (std::size_t i = 0; i < w.size(); ++i) out.append(image(w[i]));
  return out;
}

Word Morphism::iterate(Letter a, unsigned n) const {
  Word w{a};
  for (unsigned k = 0; k < n; ++k) w = apply(w);
  return w;
}

Morphism Morphism::power(unsigned n) const { return Morphism(iterate(0, n), iterate(1, n)); }

std::string Morphism::to_string() const {
  return "0 -> " + image0_.to_string() + "\n1 -> " + image1_.to_string() + "\n";
}

Morphism Morphism::parse(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::optional<Word> images[2];
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto arrow = line.find(" -> ");
    if (arrow != 1 || (line[0] != '0' && line[0] != '1')) {
      throw std::invalid_argument("malformed morphism line '" + line + "'");
    }
    auto& slot = images[line[0] - '0'];
    if (slot) throw std::invalid_argument("duplicate image for letter " + line.substr(0, 1));
    slot = Word::parse(std::string_view(line).substr(arrow + 4));
  }
  if (!images[0] || !images[1]) throw std::invalid_argument("morphism needs images for 0 and 1");
  return Morphism(*images[0], *images[1]);
}

const Morphism& thue_morse() {
  static const Morphism m(Word::parse("01"), Word::parse("10"));
  return m;
}

const Morphism& kkt_morphism() {
  static const Morphism m(Word::parse("011010011001001101001"), Word::parse("100101100100110010110"));
  return m;
}

const Morphism& g_morphism() {
  static const Morphism m(Word::parse("011010011011001101001"), Word::parse("100101100110110010110"));
  return m;
}

const Morphism& named_morphism(std::string_view name) {
  if (name == "mu") return thue_morse();
  if (name == "f") return kkt_morphism();
  if (name == "g") return g_morphism();
  throw std::invalid_argument("unknown morphism '" + std::string(name) + "' (expected mu, f or g)");
}

Word complement(const Word& w) {
  std::vector<Letter> out(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) out[i] = static_cast<Letter>(1 - w[i]);
  return Word(std::move(out));
}

// The i-th letter of mu^n(0) is the parity of popcount(i).
Word morse_block(Letter a, unsigned n) {
  const std::size_t len = std::size_t{1} << n;
  std::vector<Letter> out(len);
  for (std::size_t i = 0; i < len; ++i) out[i] = static_cast<Letter>((std::popcount(i) + a) & 1U);
  return Word(std::move(out));
}

std::optional<Letter> as_morse_block(const Word& w) {
  if (w.empty() || !std::has_single_bit(w.size())) return std::nullopt;
  const auto n = static_cast<unsigned>(std::countr_zero(w.size()));
  const Letter a = w[0];
  if (w == morse_block(a, n)) return a;
  return std::nullopt;
}

}  // namespace repwords
