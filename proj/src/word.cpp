#include "repwords/word.hpp"

#include <algorithm>
#include <stdexcept>

namespace repwords {

namespace {

Letter checked_letter(long v) {
  if (v != 0 && v != 1) throw std::invalid_argument("letter must be 0 or 1");
  return static_cast<Letter>(v);
}

}  // namespace

Word::Word(std::initializer_list<int> letters) {
  letters_.reserve(letters.size());
  for (int v : letters) letters_.push_back(checked_letter(v));
}

Word::Word(std::vector<Letter> letters) : letters_(std::move(letters)) {
  for (Letter c : letters_) checked_letter(c);
}

Word Word::parse(std::string_view text) {
  Word w;
  w.letters_.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char ch = text[i];
    if (ch != '0' && ch != '1') {
      throw std::invalid_argument("invalid letter at offset " + std::to_string(i) +
                                  " (expected '0' or '1')");
    }
    w.letters_.push_back(static_cast<Letter>(ch - '0'));
  }
  return w;
}

void Word::push_back(Letter c) { letters_.push_back(checked_letter(c)); }

void Word::append(const Word& other) {
  letters_.insert(letters_.end(), other.letters_.begin(), other.letters_.end());
}

Word Word::substr(std::size_t pos, std::size_t len) const {
  if (pos > size() || len > size() - pos) throw std::out_of_range("Word::substr out of range");
  Word w;
  w.letters_.assign(letters_.begin() + static_cast<std::ptrdiff_t>(pos),
                    letters_.begin() + static_cast<std::ptrdiff_t>(pos + len));
  return w;
}

Word Word::reversed() const {
  Word w = *this;
  std::reverse(w.letters_.begin(), w.letters_.end());
  return w;
}

Word Word::rotated_left(std::size_t r) const {
  if (empty()) return {};
  Word w = *this;
  std::rotate(w.letters_.begin(), w.letters_.begin() + static_cast<std::ptrdiff_t>(r % size()),
              w.letters_.end());
  return w;
}

bool Word::starts_with(const Word& p) const noexcept {
  return p.size() <= size() && std::equal(p.letters_.begin(), p.letters_.end(), letters_.begin());
}

bool Word::ends_with(const Word& p) const noexcept {
  return p.size() <= size() &&
         std::equal(p.letters_.begin(), p.letters_.end(),
                    letters_.end() - static_cast<std::ptrdiff_t>(p.size()));
}

std::size_t Word::find(const Word& factor, std::size_t from) const noexcept {
  if (from > size()) return npos;
  auto it = std::search(letters_.begin() + static_cast<std::ptrdiff_t>(from), letters_.end(),
                        factor.letters_.begin(), factor.letters_.end());
  if (it == letters_.end() && !factor.empty()) return npos;
  return static_cast<std::size_t>(it - letters_.begin());
}

std::size_t Word::count(Letter c) const noexcept {
  return static_cast<std::size_t>(std::count(letters_.begin(), letters_.end(), c));
}

std::string Word::to_string() const {
  std::string s(size(), '0');
  for (std::size_t i = 0; i < size(); ++i) s[i] = static_cast<char>('0' + letters_[i]);
  return s;
}

bool ranges_equal(std::span<const Letter> w, std::size_t a, std::size_t b, std::size_t len) noexcept {
  return std::equal(w.begin() + static_cast<std::ptrdiff_t>(a),
                    w.begin() + static_cast<std::ptrdiff_t>(a + len),
                    w.begin() + static_cast<std::ptrdiff_t>(b));
}

}  // namespace repwords
