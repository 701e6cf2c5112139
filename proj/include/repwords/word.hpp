#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace repwords {

/// A letter of the binary alphabet. Valid values are 0 and 1.
using Letter = std::uint8_t;

/// Finite word over {0,1}. Letters are stored one per byte so that kernels
/// can work on plain spans.
class Word {
 public:
  Word() = default;
  Word(std::initializer_list<int> letters);
  explicit Word(std::vector<Letter> letters);

  /// Parses an ASCII string of '0'/'1'. Any other character throws
  /// std::invalid_argument.
  static Word parse(std::string_view text);

  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  Letter operator[](std::size_t i) const noexcept { return letters_[i]; }
  std::span<const Letter> letters() const noexcept { return letters_; }

  void push_back(Letter c);
  void pop_back() { letters_.pop_back(); }
  void reserve(std::size_t n) { letters_.reserve(n); }
  void append(const Word& other);

  Word substr(std::size_t pos, std::size_t len) const;
  Word prefix(std::size_t len) const { return substr(0, len); }
  Word suffix_from(std::size_t pos) const { return substr(pos, size() - pos); }
  Word reversed() const;
  /// Cyclic left rotation by r letters (r taken modulo the length).
  Word rotated_left(std::size_t r) const;

  bool starts_with(const Word& p) const noexcept;
  bool ends_with(const Word& p) const noexcept;
  /// Index of the first occurrence of `factor`, or npos.
  std::size_t find(const Word& factor, std::size_t from = 0) const noexcept;
  bool contains(const Word& factor) const noexcept { return find(factor) != npos; }
  std::size_t count(Letter c) const noexcept;

  std::string to_string() const;

  friend Word operator+(Word a, const Word& b) {
    a.append(b);
    return a;
  }
  friend bool operator==(const Word&, const Word&) = default;
  friend std::strong_ordering operator<=>(const Word&, const Word&) = default;

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

 private:
  std::vector<Letter> letters_;
};

/// Orders words by length first, then lexicographically.
struct ShortLex {
  bool operator()(const Word& a, const Word& b) const noexcept {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

/// Letter-by-letter equality of w[a, a+len) and w[b, b+len). Bounds are the
/// caller's responsibility.
bool ranges_equal(std::span<const Letter> w, std::size_t a, std::size_t b, std::size_t len) noexcept;

}  // namespace repwords
