#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "repwords/word.hpp"

namespace repwords {

/// A square w[position, position + 2*half_length) inside some host word.
struct SquareOccurrence {
  std::size_t position = 0;
  std::size_t half_length = 1;

  bool holds_in(const Word& host) const noexcept;
  friend bool operator==(const SquareOccurrence&, const SquareOccurrence&) = default;
};

/// Ascending half-lengths h such that w[i, i+2h) is a square. Throws
/// std::out_of_range unless i < |w|.
std::vector<std::size_t> squares_starting_at(const Word& w, std::size_t i);

/// Smallest half-length <= max_half of a square starting at i, if any.
std::optional<std::size_t> min_square_at(const Word& w, std::size_t i, std::size_t max_half);

struct PositionSquares {
  std::optional<std::size_t> min_half_length;
  std::optional<std::size_t> max_half_length;
};

/// Per-position square extremes. Squares must fit inside the word, so
/// positions close to the end may report nothing; `horizon` (= |w|) is kept
/// so that callers can tell "no square" from "no room".
struct SquareProfile {
  std::size_t horizon = 0;
  std::vector<PositionSquares> positions;
};

SquareProfile square_profile(const Word& w);

/// All cyclic rotations of w, without duplicates, in lexicographic order.
std::vector<Word> conjugates(const Word& w);

/// Certifies w = rotate_left(mu^k(base), rotation) with base in
/// {00, 11, 010010, 101101}.
struct ScriptAWitness {
  unsigned k = 0;
  Word base;
  std::size_t rotation = 0;

  friend bool operator==(const ScriptAWitness&, const ScriptAWitness&) = default;
};

/// The base set {00, 11, 010010, 101101}.
const std::vector<Word>& script_a_bases();

/// Witness iff w is a conjugate of some mu^k(base). The length decides k
/// and the base pair before any rotation is tried.
std::optional<ScriptAWitness> classify_script_A(const Word& w);

/// Elements mu^k(base) of length <= max_len in (length, lexicographic)
/// order; with `with_conjugates`, every rotation of each of them instead.
std::vector<Word> enumerate_script_A(std::size_t max_len, bool with_conjugates = false);

/// A triple of rightmost squares vv, uu at `position` (|v| < |u|) and ww
/// at position+1 with |w| not in {|u|, |v|} and |w| < 2|v|.
struct IlieViolation {
  std::size_t position = 0;
  std::size_t v_half = 0;
  std::size_t u_half = 0;
  std::size_t w_half = 0;
};

/// Squares vv, uu (|v| < |u|) at position i and ww at i + 1, each counted
/// only at its rightmost occurrence in w. Reports each triple where |w| is
/// neither |u| nor |v| and |w| < 2|v|. Counting every occurrence instead,
/// the statement fails already on 000000 (v = 00, u = 000, w = 0).
std::vector<IlieViolation> check_ilie(const Word& w);

}  // namespace repwords
