#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "repwords/search.hpp"

namespace repwords {

/// Constants the claim registry checks. Changing any of them changes what
/// the suite verifies, so they live in one place.
namespace pinned {
inline constexpr std::string_view kUnavoidableFactor = "010011";
inline constexpr std::size_t kOverlapFreeBound = 36;
inline constexpr std::size_t kSevenThirdsBound = 39;
inline constexpr std::string_view kGWordSeed = "0110110";
inline constexpr unsigned kGWordIterations = 3;
inline constexpr std::string_view kSharpnessSquare = "01101001101100101100110100110110010110";
inline constexpr unsigned kProgressionMaxN = 3;
inline constexpr std::size_t kOddSqMaxHalf = 15;
inline constexpr std::size_t kSquareFactMaxLen = 48;
inline constexpr std::size_t kSquaresMaxLen = 48;
inline constexpr std::size_t kSquaresConverseMaxLen = 96;
inline constexpr std::size_t kIlieMaxLen = 16;
inline constexpr std::size_t kKsFactorMaxLen = 20;
}  // namespace pinned

struct ClaimSpec {
  std::string id;
  std::string statement;
  std::function<ClaimResult()> run;
  /// Independent re-check of a refuting result's witness.
  std::function<bool(const ClaimResult&)> witness_valid;
};

ClaimSpec unavoidable_factor_claim(std::string id, Rational alpha, bool strict, std::size_t bound, Word factor);

/// Fixed, ordered registry of every claim with its pinned parameters.
std::vector<ClaimSpec> claim_registry();

/// Claim ids in registry order.
std::vector<std::string> claim_ids();

/// Runs the given claims in order; each result carries its registry id.
std::vector<ClaimResult> run_claims(const std::vector<ClaimSpec>& claims);
std::vector<ClaimResult> run_claim_suite();

/// The pinned 38-letter word.
ClaimResult verify_counterexample();

}  // namespace repwords
