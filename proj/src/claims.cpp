#include "repwords/claims.hpp"

#include "repwords/constructions.hpp"
#include "repwords/morphism.hpp"
#include "repwords/squares.hpp"

namespace repwords {

namespace {

const Rational kSevenThirds(7, 3);

const Word* witness_word(const ClaimResult& r) {
  if (!r.witness) return nullptr;
  return std::get_if<Word>(&*r.witness);
}

bool is_square(const Word& w) {
  return w.size() % 2 == 0 && w.prefix(w.size() / 2) == w.suffix_from(w.size() / 2);
}

bool pf73(const Word& w) { return is_power_free(w, kSevenThirds, false); }

ClaimSpec progression_claim(unsigned n) {
  const std::size_t block = std::size_t{1} << n;
  return {"progression-" + std::to_string(n),
          "7/3-power-free uvxy with Morse blocks u, v of length " + std::to_string(block) +
              " has x a Morse block",
          [n] { return verify_progression(n); },
          [block](const ClaimResult& r) {
            const Word* w = witness_word(r);
            return w && w->size() == 4 * block && pf73(*w) && as_morse_block(w->substr(0, block)) &&
                   as_morse_block(w->substr(block, block)) && !as_morse_block(w->substr(2 * block, block));
          }};
}

}  // namespace

ClaimSpec unavoidable_factor_claim(std::string id, Rational alpha, bool strict, std::size_t bound, Word factor) {
  std::string statement = "every " + alpha.to_string() + (strict ? "+" : "") + "-power-free binary word longer than " +
                          std::to_string(bound) + " contains " + factor.to_string();
  return {std::move(id), std::move(statement),
          [=] { return verify_unavoidable_factor(alpha, strict, bound, factor); },
          [=](const ClaimResult& r) {
            const Word* w = witness_word(r);
            return w && w->size() == bound + 1 && !w->contains(factor) && is_power_free(*w, alpha, strict);
          }};
}

ClaimResult verify_counterexample() { return verify_counterexample(Word::parse(pinned::kSharpnessSquare)); }

std::vector<ClaimSpec> claim_registry() {
  const Word factor = Word::parse(pinned::kUnavoidableFactor);
  std::vector<ClaimSpec> reg;
  reg.push_back(unavoidable_factor_claim("unavoidable-36", Rational(2), true, pinned::kOverlapFreeBound, factor));
  reg.push_back(unavoidable_factor_claim("unavoidable-39", kSevenThirds, false, pinned::kSevenThirdsBound, factor));
  for (unsigned n = 0; n <= pinned::kProgressionMaxN; ++n) reg.push_back(progression_claim(n));

  reg.push_back({"oddsq-15", "no 7/3-power-free square mu(y) has |y| odd (|y| <= 15)",
                 [] { return verify_oddsq(pinned::kOddSqMaxHalf); },
                 [](const ClaimResult& r) {
                   const Word* w = witness_word(r);
                   return w && is_square(*w) && (w->size() / 2) % 2 == 1 && thue_morse_preimage(*w) && pf73(*w);
                 }});

  reg.push_back({"squarefact-48", "7/3-power-free squares of length 10..48 are mu(y) or ~a mu(y) a",
                 [] { return verify_squarefact(pinned::kSquareFactMaxLen); },
                 [](const ClaimResult& r) {
                   const Word* w = witness_word(r);
                   return w && w->size() > 8 && is_square(*w) && pf73(*w) &&
                          square_fact_case(*w) == SquareFactCase::neither;
                 }});

  reg.push_back({"squares73-48",
                 "7/3-power-free squares up to length 48 are the conjugates of Thue-Morse squares; conjugates up "
                 "to length 96 are 7/3-power-free squares",
                 [] { return verify_squares_theorem(pinned::kSquaresMaxLen, pinned::kSquaresConverseMaxLen); },
                 [](const ClaimResult& r) {
                   const Word* w = witness_word(r);
                   if (!w) return false;
                   const bool classified = classify_script_A(*w).has_value();
                   const bool pf_square = is_square(*w) && pf73(*w);
                   return classified != pf_square;
                 }});

  reg.push_back({"counterexample-38",
                 "the 38-letter square is (7/3)+-power-free, contains a 7/3-power and is not a conjugate of a "
                 "Thue-Morse square",
                 [] { return verify_counterexample(); },
                 [](const ClaimResult& r) {
                   const Word* w = witness_word(r);
                   return w && !(is_square(*w) && is_power_free(*w, kSevenThirds, true) && !pf73(*w) &&
                                 !classify_script_A(*w));
                 }});

  reg.push_back({"gword-3",
                 "A_0 = 0110110, each A_n is a prefix of A_{n+1}, and A_3 is (7/3)+-power-free",
                 [] {
                   ClaimResult r;
                   r.claim_id = "gword-3";
                   Word prev = g_word_prefix(0);
                   r.holds = prev == Word::parse(pinned::kGWordSeed);
                   for (unsigned n = 1; n <= pinned::kGWordIterations && r.holds; ++n) {
                     Word next = g_word_prefix(n);
                     if (!next.starts_with(prev)) {
                       r.holds = false;
                       r.witness = next;
                     }
                     prev = std::move(next);
                   }
                   if (r.holds) {
                     const PowerThreshold t(kSevenThirds, true);
                     if (const auto end = first_violation_end(prev.letters(), t)) {
                       r.holds = false;
                       r.witness = prev.prefix(*end);
                     }
                   }
                   if (!r.holds && !r.witness) r.witness = prev;
                   r.stats["prefix_length"] = prev.size();
                   r.detail = "g-word construction prefixes nest and avoid (7/3)+-powers";
                   return r;
                 },
                 [](const ClaimResult& r) {
                   const Word* w = witness_word(r);
                   if (!w) return false;
                   if (!w->starts_with(Word::parse(pinned::kGWordSeed))) return true;
                   if (!is_power_free(*w, kSevenThirds, true)) return true;
                   // Nesting failure: w = A_n for some n but does not extend A_{n-1}.
                   const Recurrence rec = g_recurrence();
                   for (unsigned n = 1; n <= pinned::kGWordIterations; ++n) {
                     if (rec.length(n) == w->size()) return !w->starts_with(rec.prefix(n - 1));
                   }
                   return false;
                 }});

  reg.push_back({"ilie-16",
                 "Ilie's square-position property, squares taken at their rightmost occurrence, on all "
                 "binary words of length <= 16",
                 [] { return verify_ilie(pinned::kIlieMaxLen); },
                 [](const ClaimResult& r) {
                   const Word* w = witness_word(r);
                   return w && !check_ilie(*w).empty();
                 }});

  reg.push_back({"ksfactor-20", "every 7/3-power-free word of length <= 20 factors as u mu(y) v",
                 [] { return verify_ks_factorization(pinned::kKsFactorMaxLen); },
                 [](const ClaimResult& r) {
                   const Word* w = witness_word(r);
                   if (!w || !pf73(*w)) return false;
                   try {
                     const auto f = ks_factorize(*w, kSevenThirds);
                     return f.u + thue_morse().apply(f.y) + f.v != *w;
                   } catch (const std::runtime_error&) {
                     return true;
                   }
                 }});
  return reg;
}

std::vector<std::string> claim_ids() {
  std::vector<std::string> ids;
  for (const auto& c : claim_registry()) ids.push_back(c.id);
  return ids;
}

std::vector<ClaimResult> run_claims(const std::vector<ClaimSpec>& claims) {
  std::vector<ClaimResult> out;
  out.reserve(claims.size());
  for (const auto& c : claims) {
    ClaimResult r = c.run();
    r.claim_id = c.id;
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<ClaimResult> run_claim_suite() { return run_claims(claim_registry()); }

}  // namespace repwords
