#pragma once

// Deterministic seeded generators for test corpora: closed L* sentences
// (quantifier depth <= 2, term depth <= 3, numerals <= 8, so Ackermann codes
// stay small and the decision procedure stays fast), open formulas, raw
// symbol strings, and unary/binary formula shapes for the transformer and
// diagonal checks. mt19937_64 with explicit modulo reduction keeps output
// identical across platforms.

#include <cstdint>
#include <random>
#include <vector>

#include "lwb/syntax.hpp"

namespace lwb::corpus {

class Generator {
 public:
  explicit Generator(std::uint64_t seed) : rng_(seed) {}

  // Closed L* sentence; may contain v when allow_nu.
  syntax::FormulaPtr sentence(bool allow_nu = true);

  // Formula with at least one free variable.
  syntax::FormulaPtr nonsentence(bool allow_nu = true);

  // Closed sentence whose quantifiers are all of the bounded shapes with
  // closed numeral bounds <= 8, so exhaustive evaluation at bound >= 8 is
  // exact.
  syntax::FormulaPtr bounded_sentence(bool allow_nu = true);

  // v-free, *-free formula with free variables exactly {x}.
  syntax::FormulaPtr unary_formula();

  // v-free, *-free formula with free variables among {x, y}.
  syntax::FormulaPtr binary_formula();

  // Arbitrary (typically ill-formed) nonempty symbol string.
  syntax::SymbolString symbol_string(std::size_t min_len, std::size_t max_len);

  std::uint64_t pick(std::uint64_t n);  // uniform-ish in [0, n)

 private:
  syntax::TermPtr term(int depth, const std::vector<syntax::VarId>& scope, bool allow_nu);
  syntax::FormulaPtr formula(int depth, int qbudget, std::vector<syntax::VarId> scope,
                             bool allow_nu);

  std::mt19937_64 rng_;
};

// Seeded sentence corpus: hand-picked edge cases (tautologies,
// contradictions, v-containing sentences) followed by generated sentences,
// deduplicated, of the requested size.
std::vector<syntax::FormulaPtr> sentence_corpus(std::uint64_t seed, std::size_t size);

std::vector<syntax::FormulaPtr> nonsentence_corpus(std::uint64_t seed, std::size_t size);

}  // namespace lwb::corpus
