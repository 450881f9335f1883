#pragma once

// Constructive skeletons of the four-way equivalence (the formula
// transformers linking provability, truth, fixed-point and proof predicates)
// and the mechanical refutations of all four statements over the decidable
// v* framework.

#include <cstdint>
#include <memory>
#include <vector>

#include "lwb/framework.hpp"
#include "lwb/report.hpp"
#include "lwb/syntax.hpp"

namespace lwb::theorems {

// From a binary proof-style predicate theta(x, y) to the unary formula
//   forall y. (theta(y, x) -> exists z < y. theta(z, v(x)))
// ("any proof of x is preceded by a proof of its negation"). theta may use
// only the free variables x and y.
syntax::FormulaPtr rosser_lambda(const syntax::FormulaPtr& theta);

// From a unary provability-style predicate psi(x) to the binary formula
// psi(y) & x = x, the substitution renaming capture-free.
syntax::FormulaPtr theta_from_psi(const syntax::FormulaPtr& psi);

// The sentence OR_i (lambda(|A_i|-bar) <-> A_i), right-nested in the given
// order; the empty disjunction is the canonical falsum.
syntax::FormulaPtr carnap_disjunction(const syntax::FormulaPtr& lambda,
                                      const std::vector<syntax::FormulaPtr>& sentences,
                                      const framework::StarCoding& coding);

// ---------------------------------------------------------------------------
// Small propositional fragment, enough to validate by truth table the
// exchange tautology ~AND_i(~p_i <-> q_i) <-> OR_i(p_i <-> q_i).

struct PropExpr;
using PropExprPtr = std::shared_ptr<const PropExpr>;

struct PropExpr {
  enum class Kind { Atom, Not, And, Or, Implies, Iff };
  Kind kind;
  int atom = 0;
  PropExprPtr a, b;
};

PropExprPtr patom(int id);
PropExprPtr pnot(PropExprPtr a);
PropExprPtr pand(PropExprPtr a, PropExprPtr b);
PropExprPtr por(PropExprPtr a, PropExprPtr b);
PropExprPtr pimplies(PropExprPtr a, PropExprPtr b);
PropExprPtr piff(PropExprPtr a, PropExprPtr b);

// Truth-table validity; at most 16 distinct atoms (AtomLimitError beyond).
bool tautology_valid(const PropExprPtr& f);

// ~AND_{i<k}(~p_i <-> q_i) <-> OR_{i<k}(p_i <-> q_i)
PropExprPtr exchange_tautology(std::size_t k);

// ---------------------------------------------------------------------------
// Refutations over the v* framework. Failures are recorded, never thrown;
// every instance passes when the implementation is correct, since the
// underlying claims hold for all sentences.

// For every sentence: sigma holds iff psi(|sigma|-bar) holds.
report::ClaimReport verify_not_godel(const std::vector<syntax::FormulaPtr>& corpus,
                                     const framework::StarCoding& coding);

// For every sentence: upsilon(|sigma|-bar) <-> sigma holds.
report::ClaimReport verify_not_tarski(const std::vector<syntax::FormulaPtr>& corpus,
                                      const framework::StarCoding& coding);

// For every finite family {A_i}: OR_i(lambda(|A_i|-bar) <-> A_i) fails.
report::ClaimReport verify_not_carnap(
    const std::vector<std::vector<syntax::FormulaPtr>>& families,
    const framework::StarCoding& coding);

// For every sentence and witness: theta(m-bar, |sigma|-bar) holds when sigma
// does, ~theta(n-bar, |sigma|-bar) holds when sigma fails.
report::ClaimReport verify_not_rosser(const std::vector<syntax::FormulaPtr>& corpus,
                                      const std::vector<BigInt>& witnesses,
                                      const framework::StarCoding& coding);

}  // namespace lwb::theorems
