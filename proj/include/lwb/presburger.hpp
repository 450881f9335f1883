#pragma once

// Complete decision procedure for the first-order theory of <N; 0, 1, <, +>
// extended with the coding function v* (Cooper quantifier elimination,
// relativized to the naturals). Together with the v-elimination rewrite this
// decides truth in the structure whose v is interpreted as
// v*(n) = 33 + 16n (n even) / 16 + 16n (n odd), which is {1,+}-definable.

#include <cstdint>
#include <map>
#include <memory>
#include <string>

#include "lwb/bignum.hpp"
#include "lwb/errors.hpp"
#include "lwb/syntax.hpp"

namespace lwb {

// v*: the interpretation of the unary function symbol v.
BigInt nu_star(const BigInt& n);

}  // namespace lwb

namespace lwb::presburger {

enum class Verdict { False, True };

inline bool truth(Verdict v) { return v == Verdict::True; }
inline Verdict verdict(bool b) { return b ? Verdict::True : Verdict::False; }
std::string to_string(Verdict v);

// Standard-model value of a term under an environment; v evaluates via v*.
BigInt eval_term(const syntax::TermPtr& t, const std::map<syntax::VarId, BigInt>& env);
BigInt eval_closed_term(const syntax::TermPtr& t);

// Rewrites every occurrence of v into pure {0,1,<,+,=} form, innermost
// first: an atom context A[v(t)] becomes
//   exists w. ((even(t) & w = 16t+33) | (odd(t) & w = 16t+16)) & A[w]
// with even(t) = exists u. t = u+u, odd(t) = exists u. t = u+u+1, and 16t
// spelled out as t added sixteen times. v-free formulas come back
// structurally unchanged.
syntax::FormulaPtr eliminate_nu(const syntax::FormulaPtr& f);

// Truth of a closed L* sentence in the standard structure. v is allowed;
// * raises NonPresburgerError, free variables raise NotASentenceError.
Verdict decide(const syntax::FormulaPtr& s);

// ---------------------------------------------------------------------------
// Quantifier-free linear layer. Divisibility atoms arise only here, never in
// user syntax.

struct LinTerm {
  BigInt k;                              // constant
  std::map<syntax::VarId, BigInt> c;     // nonzero coefficients

  static LinTerm constant(const BigInt& k);
  static LinTerm variable(syntax::VarId v);

  LinTerm plus(const LinTerm& o) const;
  LinTerm minus(const LinTerm& o) const;
  LinTerm negated() const;
  LinTerm times(const BigInt& s) const;
  LinTerm without(syntax::VarId v) const;
  BigInt coeff(syntax::VarId v) const;
  bool ground() const { return c.empty(); }
};

struct Prop;
using PropPtr = std::shared_ptr<const Prop>;

// Quantifier-free formula over linear atoms. Lt is 0 < L, Eq is L = 0,
// Div is d | L (d >= 2), NotDiv its negation. Negation is not a node: the
// layer is kept in negation normal form.
struct Prop {
  enum class Kind { True, False, Lt, Eq, Div, NotDiv, And, Or };
  Kind kind;
  LinTerm lin;
  BigInt d;
  PropPtr a, b;
};

PropPtr prop_true();
PropPtr prop_false();
PropPtr prop_lt(LinTerm l);
PropPtr prop_eq(LinTerm l);
PropPtr prop_div(BigInt d, LinTerm l);
PropPtr prop_notdiv(BigInt d, LinTerm l);
PropPtr prop_and(PropPtr a, PropPtr b);
PropPtr prop_or(PropPtr a, PropPtr b);

// One Cooper elimination step: f must be exists x. phi with phi quantifier
// free (and v-free, *-free). The result is quantifier-free, equivalent to f
// over the naturals, and may contain divisibility atoms.
PropPtr qe_step(const syntax::FormulaPtr& f);

bool eval_ground(const PropPtr& p);
std::string print_prop(const PropPtr& p);

// Re-expresses a quantifier-free linear formula as an object-language
// formula (divisibility becomes a bounded multiple witness), so QE results
// can be spliced back into sentences for cross-checking.
syntax::FormulaPtr prop_to_formula(const PropPtr& p);

// ---------------------------------------------------------------------------
// Independent oracle: exhaustive evaluation with every quantifier ranging
// over [0, bound]. The verdict is exact when every quantifier in s is
// syntactically bounded (the exists x < t / forall x < t shapes) by a closed
// term of value at most bound; otherwise it is only an approximation.

struct BruteResult {
  bool truth;
  bool exact;
};

BruteResult brute_force_eval(const syntax::FormulaPtr& s, std::uint32_t bound);

}  // namespace lwb::presburger
