#pragma once

// Effective strong diagonal construction: from a unary formula lambda(x),
// compute numbers m, n and the fixed-point sentence delta = tau(n-bar) with
//   zeta(x, y) = (sigma(y, x) -> lambda(x)) <-> x = y
//   tau(y)     = forall x. (zeta(x, y) <-> x = y),   n = code(tau)
//   kappa(x)   = zeta(x, n-bar),                     m = code(kappa)
// so that delta is syntactically forall x. (kappa(x) <-> x = n-bar) and,
// under the oracle reading of sigma (sigma(a, x) holds iff x = diag(a)),
// delta is true exactly when lambda(code(delta)-bar) is.
//
// The coding here is a pairing-based tree coding with numerals coded by
// their value, not the Ackermann coding: kappa contains the numeral n-bar
// where n is itself a code, and under the Ackermann coding that second level
// would be a power tower. Any computable injection serves.

#include <functional>
#include <optional>

#include "lwb/bignum.hpp"
#include "lwb/syntax.hpp"

namespace lwb::diagonal {

// Tree coding of expressions: injective, computable both ways, code bit-size
// polynomial in the expression size with numerals contributing their bit
// length.
BigInt encode_expr(const syntax::TermPtr& t);
BigInt encode_expr(const syntax::FormulaPtr& f);

struct DecodedExpr {
  syntax::TermPtr term;       // exactly one of the two is set
  syntax::FormulaPtr formula;
};

std::optional<DecodedExpr> decode_expr(const BigInt& code);

// The diagonal function: when a codes a formula with exactly one free
// variable x, returns code of that formula with a-bar substituted for x;
// 0 on everything else.
BigInt diag(const BigInt& a);

struct DiagonalResult {
  BigInt m, n;
  syntax::FormulaPtr lambda;
  syntax::FormulaPtr zeta;   // free variables {x, y}
  syntax::FormulaPtr tau;    // free variable {y}
  syntax::FormulaPtr kappa;  // free variable {x}
  syntax::FormulaPtr delta;  // sentence, identical to tau(n-bar)
};

// Effective and deterministic; lambda must have exactly the free variable x
// and be sigma-free.
DiagonalResult construct(const syntax::FormulaPtr& lambda);

using LambdaEval = std::function<bool(const BigInt&)>;

// Checks truth(delta) == truth(lambda(code(delta)-bar)) in the standard
// model under the oracle semantics of sigma. delta = forall x. (...) is
// evaluated by case split on x = diag(n) plus spot checks elsewhere; the
// right-hand side goes through the evaluator. The built-in evaluator covers
// *-free lambda via the decision procedure and bounded-quantifier lambda by
// direct evaluation; anything else needs eval (EvaluatorMissingError
// otherwise). Returns true whenever the construction is correct.
bool verify(const DiagonalResult& result, std::optional<LambdaEval> eval = std::nullopt);

}  // namespace lwb::diagonal
