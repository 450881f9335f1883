#include "lwb/diagonal.hpp"

#include <vector>

#include "lwb/presburger.hpp"

namespace lwb::diagonal {

using namespace lwb::syntax;

// ---------------------------------------------------------------------------
// Pairing-based tree coding.

namespace {

BigInt pair(const BigInt& a, const BigInt& b) {
  BigInt s = a + b;
  return s * (s + 1) / 2 + b;
}

void unpair(const BigInt& z, BigInt& a, BigInt& b) {
  BigInt w = (boost::multiprecision::sqrt(8 * z + 1) - 1) / 2;
  b = z - w * (w + 1) / 2;
  a = w - b;
}

// Tags are disjoint across terms and formulas so a code pins down what it
// codes. 0 is pair(0, 0) and is never produced.
enum Tag : unsigned {
  kZero = 1, kOne, kVar, kAdd, kMul, kNu, kNumeral,
  kLess = 10, kEq, kSigma, kNot, kAnd, kOr, kImplies, kIff, kForall, kExists,
  kMaxTag
};

}  // namespace

BigInt encode_expr(const TermPtr& t) {
  switch (t->kind) {
    case Term::Kind::Zero: return pair(kZero, 0);
    case Term::Kind::One: return pair(kOne, 0);
    case Term::Kind::Var: return pair(kVar, t->var);
    case Term::Kind::Numeral: return pair(kNumeral, t->value);
    case Term::Kind::Nu: return pair(kNu, encode_expr(t->lhs));
    case Term::Kind::Add: return pair(kAdd, pair(encode_expr(t->lhs), encode_expr(t->rhs)));
    case Term::Kind::Mul: return pair(kMul, pair(encode_expr(t->lhs), encode_expr(t->rhs)));
  }
  throw Error("internal: unhandled term kind");
}

BigInt encode_expr(const FormulaPtr& f) {
  switch (f->kind) {
    case Formula::Kind::Less: return pair(kLess, pair(encode_expr(f->t1), encode_expr(f->t2)));
    case Formula::Kind::Eq: return pair(kEq, pair(encode_expr(f->t1), encode_expr(f->t2)));
    case Formula::Kind::Sigma: return pair(kSigma, pair(encode_expr(f->t1), encode_expr(f->t2)));
    case Formula::Kind::Not: return pair(kNot, encode_expr(f->f1));
    case Formula::Kind::And: return pair(kAnd, pair(encode_expr(f->f1), encode_expr(f->f2)));
    case Formula::Kind::Or: return pair(kOr, pair(encode_expr(f->f1), encode_expr(f->f2)));
    case Formula::Kind::Implies:
      return pair(kImplies, pair(encode_expr(f->f1), encode_expr(f->f2)));
    case Formula::Kind::Iff: return pair(kIff, pair(encode_expr(f->f1), encode_expr(f->f2)));
    case Formula::Kind::Forall: return pair(kForall, pair(f->var, encode_expr(f->f1)));
    case Formula::Kind::Exists: return pair(kExists, pair(f->var, encode_expr(f->f1)));
  }
  throw Error("internal: unhandled formula kind");
}

namespace {

std::optional<VarId> as_var_id(const BigInt& n) {
  if (n < 0 || n > 0xffffffff) return std::nullopt;
  return static_cast<VarId>(n.convert_to<std::uint64_t>());
}

std::optional<TermPtr> decode_term(const BigInt& code);
std::optional<FormulaPtr> decode_formula(const BigInt& code);

std::optional<TermPtr> decode_term(const BigInt& code) {
  if (code <= 0) return std::nullopt;
  BigInt tag, payload;
  unpair(code, tag, payload);
  switch (tag.convert_to<unsigned long long>()) {
    case kZero: return payload == 0 ? std::optional<TermPtr>(zero()) : std::nullopt;
    case kOne: return payload == 0 ? std::optional<TermPtr>(one()) : std::nullopt;
    case kVar: {
      auto v = as_var_id(payload);
      if (!v) return std::nullopt;
      return var(*v);
    }
    case kNumeral:
      if (payload < 2) return std::nullopt;  // small numerals are Zero/One
      return numeral(payload);
    case kNu: {
      auto arg = decode_term(payload);
      if (!arg) return std::nullopt;
      return nu(*arg);
    }
    case kAdd:
    case kMul: {
      BigInt ca, cb;
      unpair(payload, ca, cb);
      auto a = decode_term(ca), b = decode_term(cb);
      if (!a || !b) return std::nullopt;
      TermPtr built = tag == kAdd ? add(*a, *b) : mul(*a, *b);
      // add() folds numeral sums, so a code of an unfolded sum is not in
      // the constructible range.
      if (encode_expr(built) != BigInt(pair(tag, payload))) return std::nullopt;
      return built;
    }
    default:
      return std::nullopt;
  }
}

std::optional<FormulaPtr> decode_formula(const BigInt& code) {
  if (code <= 0) return std::nullopt;
  BigInt tag_big, payload;
  unpair(code, tag_big, payload);
  if (tag_big < kLess || tag_big >= kMaxTag) return std::nullopt;
  unsigned tag = tag_big.convert_to<unsigned>();
  switch (tag) {
    case kLess:
    case kEq:
    case kSigma: {
      BigInt ca, cb;
      unpair(payload, ca, cb);
      auto a = decode_term(ca), b = decode_term(cb);
      if (!a || !b) return std::nullopt;
      if (tag == kLess) return less(*a, *b);
      if (tag == kEq) return eq(*a, *b);
      return sigma_atom(*a, *b);
    }
    case kNot: {
      auto a = decode_formula(payload);
      if (!a) return std::nullopt;
      return not_(*a);
    }
    case kAnd:
    case kOr:
    case kImplies:
    case kIff: {
      BigInt ca, cb;
      unpair(payload, ca, cb);
      auto a = decode_formula(ca), b = decode_formula(cb);
      if (!a || !b) return std::nullopt;
      switch (tag) {
        case kAnd: return and_(*a, *b);
        case kOr: return or_(*a, *b);
        case kImplies: return implies(*a, *b);
        default: return iff(*a, *b);
      }
    }
    case kForall:
    case kExists: {
      BigInt cv, cb;
      unpair(payload, cv, cb);
      auto v = as_var_id(cv);
      auto body = decode_formula(cb);
      if (!v || !body) return std::nullopt;
      return tag == kForall ? forall(*v, *body) : exists(*v, *body);
    }
    default:
      return std::nullopt;
  }
}

}  // namespace

std::optional<DecodedExpr> decode_expr(const BigInt& code) {
  if (code <= 0) return std::nullopt;
  BigInt tag, payload;
  unpair(code, tag, payload);
  if (tag >= kLess && tag < kMaxTag) {
    auto f = decode_formula(code);
    if (!f) return std::nullopt;
    return DecodedExpr{nullptr, *f};
  }
  auto t = decode_term(code);
  if (!t) return std::nullopt;
  return DecodedExpr{*t, nullptr};
}

BigInt diag(const BigInt& a) {
  auto decoded = decode_expr(a);
  if (!decoded || !decoded->formula) return 0;
  std::set<VarId> fv = free_vars(decoded->formula);
  if (fv.size() != 1) return 0;
  return encode_expr(substitute(decoded->formula, *fv.begin(), numeral(a)));
}

// ---------------------------------------------------------------------------
// Construction.

DiagonalResult construct(const FormulaPtr& lambda) {
  if (free_vars(lambda) != std::set<VarId>{0})
    throw ArityError("lambda must have exactly the free variable x");
  if (contains_sigma(lambda))
    throw ArityError("lambda must not mention the diagonal oracle");

  FormulaPtr zeta = iff(implies(sigma_atom(var(1), var(0)), lambda), eq(var(0), var(1)));
  FormulaPtr tau = forall(0, iff(zeta, eq(var(0), var(1))));
  BigInt n = encode_expr(tau);
  FormulaPtr kappa = substitute(zeta, 1, numeral(n));
  BigInt m = encode_expr(kappa);
  FormulaPtr delta = substitute(tau, 1, numeral(n));

  // delta must be, symbol for symbol, forall x. (kappa(x) <-> x = n-bar).
  FormulaPtr spelled = forall(0, iff(kappa, eq(var(0), numeral(n))));
  if (!equal(delta, spelled) || print(delta) != print(spelled))
    throw Error("internal: diagonal fixed point is not syntactically tau(n-bar)");

  return {std::move(m), std::move(n), lambda, zeta, tau, kappa, delta};
}

// ---------------------------------------------------------------------------
// Verification.

namespace {

// Truth of a closed sigma-free formula: quantifier-free parts evaluate
// directly; otherwise the decision procedure handles the *-free case and
// exhaustive evaluation the bounded-quantifier case.
bool closed_truth(const FormulaPtr& f) {
  if (!contains_quantifier(f) && !contains_mul(f)) {
    return presburger::truth(presburger::decide(f));
  }
  if (!contains_mul(f)) return presburger::truth(presburger::decide(f));
  presburger::BruteResult r = presburger::brute_force_eval(f, 64);
  if (!r.exact)
    throw EvaluatorMissingError(
        "lambda is outside the built-in decidable fragments; supply an evaluator");
  return r.truth;
}

// Standard-model truth of a closed formula that may contain sigma atoms at
// the quantifier-free level. Quantified subformulas must be sigma-free.
bool oracle_truth(const FormulaPtr& f) {
  switch (f->kind) {
    case Formula::Kind::Sigma: {
      BigInt a = presburger::eval_closed_term(f->t1);
      BigInt x = presburger::eval_closed_term(f->t2);
      return x == diag(a);
    }
    case Formula::Kind::Not: return !oracle_truth(f->f1);
    case Formula::Kind::And: return oracle_truth(f->f1) && oracle_truth(f->f2);
    case Formula::Kind::Or: return oracle_truth(f->f1) || oracle_truth(f->f2);
    case Formula::Kind::Implies: return !oracle_truth(f->f1) || oracle_truth(f->f2);
    case Formula::Kind::Iff: return oracle_truth(f->f1) == oracle_truth(f->f2);
    case Formula::Kind::Less:
      return presburger::eval_closed_term(f->t1) < presburger::eval_closed_term(f->t2);
    case Formula::Kind::Eq:
      return presburger::eval_closed_term(f->t1) == presburger::eval_closed_term(f->t2);
    case Formula::Kind::Forall:
    case Formula::Kind::Exists:
      if (contains_sigma(f))
        throw Error("internal: sigma under a quantifier has no evaluation");
      return closed_truth(f);
  }
  throw Error("internal: unhandled formula kind");
}

}  // namespace

bool verify(const DiagonalResult& result, std::optional<LambdaEval> eval) {
  auto lambda_at = [&](const BigInt& k) {
    if (eval) return (*eval)(k);
    return closed_truth(substitute(result.lambda, 0, numeral(k)));
  };

  const BigInt d = diag(result.n);
  if (d != encode_expr(result.delta)) return false;  // delta is the diagonal of tau
  if (d == result.n) return false;                   // codes of tau and tau(n-bar) differ

  // delta = forall x. (kappa(x) <-> x = n-bar). Away from x = d the oracle
  // atom is false and kappa(x) collapses to x = n-bar, so the clause holds;
  // spot-check that at a handful of points, then decide everything at x = d.
  auto clause_at = [&](const BigInt& x) {
    FormulaPtr inst = iff(substitute(result.kappa, 0, numeral(x)),
                          eq(numeral(x), numeral(result.n)));
    return oracle_truth(inst);
  };
  bool delta_truth = clause_at(d);
  for (const BigInt& x : std::vector<BigInt>{0, 1, 2, 3, 4, 5, result.n, d + 1}) {
    if (x == d) continue;
    if (!clause_at(x)) return false;
  }

  bool rhs = lambda_at(d);  // lambda at the code of delta
  return delta_truth == rhs;
}

}  // namespace lwb::diagonal
