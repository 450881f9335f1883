#include "lwb/theorems.hpp"

#include <set>

namespace lwb::theorems {

using namespace lwb::syntax;
using presburger::decide;
using presburger::to_string;
using presburger::truth;
using presburger::Verdict;

FormulaPtr rosser_lambda(const FormulaPtr& theta) {
  std::set<VarId> fv = free_vars(theta);
  for (VarId v : fv)
    if (v > 1) throw ArityError("theta may only use the free variables x and y");
  // theta(y, x): swap the two argument slots; theta(z, v(x)): first slot z,
  // second the code of the negation.
  FormulaPtr theta_yx = substitute_parallel(theta, {{0, var(1)}, {1, var(0)}});
  FormulaPtr theta_z_nux = substitute_parallel(theta, {{0, var(2)}, {1, nu(var(0))}});
  return forall(1, implies(theta_yx,
                           exists(2, and_(less(var(2), var(1)), theta_z_nux))));
}

FormulaPtr theta_from_psi(const FormulaPtr& psi) {
  std::set<VarId> fv = free_vars(psi);
  if (fv != std::set<VarId>{0})
    throw ArityError("psi must have exactly the free variable x");
  FormulaPtr psi_y = substitute_parallel(psi, {{0, var(1)}});
  return and_(psi_y, eq(var(0), var(0)));
}

FormulaPtr carnap_disjunction(const FormulaPtr& lambda,
                              const std::vector<FormulaPtr>& sentences,
                              const framework::StarCoding& coding) {
  std::set<VarId> fv = free_vars(lambda);
  if (fv != std::set<VarId>{0})
    throw ArityError("lambda must have exactly the free variable x");
  if (sentences.empty()) return not_(eq(zero(), zero()));
  std::vector<FormulaPtr> disjuncts;
  for (const FormulaPtr& a : sentences) {
    if (!is_sentence(a)) throw NotASentenceError("family members must be sentences");
    disjuncts.push_back(iff(substitute(lambda, 0, coding.star_numeral(a)), a));
  }
  FormulaPtr out = disjuncts.back();
  for (std::size_t i = disjuncts.size() - 1; i-- > 0;) out = or_(disjuncts[i], out);
  return out;
}

// ---------------------------------------------------------------------------
// Propositional fragment.

namespace {

PropExprPtr make_pexpr(PropExpr e) { return std::make_shared<PropExpr>(std::move(e)); }

void collect_atoms(const PropExprPtr& f, std::set<int>& out) {
  switch (f->kind) {
    case PropExpr::Kind::Atom: out.insert(f->atom); return;
    case PropExpr::Kind::Not: collect_atoms(f->a, out); return;
    default:
      collect_atoms(f->a, out);
      collect_atoms(f->b, out);
  }
}

bool peval(const PropExprPtr& f, const std::map<int, bool>& env) {
  switch (f->kind) {
    case PropExpr::Kind::Atom: return env.at(f->atom);
    case PropExpr::Kind::Not: return !peval(f->a, env);
    case PropExpr::Kind::And: return peval(f->a, env) && peval(f->b, env);
    case PropExpr::Kind::Or: return peval(f->a, env) || peval(f->b, env);
    case PropExpr::Kind::Implies: return !peval(f->a, env) || peval(f->b, env);
    case PropExpr::Kind::Iff: return peval(f->a, env) == peval(f->b, env);
  }
  throw Error("internal: unhandled prop kind");
}

}  // namespace

PropExprPtr patom(int id) { return make_pexpr({.kind = PropExpr::Kind::Atom, .atom = id}); }
PropExprPtr pnot(PropExprPtr a) {
  return make_pexpr({.kind = PropExpr::Kind::Not, .a = std::move(a)});
}
PropExprPtr pand(PropExprPtr a, PropExprPtr b) {
  return make_pexpr({.kind = PropExpr::Kind::And, .a = std::move(a), .b = std::move(b)});
}
PropExprPtr por(PropExprPtr a, PropExprPtr b) {
  return make_pexpr({.kind = PropExpr::Kind::Or, .a = std::move(a), .b = std::move(b)});
}
PropExprPtr pimplies(PropExprPtr a, PropExprPtr b) {
  return make_pexpr({.kind = PropExpr::Kind::Implies, .a = std::move(a), .b = std::move(b)});
}
PropExprPtr piff(PropExprPtr a, PropExprPtr b) {
  return make_pexpr({.kind = PropExpr::Kind::Iff, .a = std::move(a), .b = std::move(b)});
}

bool tautology_valid(const PropExprPtr& f) {
  std::set<int> atom_set;
  collect_atoms(f, atom_set);
  if (atom_set.size() > 16)
    throw AtomLimitError("truth tables support at most 16 atoms");
  std::vector<int> atoms(atom_set.begin(), atom_set.end());
  for (std::uint32_t row = 0; row < (1u << atoms.size()); ++row) {
    std::map<int, bool> env;
    for (std::size_t i = 0; i < atoms.size(); ++i) env[atoms[i]] = (row >> i) & 1;
    if (!peval(f, env)) return false;
  }
  return true;
}

PropExprPtr exchange_tautology(std::size_t k) {
  if (k == 0) throw Error("the exchange tautology needs at least one pair");
  auto p = [](std::size_t i) { return patom(static_cast<int>(2 * i)); };
  auto q = [](std::size_t i) { return patom(static_cast<int>(2 * i + 1)); };
  PropExprPtr conj = piff(pnot(p(0)), q(0));
  PropExprPtr disj = piff(p(0), q(0));
  for (std::size_t i = 1; i < k; ++i) {
    conj = pand(conj, piff(pnot(p(i)), q(i)));
    disj = por(disj, piff(p(i), q(i)));
  }
  return piff(pnot(conj), disj);
}

// ---------------------------------------------------------------------------
// Refutations.

report::ClaimReport verify_not_godel(const std::vector<FormulaPtr>& corpus,
                                     const framework::StarCoding& coding) {
  report::ClaimReport rpt;
  rpt.claim = "not-godel: sigma holds iff psi(code(sigma)) holds";
  FormulaPtr psi = framework::designated_formulas().psi;
  for (const FormulaPtr& sigma : corpus) {
    Verdict direct = decide(sigma);
    Verdict coded = decide(substitute(psi, 0, coding.star_numeral(sigma)));
    rpt.add(print(sigma), to_string(direct), to_string(coded));
  }
  return rpt;
}

report::ClaimReport verify_not_tarski(const std::vector<FormulaPtr>& corpus,
                                      const framework::StarCoding& coding) {
  report::ClaimReport rpt;
  rpt.claim = "not-tarski: upsilon(code(sigma)) <-> sigma holds";
  FormulaPtr upsilon = framework::designated_formulas().upsilon;
  for (const FormulaPtr& sigma : corpus) {
    FormulaPtr schema = iff(substitute(upsilon, 0, coding.star_numeral(sigma)), sigma);
    rpt.add(print(sigma), "true", to_string(decide(schema)));
  }
  return rpt;
}

report::ClaimReport verify_not_carnap(const std::vector<std::vector<FormulaPtr>>& families,
                                      const framework::StarCoding& coding) {
  report::ClaimReport rpt;
  rpt.claim = "not-carnap: no finite family gives a provable fixed-point disjunction";
  FormulaPtr lambda = framework::designated_formulas().lambda;
  for (const std::vector<FormulaPtr>& family : families) {
    std::string input;
    for (const FormulaPtr& a : family) {
      if (!input.empty()) input += " ; ";
      input += print(a);
    }
    if (input.empty()) input = "(empty family)";
    FormulaPtr disj = carnap_disjunction(lambda, family, coding);
    rpt.add(input, "false", to_string(decide(disj)));
  }
  return rpt;
}

report::ClaimReport verify_not_rosser(const std::vector<FormulaPtr>& corpus,
                                      const std::vector<BigInt>& witnesses,
                                      const framework::StarCoding& coding) {
  report::ClaimReport rpt;
  rpt.claim = "not-rosser: theta witnesses every theorem, ~theta every non-theorem";
  FormulaPtr theta = framework::designated_formulas().theta;
  for (const FormulaPtr& sigma : corpus) {
    bool holds = truth(decide(sigma));
    TermPtr code = coding.star_numeral(sigma);
    for (const BigInt& w : witnesses) {
      FormulaPtr inst =
          substitute_parallel(theta, {{0, numeral(w)}, {1, code}});
      if (!holds) inst = not_(inst);
      std::string input = print(sigma) + " ; witness " + w.str();
      rpt.add(input, "true", to_string(decide(inst)));
    }
  }
  return rpt;
}

}  // namespace lwb::theorems
