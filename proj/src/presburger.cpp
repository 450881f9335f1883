#include "lwb/presburger.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

namespace lwb {

BigInt nu_star(const BigInt& n) {
  if (n < 0) throw Error("nu* is defined on naturals");
  return boost::multiprecision::bit_test(n, 0) ? 16 + 16 * n : 33 + 16 * n;
}

}  // namespace lwb

namespace lwb::presburger {

using syntax::Formula;
using syntax::FormulaPtr;
using syntax::Term;
using syntax::TermPtr;
using syntax::VarId;

std::string to_string(Verdict v) { return truth(v) ? "true" : "false"; }

// ---------------------------------------------------------------------------
// Term evaluation.

BigInt eval_term(const TermPtr& t, const std::map<VarId, BigInt>& env) {
  switch (t->kind) {
    case Term::Kind::Zero: return 0;
    case Term::Kind::One: return 1;
    case Term::Kind::Numeral: return t->value;
    case Term::Kind::Var: {
      auto it = env.find(t->var);
      if (it == env.end())
        throw Error("unbound variable " + syntax::var_name(t->var) + " in term evaluation");
      return it->second;
    }
    case Term::Kind::Add: return eval_term(t->lhs, env) + eval_term(t->rhs, env);
    case Term::Kind::Mul: return eval_term(t->lhs, env) * eval_term(t->rhs, env);
    case Term::Kind::Nu: return nu_star(eval_term(t->lhs, env));
  }
  throw Error("internal: unhandled term kind");
}

BigInt eval_closed_term(const TermPtr& t) { return eval_term(t, {}); }

// ---------------------------------------------------------------------------
// v elimination.

namespace {

// Innermost Nu node (its argument is v-free), leftmost first.
const Term* find_innermost_nu(const TermPtr& t) {
  switch (t->kind) {
    case Term::Kind::Nu: {
      if (const Term* inner = find_innermost_nu(t->lhs)) return inner;
      return t.get();
    }
    case Term::Kind::Add:
    case Term::Kind::Mul: {
      if (const Term* inner = find_innermost_nu(t->lhs)) return inner;
      return find_innermost_nu(t->rhs);
    }
    default:
      return nullptr;
  }
}

TermPtr replace_node(const TermPtr& t, const Term* target, const TermPtr& repl) {
  if (t.get() == target) return repl;
  switch (t->kind) {
    case Term::Kind::Nu: {
      TermPtr a = replace_node(t->lhs, target, repl);
      return a == t->lhs ? t : syntax::nu(a);
    }
    case Term::Kind::Add:
    case Term::Kind::Mul: {
      TermPtr a = replace_node(t->lhs, target, repl);
      TermPtr b = replace_node(t->rhs, target, repl);
      if (a == t->lhs && b == t->rhs) return t;
      return t->kind == Term::Kind::Add ? syntax::add(a, b) : syntax::mul(a, b);
    }
    default:
      return t;
  }
}

TermPtr times16(const TermPtr& t) {
  TermPtr acc = t;
  for (int i = 1; i < 16; ++i) acc = syntax::add(acc, t);
  return acc;
}

FormulaPtr make_atom(Formula::Kind kind, TermPtr a, TermPtr b) {
  switch (kind) {
    case Formula::Kind::Less: return syntax::less(std::move(a), std::move(b));
    case Formula::Kind::Eq: return syntax::eq(std::move(a), std::move(b));
    case Formula::Kind::Sigma: return syntax::sigma_atom(std::move(a), std::move(b));
    default: throw Error("internal: not an atom kind");
  }
}

FormulaPtr elim_atom(const FormulaPtr& atom, VarId& fresh) {
  const Term* target = find_innermost_nu(atom->t1);
  bool in_t1 = target != nullptr;
  if (!target) target = find_innermost_nu(atom->t2);
  if (!target) return atom;

  TermPtr arg = target->lhs;  // v-free by innermost choice
  VarId w = fresh++;
  VarId u = fresh++;
  TermPtr wv = syntax::var(w);
  FormulaPtr rest = make_atom(
      atom->kind,
      in_t1 ? replace_node(atom->t1, target, wv) : atom->t1,
      in_t1 ? atom->t2 : replace_node(atom->t2, target, wv));

  FormulaPtr even_arg = syntax::exists(
      u, syntax::eq(arg, syntax::add(syntax::var(u), syntax::var(u))));
  FormulaPtr odd_arg = syntax::exists(
      u, syntax::eq(arg, syntax::add(syntax::add(syntax::var(u), syntax::var(u)),
                                     syntax::one())));
  FormulaPtr even_case =
      syntax::and_(even_arg, syntax::eq(wv, syntax::add(times16(arg), syntax::numeral(33))));
  FormulaPtr odd_case =
      syntax::and_(odd_arg, syntax::eq(wv, syntax::add(times16(arg), syntax::numeral(16))));

  return syntax::exists(
      w, syntax::and_(syntax::or_(even_case, odd_case), elim_atom(rest, fresh)));
}

FormulaPtr elim_rec(const FormulaPtr& f, VarId& fresh) {
  switch (f->kind) {
    case Formula::Kind::Less:
    case Formula::Kind::Eq:
    case Formula::Kind::Sigma:
      return elim_atom(f, fresh);
    case Formula::Kind::Not: {
      FormulaPtr a = elim_rec(f->f1, fresh);
      return a == f->f1 ? f : syntax::not_(a);
    }
    case Formula::Kind::Forall:
    case Formula::Kind::Exists: {
      FormulaPtr a = elim_rec(f->f1, fresh);
      if (a == f->f1) return f;
      return f->kind == Formula::Kind::Forall ? syntax::forall(f->var, a)
                                              : syntax::exists(f->var, a);
    }
    default: {
      FormulaPtr a = elim_rec(f->f1, fresh);
      FormulaPtr b = elim_rec(f->f2, fresh);
      if (a == f->f1 && b == f->f2) return f;
      switch (f->kind) {
        case Formula::Kind::And: return syntax::and_(a, b);
        case Formula::Kind::Or: return syntax::or_(a, b);
        case Formula::Kind::Implies: return syntax::implies(a, b);
        default: return syntax::iff(a, b);
      }
    }
  }
}

}  // namespace

FormulaPtr eliminate_nu(const FormulaPtr& f) {
  VarId fresh = syntax::fresh_above(f);
  return elim_rec(f, fresh);
}

// ---------------------------------------------------------------------------
// Linear terms.

LinTerm LinTerm::constant(const BigInt& k) { return {k, {}}; }

LinTerm LinTerm::variable(VarId v) {
  LinTerm t;
  t.k = 0;
  t.c[v] = 1;
  return t;
}

LinTerm LinTerm::plus(const LinTerm& o) const {
  LinTerm r = *this;
  r.k += o.k;
  for (const auto& [v, cv] : o.c) {
    BigInt nc = r.coeff(v) + cv;
    if (nc == 0) r.c.erase(v);
    else r.c[v] = nc;
  }
  return r;
}

LinTerm LinTerm::minus(const LinTerm& o) const { return plus(o.negated()); }

LinTerm LinTerm::negated() const {
  LinTerm r;
  r.k = -k;
  for (const auto& [v, cv] : c) r.c[v] = -cv;
  return r;
}

LinTerm LinTerm::times(const BigInt& s) const {
  if (s == 0) return constant(0);
  LinTerm r;
  r.k = k * s;
  for (const auto& [v, cv] : c) r.c[v] = cv * s;
  return r;
}

LinTerm LinTerm::without(VarId v) const {
  LinTerm r = *this;
  r.c.erase(v);
  return r;
}

BigInt LinTerm::coeff(VarId v) const {
  auto it = c.find(v);
  return it == c.end() ? BigInt(0) : it->second;
}

// ---------------------------------------------------------------------------
// Quantifier-free layer with folding constructors.

namespace {

PropPtr make_prop(Prop p) { return std::make_shared<Prop>(std::move(p)); }

}  // namespace

PropPtr prop_true() {
  static const PropPtr p = make_prop({.kind = Prop::Kind::True});
  return p;
}

PropPtr prop_false() {
  static const PropPtr p = make_prop({.kind = Prop::Kind::False});
  return p;
}

PropPtr prop_lt(LinTerm l) {
  if (l.ground()) return l.k > 0 ? prop_true() : prop_false();
  return make_prop({.kind = Prop::Kind::Lt, .lin = std::move(l)});
}

PropPtr prop_eq(LinTerm l) {
  if (l.ground()) return l.k == 0 ? prop_true() : prop_false();
  return make_prop({.kind = Prop::Kind::Eq, .lin = std::move(l)});
}

PropPtr prop_div(BigInt d, LinTerm l) {
  if (d < 0) d = -d;
  if (d == 0) throw Error("internal: zero divisor");
  if (d == 1) return prop_true();
  if (l.ground()) return mod_floor(l.k, d) == 0 ? prop_true() : prop_false();
  return make_prop({.kind = Prop::Kind::Div, .lin = std::move(l), .d = std::move(d)});
}

PropPtr prop_notdiv(BigInt d, LinTerm l) {
  if (d < 0) d = -d;
  if (d == 0) throw Error("internal: zero divisor");
  if (d == 1) return prop_false();
  if (l.ground()) return mod_floor(l.k, d) == 0 ? prop_false() : prop_true();
  return make_prop({.kind = Prop::Kind::NotDiv, .lin = std::move(l), .d = std::move(d)});
}

PropPtr prop_and(PropPtr a, PropPtr b) {
  if (a->kind == Prop::Kind::False || b->kind == Prop::Kind::False) return prop_false();
  if (a->kind == Prop::Kind::True) return b;
  if (b->kind == Prop::Kind::True) return a;
  return make_prop({.kind = Prop::Kind::And, .a = std::move(a), .b = std::move(b)});
}

PropPtr prop_or(PropPtr a, PropPtr b) {
  if (a->kind == Prop::Kind::True || b->kind == Prop::Kind::True) return prop_true();
  if (a->kind == Prop::Kind::False) return b;
  if (b->kind == Prop::Kind::False) return a;
  return make_prop({.kind = Prop::Kind::Or, .a = std::move(a), .b = std::move(b)});
}

namespace {

PropPtr nnf_not(const PropPtr& p) {
  switch (p->kind) {
    case Prop::Kind::True: return prop_false();
    case Prop::Kind::False: return prop_true();
    // not(0 < L)  ==  L <= 0  ==  0 < 1 - L  over the integers
    case Prop::Kind::Lt: return prop_lt(LinTerm::constant(1).minus(p->lin));
    case Prop::Kind::Eq:
      return prop_or(prop_lt(p->lin), prop_lt(p->lin.negated()));
    case Prop::Kind::Div: return prop_notdiv(p->d, p->lin);
    case Prop::Kind::NotDiv: return prop_div(p->d, p->lin);
    case Prop::Kind::And: return prop_or(nnf_not(p->a), nnf_not(p->b));
    case Prop::Kind::Or: return prop_and(nnf_not(p->a), nnf_not(p->b));
  }
  throw Error("internal: unhandled prop kind");
}

bool prop_contains(const PropPtr& p, VarId v) {
  switch (p->kind) {
    case Prop::Kind::True:
    case Prop::Kind::False:
      return false;
    case Prop::Kind::Lt:
    case Prop::Kind::Eq:
    case Prop::Kind::Div:
    case Prop::Kind::NotDiv:
      return p->lin.c.count(v) != 0;
    case Prop::Kind::And:
    case Prop::Kind::Or:
      return prop_contains(p->a, v) || prop_contains(p->b, v);
  }
  return false;
}

// --------------------------- Cooper elimination ---------------------------

using boost::multiprecision::abs;
using boost::multiprecision::lcm;

BigInt coeff_lcm(const PropPtr& p, VarId v) {
  switch (p->kind) {
    case Prop::Kind::Lt:
    case Prop::Kind::Eq:
    case Prop::Kind::Div:
    case Prop::Kind::NotDiv: {
      BigInt c = p->lin.coeff(v);
      return c == 0 ? BigInt(1) : abs(c);
    }
    case Prop::Kind::And:
    case Prop::Kind::Or:
      return lcm(coeff_lcm(p->a, v), coeff_lcm(p->b, v));
    default:
      return 1;
  }
}

// Rescales every atom so the coefficient of v becomes +-1, reading the new
// unit variable as m*v.
PropPtr unitize(const PropPtr& p, VarId v, const BigInt& m) {
  switch (p->kind) {
    case Prop::Kind::Lt:
    case Prop::Kind::Eq:
    case Prop::Kind::Div:
    case Prop::Kind::NotDiv: {
      BigInt c = p->lin.coeff(v);
      if (c == 0) return p;
      BigInt s = m / abs(c);
      LinTerm scaled = p->lin.times(s);
      scaled.c[v] = c > 0 ? 1 : -1;
      switch (p->kind) {
        case Prop::Kind::Lt: return prop_lt(std::move(scaled));
        case Prop::Kind::Eq: return prop_eq(std::move(scaled));
        case Prop::Kind::Div: return prop_div(p->d * s, std::move(scaled));
        default: return prop_notdiv(p->d * s, std::move(scaled));
      }
    }
    case Prop::Kind::And:
      return prop_and(unitize(p->a, v, m), unitize(p->b, v, m));
    case Prop::Kind::Or:
      return prop_or(unitize(p->a, v, m), unitize(p->b, v, m));
    default:
      return p;
  }
}

// Equalities on v become a pair of strict bounds so the B-set machinery
// covers them: L = 0 is 0 < L+1 and 0 < 1-L.
PropPtr split_equalities(const PropPtr& p, VarId v) {
  switch (p->kind) {
    case Prop::Kind::Eq:
      if (p->lin.coeff(v) != 0)
        return prop_and(prop_lt(p->lin.plus(LinTerm::constant(1))),
                        prop_lt(LinTerm::constant(1).minus(p->lin)));
      return p;
    case Prop::Kind::And:
      return prop_and(split_equalities(p->a, v), split_equalities(p->b, v));
    case Prop::Kind::Or:
      return prop_or(split_equalities(p->a, v), split_equalities(p->b, v));
    default:
      return p;
  }
}

void collect_cooper_data(const PropPtr& p, VarId v, BigInt& divisor_lcm,
                         std::vector<LinTerm>& lower_bounds) {
  switch (p->kind) {
    case Prop::Kind::Lt:
      // 0 < v + A gives the lower bound v > -A.
      if (p->lin.coeff(v) == 1) lower_bounds.push_back(p->lin.without(v).negated());
      return;
    case Prop::Kind::Div:
    case Prop::Kind::NotDiv:
      if (p->lin.coeff(v) != 0) divisor_lcm = lcm(divisor_lcm, p->d);
      return;
    case Prop::Kind::And:
    case Prop::Kind::Or:
      collect_cooper_data(p->a, v, divisor_lcm, lower_bounds);
      collect_cooper_data(p->b, v, divisor_lcm, lower_bounds);
      return;
    default:
      return;
  }
}

PropPtr subst_var(const PropPtr& p, VarId v, const LinTerm& t) {
  switch (p->kind) {
    case Prop::Kind::Lt:
    case Prop::Kind::Eq:
    case Prop::Kind::Div:
    case Prop::Kind::NotDiv: {
      BigInt c = p->lin.coeff(v);
      if (c == 0) return p;
      LinTerm replaced = p->lin.without(v).plus(t.times(c));
      switch (p->kind) {
        case Prop::Kind::Lt: return prop_lt(std::move(replaced));
        case Prop::Kind::Eq: return prop_eq(std::move(replaced));
        case Prop::Kind::Div: return prop_div(p->d, std::move(replaced));
        default: return prop_notdiv(p->d, std::move(replaced));
      }
    }
    case Prop::Kind::And:
      return prop_and(subst_var(p->a, v, t), subst_var(p->b, v, t));
    case Prop::Kind::Or:
      return prop_or(subst_var(p->a, v, t), subst_var(p->b, v, t));
    default:
      return p;
  }
}

// The minus-infinity variant: lower-bound atoms go false, upper bounds go
// true, and periodic atoms are sampled at v = j.
PropPtr minus_inf(const PropPtr& p, VarId v, const BigInt& j) {
  switch (p->kind) {
    case Prop::Kind::Lt: {
      BigInt c = p->lin.coeff(v);
      if (c == 0) return p;
      return c > 0 ? prop_false() : prop_true();
    }
    case Prop::Kind::Eq:
      if (p->lin.coeff(v) != 0)
        throw Error("internal: equality on eliminated variable survived splitting");
      return p;
    case Prop::Kind::Div:
    case Prop::Kind::NotDiv: {
      BigInt c = p->lin.coeff(v);
      if (c == 0) return p;
      LinTerm sampled = p->lin.without(v).plus(LinTerm::constant(j * c));
      return p->kind == Prop::Kind::Div ? prop_div(p->d, std::move(sampled))
                                        : prop_notdiv(p->d, std::move(sampled));
    }
    case Prop::Kind::And:
      return prop_and(minus_inf(p->a, v, j), minus_inf(p->b, v, j));
    case Prop::Kind::Or:
      return prop_or(minus_inf(p->a, v, j), minus_inf(p->b, v, j));
    default:
      return p;
  }
}

// exists v over the integers, v-coefficients arbitrary, p in NNF.
PropPtr cooper_exists_z(VarId v, const PropPtr& p) {
  BigInt m = coeff_lcm(p, v);
  PropPtr q = unitize(p, v, m);
  if (m > 1) q = prop_and(q, prop_div(m, LinTerm::variable(v)));
  q = split_equalities(q, v);

  BigInt big_d = 1;
  std::vector<LinTerm> lower_bounds;
  collect_cooper_data(q, v, big_d, lower_bounds);

  PropPtr result = prop_false();
  for (BigInt j = 1; j <= big_d; ++j) {
    result = prop_or(result, minus_inf(q, v, j));
    for (const LinTerm& b : lower_bounds)
      result = prop_or(result, subst_var(q, v, b.plus(LinTerm::constant(j))));
  }
  return result;
}

// exists v over the naturals: relativize with v >= 0 and run Cooper.
PropPtr cooper_exists_nat(VarId v, const PropPtr& p) {
  if (!prop_contains(p, v)) return p;
  PropPtr relativized =
      prop_and(prop_lt(LinTerm::variable(v).plus(LinTerm::constant(1))), p);
  return cooper_exists_z(v, relativized);
}

// ------------------------- Formula -> linear layer -------------------------

LinTerm lin_of_term(const TermPtr& t) {
  switch (t->kind) {
    case Term::Kind::Zero: return LinTerm::constant(0);
    case Term::Kind::One: return LinTerm::constant(1);
    case Term::Kind::Numeral: return LinTerm::constant(t->value);
    case Term::Kind::Var: return LinTerm::variable(t->var);
    case Term::Kind::Add: return lin_of_term(t->lhs).plus(lin_of_term(t->rhs));
    case Term::Kind::Mul:
      throw NonPresburgerError("'*' is outside the decidable fragment");
    case Term::Kind::Nu:
      throw Error("internal: v must be eliminated before linearization");
  }
  throw Error("internal: unhandled term kind");
}

// Converts to the quantifier-free layer, eliminating quantifiers innermost
// first. positive tracks polarity so the result is in NNF throughout.
PropPtr to_qf(const FormulaPtr& f, bool positive) {
  switch (f->kind) {
    case Formula::Kind::Less: {
      LinTerm diff = lin_of_term(f->t2).minus(lin_of_term(f->t1));
      // t < u is 0 < u - t; its negation over the integers is 0 < t - u + 1.
      return positive ? prop_lt(diff)
                      : prop_lt(LinTerm::constant(1).minus(diff));
    }
    case Formula::Kind::Eq: {
      LinTerm diff = lin_of_term(f->t1).minus(lin_of_term(f->t2));
      if (positive) return prop_eq(diff);
      return prop_or(prop_lt(diff), prop_lt(diff.negated()));
    }
    case Formula::Kind::Sigma:
      throw NonPresburgerError("sigma atoms are outside the decidable fragment");
    case Formula::Kind::Not:
      return to_qf(f->f1, !positive);
    case Formula::Kind::And:
      return positive ? prop_and(to_qf(f->f1, true), to_qf(f->f2, true))
                      : prop_or(to_qf(f->f1, false), to_qf(f->f2, false));
    case Formula::Kind::Or:
      return positive ? prop_or(to_qf(f->f1, true), to_qf(f->f2, true))
                      : prop_and(to_qf(f->f1, false), to_qf(f->f2, false));
    case Formula::Kind::Implies:
      return positive ? prop_or(to_qf(f->f1, false), to_qf(f->f2, true))
                      : prop_and(to_qf(f->f1, true), to_qf(f->f2, false));
    case Formula::Kind::Iff:
      return positive ? prop_or(prop_and(to_qf(f->f1, true), to_qf(f->f2, true)),
                                prop_and(to_qf(f->f1, false), to_qf(f->f2, false)))
                      : prop_or(prop_and(to_qf(f->f1, true), to_qf(f->f2, false)),
                                prop_and(to_qf(f->f1, false), to_qf(f->f2, true)));
    case Formula::Kind::Exists: {
      PropPtr body = to_qf(f->f1, true);
      PropPtr ex = cooper_exists_nat(f->var, body);
      return positive ? ex : nnf_not(ex);
    }
    case Formula::Kind::Forall: {
      // forall v. p  ==  not exists v. not p
      PropPtr body = to_qf(f->f1, false);
      PropPtr ex = cooper_exists_nat(f->var, body);
      return positive ? nnf_not(ex) : ex;
    }
  }
  throw Error("internal: unhandled formula kind");
}

}  // namespace

Verdict decide(const FormulaPtr& s) {
  if (syntax::contains_sigma(s))
    throw NonPresburgerError("sigma atoms are outside the decidable fragment");
  if (syntax::contains_mul(s))
    throw NonPresburgerError("'*' is outside the decidable fragment");
  if (!syntax::is_sentence(s)) {
    std::string names;
    for (VarId v : syntax::free_vars(s)) {
      if (!names.empty()) names += ", ";
      names += syntax::var_name(v);
    }
    throw NotASentenceError("formula has free variables: " + names);
  }
  PropPtr q = to_qf(eliminate_nu(s), true);
  return verdict(eval_ground(q));
}

PropPtr qe_step(const FormulaPtr& f) {
  if (f->kind != Formula::Kind::Exists)
    throw UsageError("qe expects a formula of the shape exists x. ...");
  if (syntax::contains_quantifier(f->f1))
    throw UsageError("qe expects a quantifier-free body");
  if (syntax::contains_nu(f->f1))
    throw UsageError("qe expects a v-free body; run the v elimination first");
  return cooper_exists_nat(f->var, to_qf(f->f1, true));
}

bool eval_ground(const PropPtr& p) {
  switch (p->kind) {
    case Prop::Kind::True: return true;
    case Prop::Kind::False: return false;
    case Prop::Kind::And: return eval_ground(p->a) && eval_ground(p->b);
    case Prop::Kind::Or: return eval_ground(p->a) || eval_ground(p->b);
    default:
      if (!p->lin.ground()) throw Error("internal: variable survived elimination");
      switch (p->kind) {
        case Prop::Kind::Lt: return p->lin.k > 0;
        case Prop::Kind::Eq: return p->lin.k == 0;
        case Prop::Kind::Div: return mod_floor(p->lin.k, p->d) == 0;
        default: return mod_floor(p->lin.k, p->d) != 0;
      }
  }
}

// ---------------------------------------------------------------------------
// Printing and re-expression of the quantifier-free layer.

namespace {

std::string lin_to_string(const LinTerm& l) {
  std::string out;
  for (const auto& [v, c] : l.c) {
    if (out.empty()) {
      if (c == 1) out = syntax::var_name(v);
      else if (c == -1) out = "-" + syntax::var_name(v);
      else out = c.str() + "*" + syntax::var_name(v);
    } else {
      BigInt a = abs(c);
      out += c > 0 ? " + " : " - ";
      if (a != 1) out += a.str() + "*";
      out += syntax::var_name(v);
    }
  }
  if (out.empty()) return l.k.str();
  if (l.k > 0) out += " + " + l.k.str();
  if (l.k < 0) out += " - " + BigInt(-l.k).str();
  return out;
}

}  // namespace

std::string print_prop(const PropPtr& p) {
  switch (p->kind) {
    case Prop::Kind::True: return "true";
    case Prop::Kind::False: return "false";
    case Prop::Kind::Lt: return "0 < " + lin_to_string(p->lin);
    case Prop::Kind::Eq: return lin_to_string(p->lin) + " = 0";
    case Prop::Kind::Div: return p->d.str() + " | " + lin_to_string(p->lin);
    case Prop::Kind::NotDiv: return "~(" + p->d.str() + " | " + lin_to_string(p->lin) + ")";
    case Prop::Kind::And: return "(" + print_prop(p->a) + " & " + print_prop(p->b) + ")";
    case Prop::Kind::Or: return "(" + print_prop(p->a) + " | " + print_prop(p->b) + ")";
  }
  throw Error("internal: unhandled prop kind");
}

namespace {

VarId prop_fresh_above(const PropPtr& p) {
  switch (p->kind) {
    case Prop::Kind::And:
    case Prop::Kind::Or:
      return std::max(prop_fresh_above(p->a), prop_fresh_above(p->b));
    case Prop::Kind::Lt:
    case Prop::Kind::Eq:
    case Prop::Kind::Div:
    case Prop::Kind::NotDiv:
      return p->lin.c.empty() ? 0 : p->lin.c.rbegin()->first + 1;
    default:
      return 0;
  }
}

// c copies of t summed; coefficients the QE layer produces are small.
TermPtr repeated(const TermPtr& t, const BigInt& count) {
  if (count > 4096) throw Error("coefficient too large to spell out as a sum");
  std::size_t n = count.convert_to<std::size_t>();
  TermPtr acc = t;
  for (std::size_t i = 1; i < n; ++i) acc = syntax::add(acc, t);
  return acc;
}

// Splits L into P - N with P, N built from naturals only.
void split_sides(const LinTerm& l, TermPtr& pos, TermPtr& neg) {
  pos = nullptr;
  neg = nullptr;
  auto accumulate = [](TermPtr& side, TermPtr piece) {
    side = side ? syntax::add(side, std::move(piece)) : std::move(piece);
  };
  for (const auto& [v, c] : l.c) {
    if (c > 0) accumulate(pos, repeated(syntax::var(v), c));
    else accumulate(neg, repeated(syntax::var(v), -c));
  }
  if (l.k > 0) accumulate(pos, syntax::numeral(l.k));
  if (l.k < 0) accumulate(neg, syntax::numeral(-l.k));
  if (!pos) pos = syntax::zero();
  if (!neg) neg = syntax::zero();
}

FormulaPtr prop_to_formula_rec(const PropPtr& p, VarId fresh) {
  switch (p->kind) {
    case Prop::Kind::True: return syntax::eq(syntax::zero(), syntax::zero());
    case Prop::Kind::False: return syntax::not_(syntax::eq(syntax::zero(), syntax::zero()));
    case Prop::Kind::Lt: {
      // 0 < P - N  over the naturals is  N < P.
      TermPtr pos, neg;
      split_sides(p->lin, pos, neg);
      return syntax::less(neg, pos);
    }
    case Prop::Kind::Eq: {
      TermPtr pos, neg;
      split_sides(p->lin, pos, neg);
      return syntax::eq(pos, neg);
    }
    case Prop::Kind::Div:
    case Prop::Kind::NotDiv: {
      // d | P - N  iff some natural multiple of d bridges the two sides.
      TermPtr pos, neg;
      split_sides(p->lin, pos, neg);
      TermPtr multiple = repeated(syntax::var(fresh), p->d);
      FormulaPtr witness = syntax::exists(
          fresh, syntax::or_(syntax::eq(pos, syntax::add(neg, multiple)),
                             syntax::eq(neg, syntax::add(pos, multiple))));
      return p->kind == Prop::Kind::Div ? witness : syntax::not_(witness);
    }
    case Prop::Kind::And:
      return syntax::and_(prop_to_formula_rec(p->a, fresh), prop_to_formula_rec(p->b, fresh));
    case Prop::Kind::Or:
      return syntax::or_(prop_to_formula_rec(p->a, fresh), prop_to_formula_rec(p->b, fresh));
  }
  throw Error("internal: unhandled prop kind");
}

}  // namespace

FormulaPtr prop_to_formula(const PropPtr& p) {
  return prop_to_formula_rec(p, prop_fresh_above(p));
}

// ---------------------------------------------------------------------------
// Exhaustive oracle.

namespace {

bool brute_eval(const FormulaPtr& f, std::map<VarId, BigInt>& env, std::uint32_t bound) {
  switch (f->kind) {
    case Formula::Kind::Less: return eval_term(f->t1, env) < eval_term(f->t2, env);
    case Formula::Kind::Eq: return eval_term(f->t1, env) == eval_term(f->t2, env);
    case Formula::Kind::Sigma:
      throw NonPresburgerError("sigma atoms have no standard-model evaluation here");
    case Formula::Kind::Not: return !brute_eval(f->f1, env, bound);
    case Formula::Kind::And: return brute_eval(f->f1, env, bound) && brute_eval(f->f2, env, bound);
    case Formula::Kind::Or: return brute_eval(f->f1, env, bound) || brute_eval(f->f2, env, bound);
    case Formula::Kind::Implies:
      return !brute_eval(f->f1, env, bound) || brute_eval(f->f2, env, bound);
    case Formula::Kind::Iff:
      return brute_eval(f->f1, env, bound) == brute_eval(f->f2, env, bound);
    case Formula::Kind::Forall:
    case Formula::Kind::Exists: {
      bool is_forall = f->kind == Formula::Kind::Forall;
      BigInt saved;
      bool had = env.count(f->var);
      if (had) saved = env[f->var];
      bool result = is_forall;
      for (std::uint32_t k = 0; k <= bound; ++k) {
        env[f->var] = k;
        bool inner = brute_eval(f->f1, env, bound);
        if (is_forall ? !inner : inner) { result = !is_forall; break; }
      }
      if (had) env[f->var] = saved;
      else env.erase(f->var);
      return result;
    }
  }
  throw Error("internal: unhandled formula kind");
}

bool quantifiers_bounded(const FormulaPtr& f, std::uint32_t bound) {
  switch (f->kind) {
    case Formula::Kind::Less:
    case Formula::Kind::Eq:
    case Formula::Kind::Sigma:
      return true;
    case Formula::Kind::Not:
      return quantifiers_bounded(f->f1, bound);
    case Formula::Kind::And:
    case Formula::Kind::Or:
    case Formula::Kind::Implies:
    case Formula::Kind::Iff:
      return quantifiers_bounded(f->f1, bound) && quantifiers_bounded(f->f2, bound);
    case Formula::Kind::Forall:
    case Formula::Kind::Exists: {
      const FormulaPtr& b = f->f1;
      Formula::Kind want =
          f->kind == Formula::Kind::Exists ? Formula::Kind::And : Formula::Kind::Implies;
      if (b->kind != want) return false;
      const FormulaPtr& guard = b->f1;
      if (guard->kind != Formula::Kind::Less) return false;
      if (guard->t1->kind != Term::Kind::Var || guard->t1->var != f->var) return false;
      const TermPtr& limit = guard->t2;
      if (!syntax::free_vars(limit).empty()) return false;
      if (eval_closed_term(limit) > bound) return false;
      return quantifiers_bounded(b->f2, bound);
    }
  }
  return false;
}

}  // namespace

BruteResult brute_force_eval(const FormulaPtr& s, std::uint32_t bound) {
  if (!syntax::is_sentence(s))
    throw NotASentenceError("exhaustive evaluation needs a closed sentence");
  std::map<VarId, BigInt> env;
  bool t = brute_eval(s, env, bound);
  return {t, quantifiers_bounded(s, bound)};
}

}  // namespace lwb::presburger
