#include "lwb/syntax.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <sstream>
#include <utility>

namespace lwb::syntax {

namespace {

TermPtr make_term(Term t) { return std::make_shared<Term>(std::move(t)); }
FormulaPtr make_formula(Formula f) { return std::make_shared<Formula>(std::move(f)); }

bool is_pure_numeral(const TermPtr& t) {
  return t->kind == Term::Kind::One || t->kind == Term::Kind::Numeral;
}

BigInt numeral_value(const TermPtr& t) {
  switch (t->kind) {
    case Term::Kind::Zero: return 0;
    case Term::Kind::One: return 1;
    case Term::Kind::Numeral: return t->value;
    default: throw Error("internal: not a numeral term");
  }
}

}  // namespace

TermPtr zero() {
  static const TermPtr t = make_term({.kind = Term::Kind::Zero});
  return t;
}

TermPtr one() {
  static const TermPtr t = make_term({.kind = Term::Kind::One});
  return t;
}

TermPtr var(VarId v) { return make_term({.kind = Term::Kind::Var, .var = v}); }

TermPtr numeral(const BigInt& n) {
  if (n < 0) throw Error("numerals denote naturals; got " + n.str());
  if (n == 0) return zero();
  if (n == 1) return one();
  return make_term({.kind = Term::Kind::Numeral, .value = n});
}

TermPtr add(TermPtr l, TermPtr r) {
  // A sum of 1-chains is itself a numeral term; keeping it as the Numeral
  // node makes the symbol string of 1+1 and 2-bar identical, which the
  // injectivity of the linearization relies on.
  if (is_pure_numeral(l) && is_pure_numeral(r))
    return numeral(numeral_value(l) + numeral_value(r));
  return make_term({.kind = Term::Kind::Add, .lhs = std::move(l), .rhs = std::move(r)});
}

TermPtr mul(TermPtr l, TermPtr r) {
  return make_term({.kind = Term::Kind::Mul, .lhs = std::move(l), .rhs = std::move(r)});
}

TermPtr nu(TermPtr t) {
  return make_term({.kind = Term::Kind::Nu, .lhs = std::move(t)});
}

FormulaPtr less(TermPtr l, TermPtr r) {
  return make_formula({.kind = Formula::Kind::Less, .t1 = std::move(l), .t2 = std::move(r)});
}

FormulaPtr eq(TermPtr l, TermPtr r) {
  return make_formula({.kind = Formula::Kind::Eq, .t1 = std::move(l), .t2 = std::move(r)});
}

FormulaPtr sigma_atom(TermPtr code, TermPtr value) {
  return make_formula({.kind = Formula::Kind::Sigma, .t1 = std::move(code), .t2 = std::move(value)});
}

FormulaPtr not_(FormulaPtr f) {
  return make_formula({.kind = Formula::Kind::Not, .f1 = std::move(f)});
}

FormulaPtr and_(FormulaPtr a, FormulaPtr b) {
  return make_formula({.kind = Formula::Kind::And, .f1 = std::move(a), .f2 = std::move(b)});
}

FormulaPtr or_(FormulaPtr a, FormulaPtr b) {
  return make_formula({.kind = Formula::Kind::Or, .f1 = std::move(a), .f2 = std::move(b)});
}

FormulaPtr implies(FormulaPtr a, FormulaPtr b) {
  return make_formula({.kind = Formula::Kind::Implies, .f1 = std::move(a), .f2 = std::move(b)});
}

FormulaPtr iff(FormulaPtr a, FormulaPtr b) {
  return make_formula({.kind = Formula::Kind::Iff, .f1 = std::move(a), .f2 = std::move(b)});
}

FormulaPtr forall(VarId v, FormulaPtr body) {
  return make_formula({.kind = Formula::Kind::Forall, .f1 = std::move(body), .var = v});
}

FormulaPtr exists(VarId v, FormulaPtr body) {
  return make_formula({.kind = Formula::Kind::Exists, .f1 = std::move(body), .var = v});
}

FormulaPtr negate(const FormulaPtr& s) { return not_(s); }

bool equal(const TermPtr& a, const TermPtr& b) {
  if (a == b) return true;
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case Term::Kind::Zero:
    case Term::Kind::One: return true;
    case Term::Kind::Var: return a->var == b->var;
    case Term::Kind::Numeral: return a->value == b->value;
    case Term::Kind::Nu: return equal(a->lhs, b->lhs);
    case Term::Kind::Add:
    case Term::Kind::Mul: return equal(a->lhs, b->lhs) && equal(a->rhs, b->rhs);
  }
  return false;
}

bool equal(const FormulaPtr& a, const FormulaPtr& b) {
  if (a == b) return true;
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case Formula::Kind::Less:
    case Formula::Kind::Eq:
    case Formula::Kind::Sigma:
      return equal(a->t1, b->t1) && equal(a->t2, b->t2);
    case Formula::Kind::Not:
      return equal(a->f1, b->f1);
    case Formula::Kind::And:
    case Formula::Kind::Or:
    case Formula::Kind::Implies:
    case Formula::Kind::Iff:
      return equal(a->f1, b->f1) && equal(a->f2, b->f2);
    case Formula::Kind::Forall:
    case Formula::Kind::Exists:
      return a->var == b->var && equal(a->f1, b->f1);
  }
  return false;
}

namespace {

void collect_free(const TermPtr& t, const std::set<VarId>& bound, std::set<VarId>& out) {
  switch (t->kind) {
    case Term::Kind::Var:
      if (!bound.count(t->var)) out.insert(t->var);
      return;
    case Term::Kind::Nu:
      collect_free(t->lhs, bound, out);
      return;
    case Term::Kind::Add:
    case Term::Kind::Mul:
      collect_free(t->lhs, bound, out);
      collect_free(t->rhs, bound, out);
      return;
    default:
      return;
  }
}

void collect_free(const FormulaPtr& f, std::set<VarId> bound, std::set<VarId>& out) {
  switch (f->kind) {
    case Formula::Kind::Less:
    case Formula::Kind::Eq:
    case Formula::Kind::Sigma:
      collect_free(f->t1, bound, out);
      collect_free(f->t2, bound, out);
      return;
    case Formula::Kind::Not:
      collect_free(f->f1, bound, out);
      return;
    case Formula::Kind::And:
    case Formula::Kind::Or:
    case Formula::Kind::Implies:
    case Formula::Kind::Iff:
      collect_free(f->f1, bound, out);
      collect_free(f->f2, bound, out);
      return;
    case Formula::Kind::Forall:
    case Formula::Kind::Exists:
      bound.insert(f->var);
      collect_free(f->f1, std::move(bound), out);
      return;
  }
}

}  // namespace

std::set<VarId> free_vars(const TermPtr& t) {
  std::set<VarId> out;
  collect_free(t, {}, out);
  return out;
}

std::set<VarId> free_vars(const FormulaPtr& f) {
  std::set<VarId> out;
  collect_free(f, {}, out);
  return out;
}

bool is_sentence(const FormulaPtr& f) { return free_vars(f).empty(); }

namespace {

void max_var_rec(const TermPtr& t, VarId& m, bool& any) {
  switch (t->kind) {
    case Term::Kind::Var:
      m = std::max(m, t->var);
      any = true;
      return;
    case Term::Kind::Nu:
      max_var_rec(t->lhs, m, any);
      return;
    case Term::Kind::Add:
    case Term::Kind::Mul:
      max_var_rec(t->lhs, m, any);
      max_var_rec(t->rhs, m, any);
      return;
    default:
      return;
  }
}

void max_var_rec(const FormulaPtr& f, VarId& m, bool& any) {
  switch (f->kind) {
    case Formula::Kind::Less:
    case Formula::Kind::Eq:
    case Formula::Kind::Sigma:
      max_var_rec(f->t1, m, any);
      max_var_rec(f->t2, m, any);
      return;
    case Formula::Kind::Not:
      max_var_rec(f->f1, m, any);
      return;
    case Formula::Kind::And:
    case Formula::Kind::Or:
    case Formula::Kind::Implies:
    case Formula::Kind::Iff:
      max_var_rec(f->f1, m, any);
      max_var_rec(f->f2, m, any);
      return;
    case Formula::Kind::Forall:
    case Formula::Kind::Exists:
      m = std::max(m, f->var);
      any = true;
      max_var_rec(f->f1, m, any);
      return;
  }
}

}  // namespace

VarId fresh_above(const TermPtr& t) {
  VarId m = 0;
  bool any = false;
  max_var_rec(t, m, any);
  return any ? m + 1 : 0;
}

VarId fresh_above(const FormulaPtr& f) {
  VarId m = 0;
  bool any = false;
  max_var_rec(f, m, any);
  return any ? m + 1 : 0;
}

// ---------------------------------------------------------------------------
// Substitution.

namespace {

TermPtr subst_term(const TermPtr& t, const std::map<VarId, TermPtr>& s) {
  switch (t->kind) {
    case Term::Kind::Var: {
      auto it = s.find(t->var);
      return it == s.end() ? t : it->second;
    }
    case Term::Kind::Nu: {
      TermPtr a = subst_term(t->lhs, s);
      return a == t->lhs ? t : nu(a);
    }
    case Term::Kind::Add:
    case Term::Kind::Mul: {
      TermPtr a = subst_term(t->lhs, s);
      TermPtr b = subst_term(t->rhs, s);
      if (a == t->lhs && b == t->rhs) return t;
      return t->kind == Term::Kind::Add ? add(a, b) : mul(a, b);
    }
    default:
      return t;
  }
}

FormulaPtr subst_formula(const FormulaPtr& f, std::map<VarId, TermPtr> s, VarId& fresh) {
  // Drop entries whose variable does not occur free; keeps trees shared and
  // makes "var not free => result identical" hold node for node.
  std::set<VarId> fv = free_vars(f);
  for (auto it = s.begin(); it != s.end();) {
    if (!fv.count(it->first)) it = s.erase(it);
    else ++it;
  }
  if (s.empty()) return f;

  switch (f->kind) {
    case Formula::Kind::Less:
      return less(subst_term(f->t1, s), subst_term(f->t2, s));
    case Formula::Kind::Eq:
      return eq(subst_term(f->t1, s), subst_term(f->t2, s));
    case Formula::Kind::Sigma:
      return sigma_atom(subst_term(f->t1, s), subst_term(f->t2, s));
    case Formula::Kind::Not:
      return not_(subst_formula(f->f1, s, fresh));
    case Formula::Kind::And:
      return and_(subst_formula(f->f1, s, fresh), subst_formula(f->f2, s, fresh));
    case Formula::Kind::Or:
      return or_(subst_formula(f->f1, s, fresh), subst_formula(f->f2, s, fresh));
    case Formula::Kind::Implies:
      return implies(subst_formula(f->f1, s, fresh), subst_formula(f->f2, s, fresh));
    case Formula::Kind::Iff:
      return iff(subst_formula(f->f1, s, fresh), subst_formula(f->f2, s, fresh));
    case Formula::Kind::Forall:
    case Formula::Kind::Exists: {
      VarId v = f->var;
      s.erase(v);
      if (s.empty()) return f;
      bool would_capture = false;
      for (const auto& [w, t] : s)
        if (free_vars(t).count(v)) { would_capture = true; break; }
      FormulaPtr body = f->f1;
      if (would_capture) {
        VarId v2 = fresh++;
        std::map<VarId, TermPtr> ren{{v, var(v2)}};
        body = subst_formula(body, ren, fresh);
        v = v2;
      }
      body = subst_formula(body, s, fresh);
      return f->kind == Formula::Kind::Forall ? forall(v, body) : exists(v, body);
    }
  }
  throw Error("internal: unhandled formula kind");
}

}  // namespace

FormulaPtr substitute_parallel(const FormulaPtr& f, const std::map<VarId, TermPtr>& subst) {
  VarId fresh = fresh_above(f);
  for (const auto& [v, t] : subst) {
    fresh = std::max(fresh, fresh_above(t));
    fresh = std::max(fresh, v + 1);
  }
  std::map<VarId, TermPtr> s = subst;
  return subst_formula(f, std::move(s), fresh);
}

FormulaPtr substitute(const FormulaPtr& f, VarId v, const TermPtr& t) {
  if (!free_vars(t).empty())
    throw Error("substitute requires a closed term; got " + print(t));
  return substitute_parallel(f, {{v, t}});
}

// ---------------------------------------------------------------------------
// Structure queries.

namespace {

bool term_has(const TermPtr& t, Term::Kind k) {
  if (t->kind == k) return true;
  switch (t->kind) {
    case Term::Kind::Nu: return term_has(t->lhs, k);
    case Term::Kind::Add:
    case Term::Kind::Mul: return term_has(t->lhs, k) || term_has(t->rhs, k);
    default: return false;
  }
}

bool formula_has_term(const FormulaPtr& f, Term::Kind k) {
  switch (f->kind) {
    case Formula::Kind::Less:
    case Formula::Kind::Eq:
    case Formula::Kind::Sigma:
      return term_has(f->t1, k) || term_has(f->t2, k);
    case Formula::Kind::Not:
    case Formula::Kind::Forall:
    case Formula::Kind::Exists:
      return formula_has_term(f->f1, k);
    default:
      return formula_has_term(f->f1, k) || formula_has_term(f->f2, k);
  }
}

bool formula_has_kind(const FormulaPtr& f, Formula::Kind k) {
  if (f->kind == k) return true;
  switch (f->kind) {
    case Formula::Kind::Less:
    case Formula::Kind::Eq:
    case Formula::Kind::Sigma:
      return false;
    case Formula::Kind::Not:
    case Formula::Kind::Forall:
    case Formula::Kind::Exists:
      return formula_has_kind(f->f1, k);
    default:
      return formula_has_kind(f->f1, k) || formula_has_kind(f->f2, k);
  }
}

}  // namespace

bool contains_mul(const FormulaPtr& f) { return formula_has_term(f, Term::Kind::Mul); }
bool contains_nu(const FormulaPtr& f) { return formula_has_term(f, Term::Kind::Nu); }
bool contains_sigma(const FormulaPtr& f) { return formula_has_kind(f, Formula::Kind::Sigma); }

bool contains_quantifier(const FormulaPtr& f) {
  return formula_has_kind(f, Formula::Kind::Forall) ||
         formula_has_kind(f, Formula::Kind::Exists);
}

void check_language(const TermPtr& t, Language lang) {
  if (lang == Language::LStar && term_has(t, Term::Kind::Mul))
    throw LanguageError("'*' is not a symbol of L*");
  if (lang == Language::Arith && term_has(t, Term::Kind::Nu))
    throw LanguageError("'v' is not a symbol of the language of arithmetic");
}

void check_language(const FormulaPtr& f, Language lang) {
  if (contains_sigma(f))
    throw LanguageError("sigma atoms belong to neither object language");
  if (lang == Language::LStar && contains_mul(f))
    throw LanguageError("'*' is not a symbol of L*");
  if (lang == Language::Arith && contains_nu(f))
    throw LanguageError("'v' is not a symbol of the language of arithmetic");
}

// ---------------------------------------------------------------------------
// Linearization.

namespace {

struct Emitter {
  SymbolString out;
  std::size_t numeral_bound;

  void sym(SymKind k) { out.push_back({k, 0}); }
  void sym_var(VarId v) { out.push_back({SymKind::Var, v}); }

  void term(const TermPtr& t) {
    switch (t->kind) {
      case Term::Kind::Zero: sym(SymKind::Zero); return;
      case Term::Kind::One: sym(SymKind::One); return;
      case Term::Kind::Var: sym_var(t->var); return;
      case Term::Kind::Numeral: {
        // n-bar is the flat string 1+1+...+1 with n ones.
        const BigInt& n = t->value;
        if (2 * n - 1 > BigInt(numeral_bound))
          throw NumeralTooLargeError(
              "numeral expands to " + BigInt(2 * n - 1).str() +
              " symbols, over the bound of " + std::to_string(numeral_bound));
        std::size_t count = n.convert_to<std::size_t>();
        for (std::size_t i = 0; i < count; ++i) {
          if (i) sym(SymKind::Plus);
          sym(SymKind::One);
        }
        return;
      }
      case Term::Kind::Add:
      case Term::Kind::Mul:
        sym(SymKind::LParen);
        term(t->lhs);
        sym(t->kind == Term::Kind::Add ? SymKind::Plus : SymKind::Times);
        term(t->rhs);
        sym(SymKind::RParen);
        return;
      case Term::Kind::Nu:
        sym(SymKind::Nu);
        sym(SymKind::LParen);
        term(t->lhs);
        sym(SymKind::RParen);
        return;
    }
  }

  void formula(const FormulaPtr& f) {
    switch (f->kind) {
      case Formula::Kind::Less:
      case Formula::Kind::Eq:
        term(f->t1);
        sym(f->kind == Formula::Kind::Less ? SymKind::Less : SymKind::Eq);
        term(f->t2);
        return;
      case Formula::Kind::Sigma:
        throw UnknownSymbolError("sigma atoms have no symbol-string form");
      case Formula::Kind::Not:
        sym(SymKind::Not);
        formula(f->f1);
        return;
      case Formula::Kind::And:
      case Formula::Kind::Or:
      case Formula::Kind::Implies:
      case Formula::Kind::Iff: {
        sym(SymKind::LParen);
        formula(f->f1);
        switch (f->kind) {
          case Formula::Kind::And: sym(SymKind::And); break;
          case Formula::Kind::Or: sym(SymKind::Or); break;
          case Formula::Kind::Implies: sym(SymKind::Implies); break;
          default: sym(SymKind::Iff); break;
        }
        formula(f->f2);
        sym(SymKind::RParen);
        return;
      }
      case Formula::Kind::Forall:
      case Formula::Kind::Exists:
        sym(f->kind == Formula::Kind::Forall ? SymKind::Forall : SymKind::Exists);
        sym_var(f->var);
        sym(SymKind::LParen);
        formula(f->f1);
        sym(SymKind::RParen);
        return;
    }
  }
};

}  // namespace

SymbolString to_symbol_string(const TermPtr& t, std::size_t numeral_bound) {
  Emitter e{{}, numeral_bound};
  e.term(t);
  return std::move(e.out);
}

SymbolString to_symbol_string(const FormulaPtr& f, std::size_t numeral_bound) {
  Emitter e{{}, numeral_bound};
  e.formula(f);
  return std::move(e.out);
}

std::string symbol_text(const Symbol& s) {
  switch (s.kind) {
    case SymKind::Zero: return "0";
    case SymKind::One: return "1";
    case SymKind::Plus: return "+";
    case SymKind::Less: return "<";
    case SymKind::Eq: return "=";
    case SymKind::Nu: return "v";
    case SymKind::Times: return "*";
    case SymKind::Not: return "~";
    case SymKind::And: return "&";
    case SymKind::Or: return "|";
    case SymKind::Implies: return "->";
    case SymKind::Iff: return "<->";
    case SymKind::Forall: return "forall";
    case SymKind::Exists: return "exists";
    case SymKind::LParen: return "(";
    case SymKind::RParen: return ")";
    case SymKind::Comma: return ",";
    case SymKind::Var: return var_name(s.var);
  }
  return "?";
}

std::string render_symbols(const SymbolString& s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (!out.empty()) out += ' ';
    out += symbol_text(s[i]);
    bool quant_var = s[i].kind == SymKind::Var && i > 0 &&
                     (s[i - 1].kind == SymKind::Forall || s[i - 1].kind == SymKind::Exists);
    if (quant_var) out += " .";
    // "v" as a function symbol is always followed by "(" in well formed
    // strings, so rendering it like the keyword is unambiguous.
  }
  return out;
}

// ---------------------------------------------------------------------------
// Printing.

std::string var_name(VarId v) {
  switch (v) {
    case 0: return "x";
    case 1: return "y";
    case 2: return "z";
    case 3: return "w";
    case 4: return "u";
    default: return "x" + std::to_string(v);
  }
}

namespace {

// Term precedence: + is 0, * is 1, atoms are 2. Lower binds looser.
void print_term(std::string& out, const TermPtr& t, int level) {
  switch (t->kind) {
    case Term::Kind::Zero: out += "0"; return;
    case Term::Kind::One: out += "1"; return;
    case Term::Kind::Var: out += var_name(t->var); return;
    case Term::Kind::Numeral:
      out += "num(";
      out += t->value.str();
      out += ")";
      return;
    case Term::Kind::Nu:
      out += "v(";
      print_term(out, t->lhs, 0);
      out += ")";
      return;
    case Term::Kind::Add: {
      bool paren = level > 0;
      if (paren) out += "(";
      print_term(out, t->lhs, 0);
      out += " + ";
      print_term(out, t->rhs, 1);  // right-nested sums keep their parens
      if (paren) out += ")";
      return;
    }
    case Term::Kind::Mul: {
      bool paren = level > 1;
      if (paren) out += "(";
      print_term(out, t->lhs, 1);
      out += " * ";
      print_term(out, t->rhs, 2);
      if (paren) out += ")";
      return;
    }
  }
}

bool is_binary_connective(const FormulaPtr& f) {
  switch (f->kind) {
    case Formula::Kind::And:
    case Formula::Kind::Or:
    case Formula::Kind::Implies:
    case Formula::Kind::Iff:
      return true;
    default:
      return false;
  }
}

// Bounded-quantifier sugar: exists v < t. body and forall v < t. body.
struct BoundedView {
  TermPtr bound;
  FormulaPtr body;
};

std::optional<BoundedView> bounded_view(const FormulaPtr& f) {
  const bool ex = f->kind == Formula::Kind::Exists;
  const FormulaPtr& b = f->f1;
  if (ex && b->kind != Formula::Kind::And) return std::nullopt;
  if (!ex && b->kind != Formula::Kind::Implies) return std::nullopt;
  const FormulaPtr& guard = b->f1;
  if (guard->kind != Formula::Kind::Less) return std::nullopt;
  if (guard->t1->kind != Term::Kind::Var || guard->t1->var != f->var) return std::nullopt;
  if (free_vars(guard->t2).count(f->var)) return std::nullopt;
  return BoundedView{guard->t2, b->f2};
}

// Connective precedence: <-> 0, -> 1, | 2, & 3; ~ and atoms sit above.
// Quantifiers extend maximally to the right, so they print bare only at
// level 0 positions.
void print_formula(std::string& out, const FormulaPtr& f, int level) {
  switch (f->kind) {
    case Formula::Kind::Less:
    case Formula::Kind::Eq:
      print_term(out, f->t1, 0);
      out += f->kind == Formula::Kind::Less ? " < " : " = ";
      print_term(out, f->t2, 0);
      return;
    case Formula::Kind::Sigma:
      out += "sigma(";
      print_term(out, f->t1, 0);
      out += ", ";
      print_term(out, f->t2, 0);
      out += ")";
      return;
    case Formula::Kind::Not:
      out += "~(";
      print_formula(out, f->f1, 0);
      out += ")";
      return;
    case Formula::Kind::Iff:
    case Formula::Kind::Implies:
    case Formula::Kind::Or:
    case Formula::Kind::And: {
      int my;
      const char* op;
      switch (f->kind) {
        case Formula::Kind::Iff: my = 0; op = " <-> "; break;
        case Formula::Kind::Implies: my = 1; op = " -> "; break;
        case Formula::Kind::Or: my = 2; op = " | "; break;
        default: my = 3; op = " & "; break;
      }
      bool paren = level > my;
      if (paren) out += "(";
      print_formula(out, f->f1, my + 1);  // all binaries right-associative
      out += op;
      print_formula(out, f->f2, my);
      if (paren) out += ")";
      return;
    }
    case Formula::Kind::Forall:
    case Formula::Kind::Exists: {
      bool paren = level > 0;
      if (paren) out += "(";
      out += f->kind == Formula::Kind::Forall ? "forall " : "exists ";
      out += var_name(f->var);
      FormulaPtr body = f->f1;
      if (auto bv = bounded_view(f)) {
        out += " < ";
        print_term(out, bv->bound, 0);
        body = bv->body;
      }
      out += ". ";
      if (is_binary_connective(body)) {
        out += "(";
        print_formula(out, body, 0);
        out += ")";
      } else {
        print_formula(out, body, 0);
      }
      if (paren) out += ")";
      return;
    }
  }
}

}  // namespace

std::string print(const TermPtr& t) {
  std::string out;
  print_term(out, t, 0);
  return out;
}

std::string print(const FormulaPtr& f) {
  std::string out;
  print_formula(out, f, 0);
  return out;
}

// ---------------------------------------------------------------------------
// Parsing.

namespace {

enum class Tok {
  LParen, RParen, Dot, Plus, Star, Less, Eq, Tilde, Amp, Pipe, Arrow, Iff,
  Comma, Number, Ident, KwForall, KwExists, KwNu, KwNum, End
};

struct Token {
  Tok type;
  std::string text;
  std::size_t pos;
};

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  std::size_t i = 0;
  const std::size_t n = text.size();
  auto push = [&](Tok t, std::size_t start, std::size_t len) {
    out.push_back({t, std::string(text.substr(start, len)), start});
  };
  while (i < n) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) { ++i; continue; }
    switch (c) {
      case '(': push(Tok::LParen, i, 1); ++i; continue;
      case ')': push(Tok::RParen, i, 1); ++i; continue;
      case '.': push(Tok::Dot, i, 1); ++i; continue;
      case '+': push(Tok::Plus, i, 1); ++i; continue;
      case '*': push(Tok::Star, i, 1); ++i; continue;
      case '=': push(Tok::Eq, i, 1); ++i; continue;
      case '~': push(Tok::Tilde, i, 1); ++i; continue;
      case '&': push(Tok::Amp, i, 1); ++i; continue;
      case '|': push(Tok::Pipe, i, 1); ++i; continue;
      case ',': push(Tok::Comma, i, 1); ++i; continue;
      case '<':
        if (i + 2 < n && text[i + 1] == '-' && text[i + 2] == '>') {
          push(Tok::Iff, i, 3);
          i += 3;
        } else {
          push(Tok::Less, i, 1);
          ++i;
        }
        continue;
      case '-':
        if (i + 1 < n && text[i + 1] == '>') {
          push(Tok::Arrow, i, 2);
          i += 2;
          continue;
        }
        throw ParseError("unexpected '-'", i);
      default: break;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < n && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      push(Tok::Number, i, j - i);
      i = j;
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < n && (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_')) ++j;
      std::string_view w = text.substr(i, j - i);
      Tok t = Tok::Ident;
      if (w == "forall") t = Tok::KwForall;
      else if (w == "exists") t = Tok::KwExists;
      else if (w == "v") t = Tok::KwNu;
      else if (w == "num") t = Tok::KwNum;
      push(t, i, j - i);
      i = j;
      continue;
    }
    throw ParseError(std::string("unexpected character '") + c + "'", i);
  }
  out.push_back({Tok::End, "", n});
  return out;
}

bool canonical_var_name(const std::string& name, VarId& out) {
  if (name.size() < 2 || name[0] != 'x') return false;
  std::string_view digits(name);
  digits.remove_prefix(1);
  for (char c : digits)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  if (digits.size() > 1 && digits[0] == '0') return false;  // x03 is an ordinary name
  unsigned long long idx = 0;
  for (char c : digits) {
    idx = idx * 10 + static_cast<unsigned long long>(c - '0');
    if (idx > 0x7fffffffull) return false;
  }
  out = static_cast<VarId>(idx);
  return true;
}

// Maps each distinct surface name to a distinct index. Canonical names claim
// their own index first; x y z w u prefer 0..4; everything else takes the
// smallest unclaimed index in order of first occurrence.
std::map<std::string, VarId> scan_names(const std::vector<Token>& toks) {
  std::vector<std::string> order;
  std::set<std::string> seen;
  for (const Token& t : toks)
    if (t.type == Tok::Ident && seen.insert(t.text).second) order.push_back(t.text);

  std::map<std::string, VarId> assign;
  std::set<VarId> claimed;
  for (const std::string& name : order) {
    VarId idx;
    if (canonical_var_name(name, idx)) {
      assign[name] = idx;
      claimed.insert(idx);
    }
  }
  const std::map<std::string, VarId> preferred{
      {"x", 0}, {"y", 1}, {"z", 2}, {"w", 3}, {"u", 4}};
  auto smallest_free = [&claimed] {
    VarId v = 0;
    while (claimed.count(v)) ++v;
    return v;
  };
  for (const std::string& name : order) {
    if (assign.count(name)) continue;
    auto pref = preferred.find(name);
    VarId idx = (pref != preferred.end() && !claimed.count(pref->second))
                    ? pref->second
                    : smallest_free();
    assign[name] = idx;
    claimed.insert(idx);
  }
  return assign;
}

struct Parser {
  const std::vector<Token>& toks;
  const std::map<std::string, VarId>& names;
  std::size_t i = 0;

  const Token& peek() const { return toks[i]; }
  bool accept(Tok t) {
    if (toks[i].type == t) { ++i; return true; }
    return false;
  }
  void expect(Tok t, const char* what) {
    if (!accept(t)) throw ParseError(std::string("expected ") + what, toks[i].pos);
  }

  FormulaPtr formula() { return iff_level(); }

  FormulaPtr iff_level() {
    FormulaPtr a = implies_level();
    if (accept(Tok::Iff)) return iff(a, iff_level());
    return a;
  }

  FormulaPtr implies_level() {
    FormulaPtr a = or_level();
    if (accept(Tok::Arrow)) return implies(a, implies_level());
    return a;
  }

  FormulaPtr or_level() {
    FormulaPtr a = and_level();
    if (accept(Tok::Pipe)) return or_(a, or_level());
    return a;
  }

  FormulaPtr and_level() {
    FormulaPtr a = unary();
    if (accept(Tok::Amp)) return and_(a, and_level());
    return a;
  }

  FormulaPtr unary() {
    if (accept(Tok::Tilde)) return not_(unary());
    if (peek().type == Tok::KwForall || peek().type == Tok::KwExists) return quantifier();
    return atom_or_group();
  }

  FormulaPtr quantifier() {
    bool is_forall = peek().type == Tok::KwForall;
    ++i;
    if (peek().type != Tok::Ident)
      throw ParseError("expected a variable after the quantifier", peek().pos);
    VarId v = names.at(peek().text);
    ++i;
    TermPtr bound;
    if (accept(Tok::Less)) bound = term();
    expect(Tok::Dot, "'.' after the quantified variable");
    FormulaPtr body = iff_level();  // body extends maximally
    if (bound) {
      // Sugar: exists x < t. p is exists x. (x < t & p), and
      // forall x < t. p is forall x. (x < t -> p).
      if (is_forall) return forall(v, implies(less(var(v), bound), body));
      return exists(v, and_(less(var(v), bound), body));
    }
    return is_forall ? forall(v, body) : exists(v, body);
  }

  FormulaPtr atom_or_group() {
    std::size_t save = i;
    std::optional<ParseError> atom_err;
    try {
      TermPtr l = term();
      if (accept(Tok::Less)) return less(l, term());
      if (accept(Tok::Eq)) return eq(l, term());
      throw ParseError("expected '<' or '=' after a term", peek().pos);
    } catch (const ParseError& e) {
      atom_err = e;
      i = save;
    }
    try {
      expect(Tok::LParen, "a formula");
      FormulaPtr f = iff_level();
      expect(Tok::RParen, "')'");
      return f;
    } catch (const ParseError& e) {
      throw atom_err->pos >= e.pos ? *atom_err : e;
    }
  }

  TermPtr term() {
    TermPtr t = factor();
    while (accept(Tok::Plus)) t = add(t, factor());
    return t;
  }

  TermPtr factor() {
    TermPtr t = primary();
    while (accept(Tok::Star)) t = mul(t, primary());
    return t;
  }

  TermPtr primary() {
    const Token& t = peek();
    switch (t.type) {
      case Tok::Number:
        ++i;
        if (t.text == "0") return zero();
        if (t.text == "1") return one();
        throw ParseError("bare numerals other than 0 and 1 must be written num(...)", t.pos);
      case Tok::KwNum: {
        ++i;
        expect(Tok::LParen, "'(' after num");
        if (peek().type != Tok::Number) throw ParseError("expected digits in num(...)", peek().pos);
        BigInt value(peek().text);
        ++i;
        expect(Tok::RParen, "')'");
        return numeral(value);
      }
      case Tok::KwNu: {
        ++i;
        expect(Tok::LParen, "'(' after v");
        TermPtr arg = term();
        expect(Tok::RParen, "')'");
        return nu(arg);
      }
      case Tok::Ident:
        ++i;
        return var(names.at(t.text));
      case Tok::LParen: {
        ++i;
        TermPtr inner = term();
        expect(Tok::RParen, "')'");
        return inner;
      }
      default:
        throw ParseError("expected a term", t.pos);
    }
  }
};

}  // namespace

ParseResult parse(std::string_view text, Language lang) {
  std::vector<Token> toks = tokenize(text);
  std::map<std::string, VarId> names = scan_names(toks);

  std::optional<ParseError> formula_err;
  {
    Parser p{toks, names};
    try {
      FormulaPtr f = p.formula();
      p.expect(Tok::End, "end of input");
      check_language(f, lang);
      return {f, nullptr};
    } catch (const ParseError& e) {
      formula_err = e;
    }
  }
  Parser p{toks, names};
  try {
    TermPtr t = p.term();
    p.expect(Tok::End, "end of input");
    check_language(t, lang);
    return {nullptr, t};
  } catch (const ParseError& e) {
    throw formula_err->pos >= e.pos ? *formula_err : e;
  }
}

FormulaPtr parse_formula(std::string_view text, Language lang) {
  ParseResult r = parse(text, lang);
  if (!r.formula) throw ParseError("expected a formula, got a term", 0);
  return r.formula;
}

}  // namespace lwb::syntax
