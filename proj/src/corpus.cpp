#include "lwb/corpus.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace lwb::corpus {

using namespace lwb::syntax;

std::uint64_t Generator::pick(std::uint64_t n) { return rng_() % n; }

TermPtr Generator::term(int depth, const std::vector<VarId>& scope, bool allow_nu) {
  std::uint64_t r = pick(100);
  if (depth > 0 && r < 35) {
    if (allow_nu && r < 10) return nu(term(depth - 1, scope, allow_nu));
    return add(term(depth - 1, scope, allow_nu), term(depth - 1, scope, allow_nu));
  }
  if (!scope.empty() && r < 70) return var(scope[pick(scope.size())]);
  switch (pick(4)) {
    case 0: return zero();
    case 1: return one();
    default: return numeral(BigInt(2 + pick(7)));  // 2..8
  }
}

FormulaPtr Generator::formula(int depth, int qbudget, std::vector<VarId> scope,
                              bool allow_nu) {
  std::uint64_t r = pick(100);
  if (depth == 0) r = 0;  // leaf: atom
  if (r < 35) {
    TermPtr a = term(2, scope, allow_nu);
    TermPtr b = term(2, scope, allow_nu);
    return pick(2) ? eq(a, b) : less(a, b);
  }
  if (r < 47) return not_(formula(depth - 1, qbudget, scope, allow_nu));
  if (r < 75 || qbudget == 0) {
    FormulaPtr a = formula(depth - 1, qbudget, scope, allow_nu);
    FormulaPtr b = formula(depth - 1, qbudget, scope, allow_nu);
    switch (pick(4)) {
      case 0: return and_(a, b);
      case 1: return or_(a, b);
      case 2: return implies(a, b);
      default: return iff(a, b);
    }
  }
  VarId v = 0;
  while (std::find(scope.begin(), scope.end(), v) != scope.end()) ++v;
  scope.push_back(v);
  FormulaPtr body = formula(depth - 1, qbudget - 1, scope, allow_nu);
  return pick(2) ? forall(v, body) : exists(v, body);
}

FormulaPtr Generator::sentence(bool allow_nu) {
  // Closed by construction: atoms only use in-scope variables.
  return formula(3, 2, {}, allow_nu);
}

FormulaPtr Generator::nonsentence(bool allow_nu) {
  for (;;) {
    std::vector<VarId> scope{0};
    if (pick(3) == 0) scope.push_back(1);
    FormulaPtr f = formula(2, 1, scope, allow_nu);
    if (!free_vars(f).empty()) return f;
  }
}

FormulaPtr Generator::bounded_sentence(bool allow_nu) {
  std::vector<VarId> scope;
  int quantifiers = 1 + static_cast<int>(pick(2));
  struct Binder {
    VarId v;
    TermPtr bound;
    bool universal;
  };
  std::vector<Binder> binders;
  for (int i = 0; i < quantifiers; ++i) {
    VarId v = static_cast<VarId>(i);
    binders.push_back({v, numeral(BigInt(2 + pick(7))), pick(2) == 0});
    scope.push_back(v);
  }
  FormulaPtr f = formula(2, 0, scope, allow_nu);
  for (auto it = binders.rbegin(); it != binders.rend(); ++it) {
    if (it->universal)
      f = forall(it->v, implies(less(var(it->v), it->bound), f));
    else
      f = exists(it->v, and_(less(var(it->v), it->bound), f));
  }
  return f;
}

FormulaPtr Generator::unary_formula() {
  for (;;) {
    FormulaPtr f = formula(2, 1, {0}, false);
    auto fv = free_vars(f);
    if (fv.size() == 1 && fv.count(0)) return f;
  }
}

FormulaPtr Generator::binary_formula() {
  FormulaPtr f = formula(2, 1, {0, 1}, false);
  return f;  // free variables are a subset of {x, y} by construction
}

SymbolString Generator::symbol_string(std::size_t min_len, std::size_t max_len) {
  static const SymKind fixed[] = {
      SymKind::Zero, SymKind::One, SymKind::Plus, SymKind::Less, SymKind::Eq,
      SymKind::Nu, SymKind::Times, SymKind::Not, SymKind::And, SymKind::Or,
      SymKind::Implies, SymKind::Iff, SymKind::Forall, SymKind::Exists,
      SymKind::LParen, SymKind::RParen, SymKind::Comma};
  std::size_t len = min_len + pick(max_len - min_len + 1);
  SymbolString out;
  out.reserve(len);
  for (std::size_t i = 0; i < len; ++i) {
    std::uint64_t r = pick(20);
    if (r < 17) out.push_back({fixed[r], 0});
    else out.push_back({SymKind::Var, static_cast<VarId>(pick(10))});
  }
  return out;
}

namespace {

std::vector<FormulaPtr> parse_all(const std::vector<std::string>& texts) {
  std::vector<FormulaPtr> out;
  for (const std::string& t : texts) out.push_back(parse_formula(t, Language::LStar));
  return out;
}

}  // namespace

std::vector<FormulaPtr> sentence_corpus(std::uint64_t seed, std::size_t size) {
  std::vector<FormulaPtr> out = parse_all({
      "0 = 0",
      "~(0 = 0)",
      "v(0) = num(33)",
      "v(1) = num(32)",
      "v(v(0)) = num(544)",
      "forall x. x < x + 1",
      "exists y. 1 = y + y",
      "forall x. exists y. (x = y + y | x = y + y + 1)",
      "forall x. (x < num(3) -> x < num(8))",
      "exists x. (x = num(7) & v(x) < num(200))",
  });
  std::set<std::string> seen;
  for (const FormulaPtr& f : out) seen.insert(print(f));
  if (out.size() > size) out.resize(size);
  Generator gen(seed);
  while (out.size() < size) {
    FormulaPtr f = gen.sentence(true);
    if (seen.insert(print(f)).second) out.push_back(f);
  }
  return out;
}

std::vector<FormulaPtr> nonsentence_corpus(std::uint64_t seed, std::size_t size) {
  std::vector<FormulaPtr> out = parse_all({"x = 0", "x = y + y", "v(x) < num(40)"});
  std::set<std::string> seen;
  for (const FormulaPtr& f : out) seen.insert(print(f));
  if (out.size() > size) out.resize(size);
  Generator gen(seed ^ 0x9e3779b97f4a7c15ull);
  while (out.size() < size) {
    FormulaPtr f = gen.nonsentence(true);
    if (seen.insert(print(f)).second) out.push_back(f);
  }
  return out;
}

}  // namespace lwb::corpus
