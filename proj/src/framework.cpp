#include "lwb/framework.hpp"

namespace lwb::framework {

using namespace lwb::syntax;
using presburger::decide;
using presburger::truth;

bool StarCoding::sentence_truth(const FormulaPtr& sentence, const BigInt& code) const {
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = truth_memo_.find(code);
    if (it != truth_memo_.end()) return it->second;
  }
  bool t = truth(decide(sentence));
  std::lock_guard<std::mutex> lock(mu_);
  truth_memo_.emplace(code, t);
  return t;
}

BigInt StarCoding::star_code(const FormulaPtr& eta) const {
  BigInt code = godel::encode(to_symbol_string(eta), table_);
  if (!is_sentence(eta)) return 1 + 2 * code;
  check_language(eta, Language::LStar);  // closed formulas must be decidable
  return sentence_truth(eta, code) ? 2 * code : 1 + 2 * code;
}

BigInt StarCoding::star_code(const SymbolString& eta) const {
  BigInt code = godel::encode(eta, table_);
  // The string is a sentence iff it linearizes a closed L* formula; parsing
  // its rendering back and comparing symbol strings decides that exactly.
  try {
    ParseResult parsed = parse(render_symbols(eta), Language::LStar);
    if (parsed.formula && is_sentence(parsed.formula) &&
        to_symbol_string(parsed.formula) == eta)
      return sentence_truth(parsed.formula, code) ? 2 * code : 1 + 2 * code;
  } catch (const ParseError&) {
  } catch (const LanguageError&) {
  }
  return 1 + 2 * code;
}

TermPtr StarCoding::star_numeral(const FormulaPtr& eta) const {
  if (!is_sentence(eta))
    throw NotASentenceError("star numerals are built for sentences only");
  return numeral(star_code(eta));
}

bool StarCoding::check_negation_mapping(const FormulaPtr& eta) const {
  BigInt lhs = nu_star(star_code(eta));
  BigInt rhs = star_code(negate(eta));
  return is_sentence(eta) ? lhs == rhs : lhs + 1 == rhs;
}

namespace {

std::size_t small_index(const BigInt& n) {
  if (n < 0 || n > 1000000)
    throw Error("axiom parameter out of the supported range: " + n.str());
  return n.convert_to<std::size_t>();
}

FormulaPtr falsum() { return not_(eq(zero(), zero())); }

}  // namespace

QMinusInstance axiom_instance_a1(const BigInt& n) {
  TermPtr nbar = numeral(n);
  TermPtr x = var(0);
  FormulaPtr body = or_(less(x, nbar), or_(eq(x, nbar), less(nbar, x)));
  return {AxiomTag::A1, n, nullptr, forall(0, body)};
}

QMinusInstance axiom_instance_a2(const BigInt& n) {
  std::size_t count = small_index(n);
  TermPtr x = var(0);
  FormulaPtr disjunction;
  if (count == 0) {
    disjunction = falsum();
  } else {
    disjunction = eq(x, numeral(BigInt(count - 1)));
    for (std::size_t i = count - 1; i-- > 0;)
      disjunction = or_(eq(x, numeral(BigInt(i))), disjunction);
  }
  FormulaPtr body = iff(less(x, numeral(n)), disjunction);
  return {AxiomTag::A2, n, nullptr, forall(0, body)};
}

QMinusInstance axiom_instance_a3(const FormulaPtr& sigma, const StarCoding& coding) {
  FormulaPtr instance =
      eq(nu(coding.star_numeral(sigma)), coding.star_numeral(negate(sigma)));
  return {AxiomTag::A3, 0, sigma, instance};
}

DesignatedFormulas designated_formulas() {
  // psi(x) = upsilon(x) = exists y. x = y + y; lambda = ~psi;
  // theta(x, y) = psi(y) & x = x, spelled exists z. y = z + z to keep the
  // substituted variable free.
  FormulaPtr psi = exists(1, eq(var(0), add(var(1), var(1))));
  FormulaPtr lambda = not_(psi);
  FormulaPtr theta = and_(exists(2, eq(var(1), add(var(2), var(2)))), eq(var(0), var(0)));
  return {psi, psi, lambda, theta};
}

}  // namespace lwb::framework
