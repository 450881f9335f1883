#pragma once

// The counterexample framework: the truth-parity coding over the Ackermann
// coding, the Q- axiom-instance builders, and the four designated formulas.
//
// The coding |eta| is 2*<eta> when eta is a true L* sentence of the standard
// v* structure and 1+2*<eta> otherwise, where <.> is the Ackermann code of
// eta's symbol string. The parity of a sentence's code therefore encodes its
// truth, and v* computes negation codes: v*(|sigma|) = |~sigma| for
// sentences, v*(|eta|)+1 = |~eta| for non-sentences.

#include <map>
#include <mutex>
#include <vector>

#include "lwb/bignum.hpp"
#include "lwb/godel.hpp"
#include "lwb/presburger.hpp"
#include "lwb/syntax.hpp"

namespace lwb::framework {

using lwb::nu_star;

class StarCoding {
 public:
  StarCoding() : table_(godel::SymbolTable::standard()) {}
  explicit StarCoding(godel::SymbolTable table) : table_(std::move(table)) {}

  const godel::SymbolTable& table() const { return table_; }

  // |eta| for a formula. Closed formulas must be L* (the * fragment has no
  // truth verdict here); open formulas always take the odd branch.
  BigInt star_code(const syntax::FormulaPtr& eta) const;

  // |eta| for a raw symbol string. The string is a sentence exactly when it
  // is the linearization of a closed L* formula; anything else takes the
  // odd branch.
  BigInt star_code(const syntax::SymbolString& eta) const;

  // The closed term |eta|-bar. Sentences only.
  syntax::TermPtr star_numeral(const syntax::FormulaPtr& eta) const;

  // Checks the negation-mapping law for eta: v*(|eta|) = |~eta| when eta is
  // a sentence, v*(|eta|)+1 = |~eta| otherwise.
  bool check_negation_mapping(const syntax::FormulaPtr& eta) const;

 private:
  // Truth verdicts are memoized per Ackermann code; the cache is invisible
  // apart from speed and safe under concurrent readers.
  bool sentence_truth(const syntax::FormulaPtr& sentence, const BigInt& code) const;

  godel::SymbolTable table_;
  mutable std::mutex mu_;
  mutable std::map<BigInt, bool> truth_memo_;
};

enum class AxiomTag { A1, A2, A3 };

struct QMinusInstance {
  AxiomTag tag;
  BigInt n;                       // A1/A2 parameter
  syntax::FormulaPtr sentence;    // A3 parameter
  syntax::FormulaPtr formula;     // the instance; true in the v* structure
};

// A1: forall x. (x < n-bar | x = n-bar | n-bar < x)
QMinusInstance axiom_instance_a1(const BigInt& n);

// A2: forall x. (x < n-bar <-> (x = 0-bar | ... | x = (n-1)-bar)); the empty
// disjunction at n = 0 is the canonical falsum ~(0 = 0).
QMinusInstance axiom_instance_a2(const BigInt& n);

// A3: v(|sigma|-bar) = |~sigma|-bar
QMinusInstance axiom_instance_a3(const syntax::FormulaPtr& sigma, const StarCoding& coding);

struct DesignatedFormulas {
  syntax::FormulaPtr psi;      // exists y. x = y + y
  syntax::FormulaPtr upsilon;  // same formula
  syntax::FormulaPtr lambda;   // ~ psi
  syntax::FormulaPtr theta;    // psi(y) & x = x
};

DesignatedFormulas designated_formulas();

}  // namespace lwb::framework
