#pragma once

// First-order terms and formulas over the two object languages of the
// workbench: L* = {0, 1, <, +, v} and the language of arithmetic
// {0, 1, <, +, *}. Numerals n-bar (the closed term 1+...+1 with n ones) are
// kept compact as a dedicated Numeral node so that terms denoting numbers
// near 2^2000 stay constant-size; only symbol-string expansion materializes
// them, behind a bound.
//
// All values are immutable after construction and every operation here is
// pure, so trees may be shared freely between threads.

#include <cstdint>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "lwb/bignum.hpp"
#include "lwb/errors.hpp"

namespace lwb::syntax {

enum class Language { LStar, Arith };

using VarId = std::uint32_t;

struct Term;
using TermPtr = std::shared_ptr<const Term>;

struct Term {
  enum class Kind { Zero, One, Var, Add, Mul, Nu, Numeral };
  Kind kind;
  VarId var = 0;     // Var
  BigInt value;      // Numeral; always >= 2 (0-bar and 1-bar are Zero/One)
  TermPtr lhs, rhs;  // Add/Mul; Nu keeps its argument in lhs
};

TermPtr zero();
TermPtr one();
TermPtr var(VarId v);
// n-bar. Returns Zero for 0, One for 1 and a Numeral node otherwise.
TermPtr numeral(const BigInt& n);
// Sums of pure numerals collapse back into a numeral (1+1 and 2-bar are the
// same closed term, and must produce the same symbol string).
TermPtr add(TermPtr l, TermPtr r);
TermPtr mul(TermPtr l, TermPtr r);
TermPtr nu(TermPtr t);

struct Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

struct Formula {
  enum class Kind { Less, Eq, Sigma, Not, And, Or, Implies, Iff, Forall, Exists };
  Kind kind;
  TermPtr t1, t2;     // atoms
  FormulaPtr f1, f2;  // connectives; Not and quantifiers use f1
  VarId var = 0;      // quantifiers
};

FormulaPtr less(TermPtr l, TermPtr r);
FormulaPtr eq(TermPtr l, TermPtr r);
// Oracle atom used by the diagonal construction; not part of either object
// language and rejected by the decision procedure and the symbol coding.
FormulaPtr sigma_atom(TermPtr code, TermPtr value);
FormulaPtr not_(FormulaPtr f);
FormulaPtr and_(FormulaPtr a, FormulaPtr b);
FormulaPtr or_(FormulaPtr a, FormulaPtr b);
FormulaPtr implies(FormulaPtr a, FormulaPtr b);
FormulaPtr iff(FormulaPtr a, FormulaPtr b);
FormulaPtr forall(VarId v, FormulaPtr body);
FormulaPtr exists(VarId v, FormulaPtr body);

bool equal(const TermPtr& a, const TermPtr& b);
bool equal(const FormulaPtr& a, const FormulaPtr& b);

std::set<VarId> free_vars(const TermPtr& t);
std::set<VarId> free_vars(const FormulaPtr& f);
bool is_sentence(const FormulaPtr& f);

// Smallest variable id strictly above every id occurring in the tree,
// bound or free. 0 when no variable occurs at all.
VarId fresh_above(const TermPtr& t);
VarId fresh_above(const FormulaPtr& f);

// Appends exactly one negation, never simplifying (~~s stays ~~s; the
// codings must tell the two apart).
FormulaPtr negate(const FormulaPtr& s);

// Substitution of a closed term for a free variable. Throws Error if t is
// open; with closed t no capture is possible.
FormulaPtr substitute(const FormulaPtr& f, VarId v, const TermPtr& t);

// Simultaneous substitution of (possibly open) terms, renaming binders that
// would capture. Freshly introduced binder ids are allocated deterministically
// above everything in sight.
FormulaPtr substitute_parallel(const FormulaPtr& f,
                               const std::map<VarId, TermPtr>& subst);

bool contains_mul(const FormulaPtr& f);
bool contains_nu(const FormulaPtr& f);
bool contains_sigma(const FormulaPtr& f);
bool contains_quantifier(const FormulaPtr& f);

// Throws LanguageError if the tree uses a symbol outside lang.
void check_language(const FormulaPtr& f, Language lang);
void check_language(const TermPtr& t, Language lang);

// ---------------------------------------------------------------------------
// Linearization: the symbol strings consumed by the Ackermann coding.

enum class SymKind : std::uint8_t {
  Zero, One, Plus, Less, Eq, Nu, Times, Not, And, Or, Implies, Iff,
  Forall, Exists, LParen, RParen, Comma, Var
};

struct Symbol {
  SymKind kind;
  VarId var = 0;  // only meaningful for Var
  auto operator<=>(const Symbol&) const = default;
};

using SymbolString = std::vector<Symbol>;

// A single numeral may expand to at most this many symbols by default
// (n-bar has 2n-1 symbols), so codes like those of star-coded sentences are
// rejected rather than materialized.
constexpr std::size_t kNumeralExpansionBound = 10000;

SymbolString to_symbol_string(const TermPtr& t,
                              std::size_t numeral_bound = kNumeralExpansionBound);
SymbolString to_symbol_string(const FormulaPtr& f,
                              std::size_t numeral_bound = kNumeralExpansionBound);

// Surface glyph of one symbol ("~", "0", "forall", "x3", ...).
std::string symbol_text(const Symbol& s);
// Space-joined surface rendering of a symbol string, with the "." a
// quantifier needs in the concrete grammar inserted after its variable.
// parse() of this text recovers the formula whenever the string is the
// linearization of one.
std::string render_symbols(const SymbolString& s);

// ---------------------------------------------------------------------------
// Concrete syntax.

std::string var_name(VarId v);

struct ParseResult {
  FormulaPtr formula;  // exactly one of the two is set
  TermPtr term;
};

// Parses a formula or a closed/open term in the given language.
// Surface variable names map to indices: canonical names x0, x1, ... map to
// their own index, the letters x y z w u prefer 0..4, anything else takes the
// smallest free index in order of first occurrence.
ParseResult parse(std::string_view text, Language lang);

// Same, but the text must denote a formula.
FormulaPtr parse_formula(std::string_view text, Language lang);

std::string print(const TermPtr& t);
std::string print(const FormulaPtr& f);

}  // namespace lwb::syntax
