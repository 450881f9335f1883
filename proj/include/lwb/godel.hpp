#pragma once

// The Ackermann (1937) coding of symbol strings: a string <a1,...,al> of
// odd symbol codes maps to sum over k of 2^((a1+1)+...+(ak+1)). 0 codes
// nothing, 1 codes the empty string; the coding is computable and injective
// but not surjective (4 is not a code).

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>

#include "lwb/bignum.hpp"
#include "lwb/errors.hpp"
#include "lwb/syntax.hpp"

namespace lwb::godel {

// Assignment of odd codes to symbols. The negation symbol is pinned to 3
// (the 16(1+c) negation-code identity depends on it); everything else is
// configurable as long as codes stay odd and pairwise distinct.
class SymbolTable {
 public:
  static const SymbolTable& standard();
  // JSON object with any of the keys "zero", "one", "plus", "less", "eq",
  // "nu", "times", "and", "or", "implies", "iff", "forall", "exists",
  // "lparen", "rparen", "comma", "var_base", "var_stride"; unspecified
  // entries keep their standard values. "not" may only be 3.
  static SymbolTable from_json_file(const std::string& path);

  std::uint64_t code(const syntax::Symbol& s) const;
  std::optional<syntax::Symbol> symbol(std::uint64_t code) const;

  std::uint64_t var_base() const { return var_base_; }
  std::uint64_t var_stride() const { return var_stride_; }

 private:
  SymbolTable(std::map<syntax::SymKind, std::uint64_t> fixed,
              std::uint64_t var_base, std::uint64_t var_stride);
  void validate() const;

  std::map<syntax::SymKind, std::uint64_t> fixed_;
  std::uint64_t var_base_;
  std::uint64_t var_stride_;
};

// Exact value of the coding sum; empty string maps to 1.
BigInt encode(std::span<const syntax::Symbol> symbols,
              const SymbolTable& table = SymbolTable::standard());

// Left inverse of encode; nullopt exactly when c is not in encode's range.
std::optional<syntax::SymbolString> decode(
    const BigInt& c, const SymbolTable& table = SymbolTable::standard());

// 16*(1+c), the code of the negated string. Requires c to code a nonempty
// string (the identity genuinely fails on the empty string, whose code is
// decreed to be 1 rather than given by the sum).
BigInt negation_code(const BigInt& c,
                     const SymbolTable& table = SymbolTable::standard());

}  // namespace lwb::godel
