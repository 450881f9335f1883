#include "lwb/godel.hpp"

#include <fstream>
#include <set>

#include "json.hpp"

namespace lwb::godel {

using syntax::SymKind;
using syntax::Symbol;
using syntax::SymbolString;

namespace {

std::map<SymKind, std::uint64_t> standard_fixed() {
  return {
      {SymKind::Not, 3},     {SymKind::Zero, 5},    {SymKind::One, 7},
      {SymKind::Plus, 9},    {SymKind::Less, 11},   {SymKind::Eq, 13},
      {SymKind::Nu, 15},     {SymKind::Times, 17},  {SymKind::And, 19},
      {SymKind::Or, 21},     {SymKind::Implies, 23},{SymKind::Iff, 25},
      {SymKind::Forall, 27}, {SymKind::Exists, 29}, {SymKind::LParen, 31},
      {SymKind::RParen, 33}, {SymKind::Comma, 35},
  };
}

const std::map<std::string, SymKind>& json_keys() {
  static const std::map<std::string, SymKind> keys{
      {"not", SymKind::Not},         {"zero", SymKind::Zero},
      {"one", SymKind::One},         {"plus", SymKind::Plus},
      {"less", SymKind::Less},       {"eq", SymKind::Eq},
      {"nu", SymKind::Nu},           {"times", SymKind::Times},
      {"and", SymKind::And},         {"or", SymKind::Or},
      {"implies", SymKind::Implies}, {"iff", SymKind::Iff},
      {"forall", SymKind::Forall},   {"exists", SymKind::Exists},
      {"lparen", SymKind::LParen},   {"rparen", SymKind::RParen},
      {"comma", SymKind::Comma},
  };
  return keys;
}

}  // namespace

SymbolTable::SymbolTable(std::map<SymKind, std::uint64_t> fixed,
                         std::uint64_t var_base, std::uint64_t var_stride)
    : fixed_(std::move(fixed)), var_base_(var_base), var_stride_(var_stride) {
  validate();
}

void SymbolTable::validate() const {
  if (fixed_.at(SymKind::Not) != 3)
    throw Error("symbol table must code '~' as 3");
  std::set<std::uint64_t> seen;
  for (const auto& [kind, code] : fixed_) {
    if (code % 2 == 0) throw Error("symbol codes must be odd");
    if (!seen.insert(code).second) throw Error("symbol codes must be distinct");
    if (code >= var_base_) throw Error("fixed symbol codes must stay below the variable range");
  }
  if (var_base_ % 2 == 0) throw Error("variable base code must be odd");
  if (var_stride_ == 0 || var_stride_ % 2 != 0)
    throw Error("variable stride must be a positive even number");
}

const SymbolTable& SymbolTable::standard() {
  static const SymbolTable table(standard_fixed(), 37, 2);
  return table;
}

SymbolTable SymbolTable::from_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open symbol table file: " + path);
  nlohmann::json j = nlohmann::json::parse(in);
  auto fixed = standard_fixed();
  std::uint64_t base = 37, stride = 2;
  for (const auto& [key, value] : j.items()) {
    if (key == "var_base") { base = value.get<std::uint64_t>(); continue; }
    if (key == "var_stride") { stride = value.get<std::uint64_t>(); continue; }
    auto it = json_keys().find(key);
    if (it == json_keys().end()) throw Error("unknown symbol table key: " + key);
    fixed[it->second] = value.get<std::uint64_t>();
  }
  return SymbolTable(std::move(fixed), base, stride);
}

std::uint64_t SymbolTable::code(const Symbol& s) const {
  if (s.kind == SymKind::Var) return var_base_ + var_stride_ * static_cast<std::uint64_t>(s.var);
  auto it = fixed_.find(s.kind);
  if (it == fixed_.end()) throw UnknownSymbolError("symbol has no code in the table");
  return it->second;
}

std::optional<Symbol> SymbolTable::symbol(std::uint64_t code) const {
  for (const auto& [kind, c] : fixed_)
    if (c == code) return Symbol{kind, 0};
  if (code >= var_base_ && (code - var_base_) % var_stride_ == 0) {
    std::uint64_t idx = (code - var_base_) / var_stride_;
    if (idx <= 0xffffffffull) return Symbol{SymKind::Var, static_cast<syntax::VarId>(idx)};
  }
  return std::nullopt;
}

BigInt encode(std::span<const Symbol> symbols, const SymbolTable& table) {
  if (symbols.empty()) return 1;  // decreed; the empty sum would give 0
  BigInt acc = 0;
  std::uint64_t exponent = 0;
  for (const Symbol& s : symbols) {
    exponent += table.code(s) + 1;
    if (exponent > (1ull << 26))
      throw Error("Ackermann code exceeds the supported size");
    acc += BigInt(1) << exponent;
  }
  return acc;
}

std::optional<SymbolString> decode(const BigInt& c, const SymbolTable& table) {
  if (c <= 0) return std::nullopt;  // 0 is not the code of anything
  if (c == 1) return SymbolString{};
  if (boost::multiprecision::bit_test(c, 0)) return std::nullopt;
  SymbolString out;
  BigInt x = c;
  std::uint64_t prev = 0;
  while (x != 0) {
    std::uint64_t e = boost::multiprecision::lsb(x);
    std::uint64_t gap = e - prev;
    if (gap < 1) return std::nullopt;
    auto sym = table.symbol(gap - 1);
    if (!sym) return std::nullopt;
    out.push_back(*sym);
    prev = e;
    boost::multiprecision::bit_unset(x, static_cast<unsigned>(e));
  }
  return out;
}

BigInt negation_code(const BigInt& c, const SymbolTable& table) {
  auto decoded = decode(c, table);
  if (!decoded)
    throw NotACodeError(c.str() + " is not the code of any string");
  if (decoded->empty())
    throw NotACodeError("negation_code is defined for codes of nonempty strings only");
  return 16 * (1 + c);
}

}  // namespace lwb::godel
