#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lwb {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Syntax error with a byte position into the source text.
struct ParseError : Error {
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " (at position " + std::to_string(position) + ")"),
        pos(position) {}
  std::size_t pos;
};

// A symbol outside the requested language appeared (e.g. * in L*).
struct LanguageError : Error {
  using Error::Error;
};

// A compact numeral would expand past the configured symbol-string bound.
struct NumeralTooLargeError : Error {
  using Error::Error;
};

// Symbol has no entry in the symbol table.
struct UnknownSymbolError : Error {
  using Error::Error;
};

// Number is not in the range of the Ackermann coding.
struct NotACodeError : Error {
  using Error::Error;
};

struct NotASentenceError : Error {
  using Error::Error;
};

// Formula falls outside the decidable fragment (contains * or sigma atoms).
struct NonPresburgerError : Error {
  using Error::Error;
};

// A formula transformer received an input with the wrong free variables.
struct ArityError : Error {
  using Error::Error;
};

struct AtomLimitError : Error {
  using Error::Error;
};

// No built-in evaluator covers the given lambda formula and none was supplied.
struct EvaluatorMissingError : Error {
  using Error::Error;
};

// Bad command line or bad user input to the CLI.
struct UsageError : Error {
  using Error::Error;
};

}  // namespace lwb
