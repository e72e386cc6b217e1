#pragma once

#include <stdexcept>
#include <string>

namespace sublat {

// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed input text (cycle notation, spec files, recipe ids, bad parameters).
struct ParseError : Error {
  explicit ParseError(const std::string& what, int line = 0) : Error(what), line(line) {}
  int line;
};

// A configured size limit was hit (element cap or lattice budget).
struct BudgetError : Error {
  using Error::Error;
};

}  // namespace sublat
