#pragma once

#include <stdexcept>
#include <string>

namespace htsim {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DimensionMismatch : Error {
  using Error::Error;
};
struct DimensionTooLarge : Error {
  using Error::Error;
};
struct CutoffTooSmall : Error {
  using Error::Error;
};
struct EmptySupport : Error {
  using Error::Error;
};
struct SymmetryViolation : Error {
  using Error::Error;
};
struct QubitOutOfRange : Error {
  using Error::Error;
};
struct DimensionNotPadded : Error {
  using Error::Error;
};
struct InsufficientPoints : Error {
  using Error::Error;
};
struct BudgetExceeded : Error {
  using Error::Error;
};
struct IoError : Error {
  using Error::Error;
};

// Config problems carry a JSON-pointer-ish location so the CLI can print
// line-precise messages.
struct ConfigError : Error {
  ConfigError(const std::string& where, const std::string& what)
      : Error(where.empty() ? what : where + ": " + what), location(where) {}
  std::string location;
};

}  // namespace htsim
