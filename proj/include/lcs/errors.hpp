#pragma once

#include <stdexcept>
#include <string>

namespace lcs {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DimensionError : Error {
  using Error::Error;
};

// Thrown by make_algebra when the Jacobi identity fails; carries the
// offending basis triple so callers can report it.
struct JacobiViolation : Error {
  int i, j, k;
  JacobiViolation(int i_, int j_, int k_, const std::string& residual)
      : Error("Jacobi identity fails on (e" + std::to_string(i_) + ", e" +
              std::to_string(j_) + ", e" + std::to_string(k_) +
              "), residual " + residual),
        i(i_), j(j_), k(k_) {}
};

struct NotClosedTwist : Error {
  using Error::Error;
};

struct NotNilpotent : Error {
  using Error::Error;
};

struct NotCocycle : Error {
  using Error::Error;
};

struct NotDerivation : Error {
  using Error::Error;
};

struct NotSymplecticDerivation : Error {
  using Error::Error;
};

struct NotContactDerivation : Error {
  using Error::Error;
};

struct NotAlmostComplex : Error {
  using Error::Error;
};

struct NotLcs : Error {
  using Error::Error;
};

struct ParseError : Error {
  std::size_t position;
  std::string expected;
  ParseError(std::size_t pos, const std::string& what_expected)
      : Error("parse error at position " + std::to_string(pos) +
              ": expected " + what_expected),
        position(pos), expected(what_expected) {}
};

}  // namespace lcs
