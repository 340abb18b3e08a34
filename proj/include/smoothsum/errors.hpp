#pragma once

#include <stdexcept>
#include <string>

namespace smoothsum {

// Error codes used across the library. Each maps to one failure mode of a
// documented operation contract.
enum class Err {
  EvenModulus,
  Overflow,
  NotAUnit,
  NotCoprime,
  SyntaxError,
  ZeroDenominator,
  BadReduction,
  ZeroFunction,
  ZeroModP,
  NotCoprimeSplit,
  RangeError,
  HypothesisViolation,
  DegenerateBoth,
  NotSmooth,
  SharedFactorWithM,
  PrincipalCharacter,
  DegreeTooSmall,
  UndefinedAt,
};

const char* err_name(Err e);

class Error : public std::runtime_error {
 public:
  Error(Err code, const std::string& what)
      : std::runtime_error(std::string(err_name(code)) + ": " + what),
        code_(code) {}
  Err code() const { return code_; }

 private:
  Err code_;
};

[[noreturn]] inline void fail(Err code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace smoothsum
