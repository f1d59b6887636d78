#pragma once

#include <stdexcept>
#include <string>

namespace pn {

enum class Err {
  CompositeP,
  DegreeTooLarge,
  DivisionByZero,
  MixedContext,
  KNotCoprimeToP,
  ZeroElement,
  NotDivisible,
  DivisionByZeroPoly,
  ZeroPolynomial,
  NotHomogeneous,
  PolyDegreeCap,
  MNotNormalized,
  MTooSmall,
  ExtensionNotMultipleOfL,
  CapExceeded,
  NotSingular,
  UnclassifiedPoint,
  TableViolation,
  WrongRegime,
  SearchSpaceTooLarge,
  IncompleteFactorization,
  InvalidArgument,
};

const char* err_name(Err e);

/// Single exception type for the whole library; the code tells callers
/// (and the CLI exit-code mapping) what went wrong.
class Error : public std::runtime_error {
 public:
  Error(Err code, const std::string& msg)
      : std::runtime_error(std::string(err_name(code)) + ": " + msg), code_(code) {}
  Err code() const { return code_; }

 private:
  Err code_;
};

[[noreturn]] inline void fail(Err code, const std::string& msg) { throw Error(code, msg); }

}  // namespace pn
