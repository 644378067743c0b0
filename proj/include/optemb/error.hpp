#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace optemb {

enum class Errc {
  NotPrime,
  ReducibleModulus,
  InvalidRing,
  SpecMismatch,
  NotAUnit,
  NotSimpleRoot,
  SingularAtPrecision,
  TooManyGenerators,
  InvalidParameters,
  PrecisionTooLow,
  NotAnOrder,
  NotAHomomorphism,
  NotOptimal,
  NoWitnessExpected,
  ParameterOutOfRange,
  InconsistentContext,
  HypothesisViolated,
  UnknownPrime,
  NotIntegralAtPrime,
  DivisionByZero,
  ParseError,
};

std::string_view errc_name(Errc code) noexcept;

/// Every failure raised by the library carries one of the codes above; the
/// CLI maps them onto exit codes.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message);

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace optemb
