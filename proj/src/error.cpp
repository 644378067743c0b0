#include "optemb/error.hpp"

namespace optemb {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::NotPrime: return "NotPrime";
    case Errc::ReducibleModulus: return "ReducibleModulus";
    case Errc::InvalidRing: return "InvalidRing";
    case Errc::SpecMismatch: return "SpecMismatch";
    case Errc::NotAUnit: return "NotAUnit";
    case Errc::NotSimpleRoot: return "NotSimpleRoot";
    case Errc::SingularAtPrecision: return "SingularAtPrecision";
    case Errc::TooManyGenerators: return "TooManyGenerators";
    case Errc::InvalidParameters: return "InvalidParameters";
    case Errc::PrecisionTooLow: return "PrecisionTooLow";
    case Errc::NotAnOrder: return "NotAnOrder";
    case Errc::NotAHomomorphism: return "NotAHomomorphism";
    case Errc::NotOptimal: return "NotOptimal";
    case Errc::NoWitnessExpected: return "NoWitnessExpected";
    case Errc::ParameterOutOfRange: return "ParameterOutOfRange";
    case Errc::InconsistentContext: return "InconsistentContext";
    case Errc::HypothesisViolated: return "HypothesisViolated";
    case Errc::UnknownPrime: return "UnknownPrime";
    case Errc::NotIntegralAtPrime: return "NotIntegralAtPrime";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::ParseError: return "ParseError";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& message)
    : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

}  // namespace optemb
