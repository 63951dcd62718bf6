#include "fglab/error.hpp"

namespace fglab {

std::string_view to_string(Errc code) {
  switch (code) {
    case Errc::DuplicateGenerator: return "DuplicateGenerator";
    case Errc::NotPrime: return "NotPrime";
    case Errc::EmptyName: return "EmptyName";
    case Errc::UnknownGenerator: return "UnknownGenerator";
    case Errc::NotInRing: return "NotInRing";
    case Errc::RingMismatch: return "RingMismatch";
    case Errc::ArityMismatch: return "ArityMismatch";
    case Errc::NonInvertibleLeadingTerm: return "NonInvertibleLeadingTerm";
    case Errc::NonzeroConstantTerm: return "NonzeroConstantTerm";
    case Errc::NonInvertibleLinearCoefficient: return "NonInvertibleLinearCoefficient";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::DegreeTooSmall: return "DegreeTooSmall";
    case Errc::NotAnFgl: return "NotAnFgl";
    case Errc::NotStrict: return "NotStrict";
    case Errc::NotPLocalRing: return "NotPLocalRing";
    case Errc::CartierIntegralityFailure: return "CartierIntegralityFailure";
    case Errc::IdempotencyFailure: return "IdempotencyFailure";
    case Errc::NotSymmetric: return "NotSymmetric";
    case Errc::NonUnitConstantTerm: return "NonUnitConstantTerm";
    case Errc::RankTooLarge: return "RankTooLarge";
    case Errc::StabilityFailure: return "StabilityFailure";
    case Errc::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace fglab
