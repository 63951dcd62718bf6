#ifndef FGLAB_ERROR_HPP
#define FGLAB_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace fglab {

enum class Errc {
  DuplicateGenerator,
  NotPrime,
  EmptyName,
  UnknownGenerator,
  NotInRing,
  RingMismatch,
  ArityMismatch,
  NonInvertibleLeadingTerm,
  NonzeroConstantTerm,
  NonInvertibleLinearCoefficient,
  DivisionByZero,
  InvalidArgument,
  DegreeTooSmall,
  NotAnFgl,
  NotStrict,
  NotPLocalRing,
  CartierIntegralityFailure,
  IdempotencyFailure,
  NotSymmetric,
  NonUnitConstantTerm,
  RankTooLarge,
  StabilityFailure,
  ParseError,
};

std::string_view to_string(Errc code);

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace fglab

#endif  // FGLAB_ERROR_HPP
