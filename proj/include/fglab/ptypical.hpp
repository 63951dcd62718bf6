#ifndef FGLAB_PTYPICAL_HPP
#define FGLAB_PTYPICAL_HPP

#include "fglab/formal_group_law.hpp"

namespace fglab {

/// Output of Cartier p-typification: the p-typical law and the canonical
/// strict iso eps from it to the input law.
struct PTypification {
  FormalGroupLaw law;
  StrictIso iso;
};

/// Keeps the logarithm's t^(p^k) coefficients, rebuilds the law from that
/// logarithm, and sets eps = exp_F(l_typ). Integer inputs are localized at
/// p. Over Z_(p) every output coefficient is checked to be p-local
/// (CartierIntegralityFailure otherwise). Throws NotPrime, NotPLocalRing.
PTypification p_typify(const FormalGroupLaw& law, long p);

/// Whether the logarithm is supported on exponents p^k.
bool is_p_typical(const FormalGroupLaw& law, long p);

struct IdempotencyCertificate {
  PTypification first_pass;
  PTypification second_pass;
  bool verdict = false;
};

/// The orientation eps of the Quillen idempotent together with evidence
/// that p-typifying twice changes nothing. Throws IdempotencyFailure if the
/// second pass is not the identity.
std::pair<OrientationSeries, IdempotencyCertificate> quillen_idempotent(const FormalGroupLaw& law, long p);

}  // namespace fglab

#endif  // FGLAB_PTYPICAL_HPP
