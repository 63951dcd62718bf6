#include "fglab/ptypical.hpp"

#include "fglab/error.hpp"

namespace fglab {

namespace {

bool is_power_of(int n, long p) {
  if (n < 1) return false;
  while (n % p == 0) n /= static_cast<int>(p);
  return n == 1;
}

/// The ring the p-typification lives in: Z is localized at p, Z_(p) and Q
/// are kept.
Ring working_ring(const Ring& ring, long p) {
  const auto& base = ring->base();
  switch (base.kind) {
    case BaseKind::Integers: return ring->with_base(BaseRing::p_local(p));
    case BaseKind::Rationals: return ring;
    case BaseKind::PLocalIntegers:
      if (base.prime == p) return ring;
      break;
  }
  throw Error(Errc::NotPLocalRing, ring->to_string() + " is not a Z_(" + std::to_string(p) + ")-algebra");
}

/// Brings a series computed over Q back into the working ring, verifying
/// p-integrality coefficientwise.
TruncatedSeries integral_part(const TruncatedSeries& s, const Ring& ring, const char* what) {
  for (const auto& [k, c] : s.coefficients()) {
    for (const auto& [m, q] : c.terms())
      if (!ring->base().contains(q))
        throw Error(Errc::CartierIntegralityFailure,
                    std::string(what) + " has coefficient " + q.to_string() + " outside " + ring->base().to_string());
  }
  return s.in_ring(ring);
}

}  // namespace

PTypification p_typify(const FormalGroupLaw& law, long p) {
  if (!is_prime(p)) throw Error(Errc::NotPrime, std::to_string(p) + " is not prime");
  const Ring ring = working_ring(law.ring(), p);
  const FormalGroupLaw source = law.in_ring(ring);
  const int n = source.truncation();

  const TruncatedSeries log = fgl_log(source);
  TruncatedSeries typical_log(log.ring(), 1, n);
  for (const auto& [k, c] : log.coefficients())
    if (is_power_of(k.e[0], p)) typical_log.add(k, c);

  const auto typical = FormalGroupLaw::from_logarithm(typical_log);
  const auto eps = compose(revert(log), typical_log);

  const auto typical_law = FormalGroupLaw::unchecked(integral_part(typical.series(), ring, "p-typical law"));
  const auto eps_series = OrientationSeries::make(integral_part(eps, ring, "canonical isomorphism"));
  return PTypification{typical_law, StrictIso{eps_series, typical_law, source}};
}

bool is_p_typical(const FormalGroupLaw& law, long p) {
  if (!is_prime(p)) throw Error(Errc::NotPrime, std::to_string(p) + " is not prime");
  const auto log = fgl_log(law);
  for (const auto& [k, c] : log.coefficients())
    if (!is_power_of(k.e[0], p)) return false;
  return true;
}

std::pair<OrientationSeries, IdempotencyCertificate> quillen_idempotent(const FormalGroupLaw& law, long p) {
  auto first = p_typify(law, p);
  auto second = p_typify(first.law, p);
  const bool verdict = second.law == first.law &&
                       second.iso.f.series() == identity_series(first.law.ring(), first.law.truncation());
  if (!verdict) throw Error(Errc::IdempotencyFailure, "second p-typification is not the identity");
  OrientationSeries eps = first.iso.f;
  return {std::move(eps), IdempotencyCertificate{std::move(first), std::move(second), verdict}};
}

}  // namespace fglab
