#include "fglab/universal.hpp"

#include "fglab/error.hpp"

namespace fglab {

namespace {

long ipow(long base, int exponent) {
  long r = 1;
  for (int i = 0; i < exponent; ++i) r *= base;
  return r;
}

}  // namespace

Ring universal_ring(int truncation) {
  if (truncation < 1) throw Error(Errc::DegreeTooSmall, "truncation degree must be >= 1");
  std::vector<Generator> gens;
  for (int i = 1; i < truncation; ++i) gens.push_back({"m" + std::to_string(i), i});
  return make_ring(BaseRing::rationals(), std::move(gens));
}

UniversalContext universal_fgl(int truncation) {
  if (truncation < 2) throw Error(Errc::DegreeTooSmall, "truncation degree must be ≥ 2");
  const Ring ring = universal_ring(truncation);
  TruncatedSeries log = identity_series(ring, truncation);
  for (int i = 1; i < truncation; ++i)
    log.add(SeriesIndex{{i + 1, 0, 0}}, GradedPolynomial::generator(ring, static_cast<std::size_t>(i - 1)));
  auto law = FormalGroupLaw::from_logarithm(log);
  return UniversalContext{truncation, ring, std::move(law), std::move(log)};
}

PTypification universal_p_typical(int truncation, long p) {
  return p_typify(universal_fgl(truncation).law, p);
}

std::vector<GradedPolynomial> multiplicative_specialization(const Ring& universal) {
  const Ring q = make_ring(BaseRing::rationals());
  std::vector<GradedPolynomial> images;
  for (std::size_t i = 1; i <= universal->size(); ++i) {
    const long sign = i % 2 == 0 ? 1 : -1;
    images.push_back(GradedPolynomial::constant(q, BigRational(sign, static_cast<long>(i) + 1)));
  }
  return images;
}

TruncatedSeries specialize(const TruncatedSeries& series, const Ring& target,
                           std::span<const GradedPolynomial> images) {
  return series.map_coefficients(target, [&](const GradedPolynomial& c) { return c.substitute(target, images); });
}

HazewinkelData hazewinkel_generators(long p, int count, int truncation) {
  if (!is_prime(p)) throw Error(Errc::NotPrime, std::to_string(p) + " is not prime");
  if (count < 0) throw Error(Errc::InvalidArgument, "negative generator count");
  if (ipow(p, count) - 1 > truncation - 1)
    throw Error(Errc::DegreeTooSmall, "need p^k - 1 <= N - 1 for the m-generators to exist");
  const Ring ring = universal_ring(truncation);
  HazewinkelData data{p, ring, {}, {GradedPolynomial::constant(ring, 1)}};
  for (int n = 1; n <= count; ++n) {
    data.p_typical_log_coeffs.push_back(
        GradedPolynomial::generator(ring, static_cast<std::size_t>(ipow(p, n) - 2)));
    GradedPolynomial v = data.p_typical_log_coeffs[static_cast<std::size_t>(n)].scaled(p);
    for (int i = 1; i < n; ++i)
      v -= data.p_typical_log_coeffs[static_cast<std::size_t>(i)] *
           data.generators[static_cast<std::size_t>(n - i - 1)].pow(static_cast<unsigned>(ipow(p, i)));
    data.generators.push_back(std::move(v));
  }
  return data;
}

GradedPolynomial hazewinkel_residual(const HazewinkelData& data, int n) {
  if (n < 1 || n > static_cast<int>(data.generators.size()))
    throw Error(Errc::InvalidArgument, "residual index out of range");
  const auto& l = data.p_typical_log_coeffs;
  GradedPolynomial r = l[static_cast<std::size_t>(n)].scaled(data.prime);
  for (int i = 0; i < n; ++i)
    r -= l[static_cast<std::size_t>(i)] *
         data.generators[static_cast<std::size_t>(n - i - 1)].pow(static_cast<unsigned>(ipow(data.prime, i)));
  return r;
}

}  // namespace fglab
