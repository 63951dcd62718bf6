// Shared helpers for the test binaries.
#ifndef FGLAB_TESTS_SUPPORT_HPP
#define FGLAB_TESTS_SUPPORT_HPP

#include <random>
#include <vector>

#include "fglab/series.hpp"
#include "oracle/dense_oracle.hpp"

namespace testing_support {

using namespace fglab;

inline Ring q_ring() { return make_ring(BaseRing::rationals()); }
inline Ring z_ring() { return make_ring(BaseRing::integers()); }

/// Scalar series -> dense oracle vector (throws if a coefficient is not constant).
inline oracle::Uni to_dense(const TruncatedSeries& s) {
  oracle::Uni out = oracle::uni(s.truncation());
  for (const auto& [k, c] : s.coefficients()) {
    if (!c.is_constant()) throw std::runtime_error("to_dense: non-scalar coefficient");
    out[static_cast<std::size_t>(k.e[0])] = c.constant_term().raw();
  }
  return out;
}

inline oracle::Bi to_dense_bi(const TruncatedSeries& s) {
  oracle::Bi out = oracle::bi(s.truncation());
  for (const auto& [k, c] : s.coefficients()) {
    if (!c.is_constant()) throw std::runtime_error("to_dense_bi: non-scalar coefficient");
    out[static_cast<std::size_t>(k.e[0])][static_cast<std::size_t>(k.e[1])] = c.constant_term().raw();
  }
  return out;
}

inline BigRational from_q(const mpq_class& q) { return BigRational(q.get_num(), q.get_den()); }

inline TruncatedSeries from_dense(const Ring& ring, const oracle::Uni& f) {
  std::vector<BigRational> c;
  for (const auto& q : f) c.push_back(from_q(q));
  return TruncatedSeries::univariate(ring, static_cast<int>(f.size()) - 1, c);
}

inline TruncatedSeries from_dense_bi(const Ring& ring, const oracle::Bi& f) {
  const int n = static_cast<int>(f.size()) - 1;
  TruncatedSeries out(ring, 2, n);
  for (int i = 0; i <= n; ++i)
    for (int j = 0; i + j <= n; ++j)
      out.add(SeriesIndex{{i, j, 0}}, GradedPolynomial::constant(ring, from_q(f[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)])));
  return out;
}

/// Small rationals drawn from {-2, ..., 2} / {1, 2, 3}.
inline BigRational small_rational(std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-2, 2), den(1, 3);
  return BigRational(num(rng), den(rng));
}

/// Random series t + a2 t^2 + ... + aN t^N with coefficients that are small
/// rational combinations of the ring's generator monomials of degree <= 1.
inline TruncatedSeries random_strict(const Ring& ring, int n, std::mt19937& rng) {
  TruncatedSeries f = TruncatedSeries::variable(ring, 1, 0, n);
  std::bernoulli_distribution sparse(0.6);
  for (int i = 2; i <= n; ++i) {
    GradedPolynomial c = GradedPolynomial::constant(ring, small_rational(rng));
    for (std::size_t g = 0; g < ring->size(); ++g)
      if (sparse(rng)) c += GradedPolynomial::generator(ring, g).scaled(small_rational(rng));
    f.add(SeriesIndex{{i, 0, 0}}, c);
  }
  return f;
}

}  // namespace testing_support

#endif  // FGLAB_TESTS_SUPPORT_HPP
