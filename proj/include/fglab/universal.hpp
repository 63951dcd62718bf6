#ifndef FGLAB_UNIVERSAL_HPP
#define FGLAB_UNIVERSAL_HPP

#include <vector>

#include "fglab/ptypical.hpp"

namespace fglab {

/// The universal law over Q[m1, ..., m_{N-1}] (weight of m_i is i), built
/// from the logarithm t + sum m_i t^(i+1).
struct UniversalContext {
  int truncation;
  Ring ring;
  FormalGroupLaw law;
  TruncatedSeries log;
};

/// Q[m1, ..., m_{N-1}]. N >= 1.
Ring universal_ring(int truncation);

/// Throws DegreeTooSmall for N < 2.
UniversalContext universal_fgl(int truncation);

/// p_typify of the universal law.
PTypification universal_p_typical(int truncation, long p);

/// Images m_i -> (-1)^i / (i+1) in Q, the logarithm coefficients of the
/// multiplicative law x + y + xy.
std::vector<GradedPolynomial> multiplicative_specialization(const Ring& universal);

/// Applies a generator substitution to every coefficient.
TruncatedSeries specialize(const TruncatedSeries& series, const Ring& target,
                           std::span<const GradedPolynomial> images);

/// Hazewinkel generators v_1..v_k of BP_* expressed in the m_i, defined by
/// p l_n = sum_{0 <= i < n} l_i v_{n-i}^(p^i) with l_0 = 1, l_k = m_{p^k - 1}.
struct HazewinkelData {
  long prime;
  Ring ring;
  std::vector<GradedPolynomial> generators;           // v_1 .. v_k
  std::vector<GradedPolynomial> p_typical_log_coeffs;  // l_0 .. l_k
};

/// Throws DegreeTooSmall when p^k - 1 > N - 1, NotPrime for composite p.
HazewinkelData hazewinkel_generators(long p, int count, int truncation);

/// p l_n - sum_{0 <= i < n} l_i v_{n-i}^(p^i), for 1 <= n <= k.
GradedPolynomial hazewinkel_residual(const HazewinkelData& data, int n);

}  // namespace fglab

#endif  // FGLAB_UNIVERSAL_HPP
