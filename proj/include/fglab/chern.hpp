#ifndef FGLAB_CHERN_HPP
#define FGLAB_CHERN_HPP

#include <vector>

#include "fglab/formal_group_law.hpp"

namespace fglab {

/// Chern-root bookkeeping over a coefficient ring R: the root ring
/// R[x1..xn] (all weight 1) and the Chern ring R[c1..cn] (weight of c_i is
/// i), with elements of the latter truncated at Chern weight D.
class ChernRing {
 public:
  /// Throws InvalidArgument for n < 1 or D < 0, DuplicateGenerator if R
  /// already uses a root or Chern class name.
  ChernRing(Ring coefficients, int rank, int degree_bound);

  const Ring& coefficient_ring() const { return coefficients_; }
  const Ring& root_ring() const { return roots_; }
  const Ring& chern_ring() const { return chern_; }
  int rank() const { return rank_; }
  int degree_bound() const { return degree_bound_; }

  GradedPolynomial root(int i) const;         // x_i, 1-based
  GradedPolynomial chern_class(int i) const;  // c_i, 1-based; c_0 = 1
  /// e_i(x1..xn) in the root ring; e_0 = 1, e_i = 0 for i > n.
  GradedPolynomial elementary(int i) const;

  /// Total exponent of the root variables in a root-ring monomial.
  int root_degree(const Monomial& m) const;
  /// Sum of i * (exponent of c_i) in a Chern-ring monomial.
  int chern_weight(const Monomial& m) const;

  /// Drops Chern-ring terms of Chern weight above D.
  GradedPolynomial truncate(const GradedPolynomial& chern_poly) const;
  /// Embeds a coefficient-ring element into the root or Chern ring.
  GradedPolynomial to_roots(const GradedPolynomial& coefficient) const;
  GradedPolynomial to_chern(const GradedPolynomial& coefficient) const;

  /// Substitutes c_i -> e_i(x); the inverse direction of
  /// expand_in_elementary.
  GradedPolynomial chern_to_roots(const GradedPolynomial& chern_poly) const;

 private:
  Ring coefficients_;
  Ring roots_;
  Ring chern_;
  int rank_;
  int degree_bound_;
};

/// Unique P with P(e_1, ..., e_n) = s. Throws NotSymmetric, or
/// InvalidArgument if s has root degree above D.
GradedPolynomial expand_in_elementary(const ChernRing& ring, const GradedPolynomial& symmetric);

/// prod_{i <= n} h(x_i) written in c_1..c_n, truncated at weight D. h must
/// be univariate over the coefficient ring with constant term 1
/// (NonUnitConstantTerm otherwise). The expansion at rank n+1 is computed as
/// well and must agree in weights <= min(n, D) (StabilityFailure otherwise).
GradedPolynomial expand_product_h(const TruncatedSeries& h, const ChernRing& ring);

/// Whether prod_{i<=n} h(x_i) * prod_{j<=m} h(y_j) equals the product over
/// the interleaved n+m roots, all written through Chern expansions and
/// compared in the root variables up to degree D.
bool multiplicativity_check(const TruncatedSeries& h, int n, int m, int degree_bound);

/// F(x1, x2) truncated at D, the first Chern class of a tensor product of
/// two line bundles with first Chern classes x1, x2.
TruncatedSeries tensor_first_chern(const FormalGroupLaw& law, int degree_bound);

/// t^r + c_1 t^(r-1) + ... + c_r over the Chern ring.
struct ThomClassPolynomial {
  int rank;
  TruncatedSeries polynomial;
};

/// Throws RankTooLarge if r exceeds the ring's number of Chern classes.
ThomClassPolynomial thom_class_poly(int rank, const ChernRing& ring);

/// Thom polynomial of a Whitney sum factors: with c(E + F) = c(E) c(F) in
/// root variables, Thom_{n+m} = Thom_n * Thom_m.
bool thom_whitney_identity(const Ring& coefficients, int n, int m);

/// E**(P^n) = E**[x]/(x^(n+1)): the coefficient ring with one extra
/// generator x of weight 1, reduced by dropping powers of x above n.
class ProjectiveRing {
 public:
  ProjectiveRing(Ring coefficients, int dimension);

  const Ring& ring() const { return ring_; }
  int dimension() const { return dimension_; }
  GradedPolynomial x() const;
  GradedPolynomial reduce(const GradedPolynomial& a) const;
  /// Reads a univariate series in t as a polynomial in x (then reduces).
  GradedPolynomial from_series(const TruncatedSeries& a) const;
  TruncatedSeries to_series(const GradedPolynomial& a) const;

 private:
  Ring coefficients_;
  Ring ring_;
  int dimension_;
};

GradedPolynomial projective_ring_reduce(const ProjectiveRing& ring, const GradedPolynomial& a);

}  // namespace fglab

#endif  // FGLAB_CHERN_HPP
