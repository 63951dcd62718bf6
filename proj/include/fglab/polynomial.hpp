#ifndef FGLAB_POLYNOMIAL_HPP
#define FGLAB_POLYNOMIAL_HPP

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fglab/rational.hpp"
#include "fglab/ring.hpp"

namespace fglab {

/// Exponent vector over a ring's generators, one entry per generator.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<int> exponents);
  static Monomial unit(std::size_t generators) { return Monomial(std::vector<int>(generators, 0)); }

  const std::vector<int>& exponents() const { return exponents_; }
  int operator[](std::size_t i) const { return exponents_[i]; }
  std::size_t size() const { return exponents_.size(); }
  int degree() const { return degree_; }
  bool is_unit() const { return degree_ == 0; }

  /// Sum of exponent times generator weight.
  int weight(const RingDescriptor& ring) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<int> exponents_;
  int degree_ = 0;
};

/// Graded lexicographic: total degree first, then exponent vector.
struct GradedLexOrder {
  bool operator()(const Monomial& a, const Monomial& b) const {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a.exponents() < b.exponents();
  }
};

/// Sparse polynomial over a RingDescriptor. Never stores zero coefficients;
/// every coefficient lies in the ring's base.
class GradedPolynomial {
 public:
  using TermMap = std::map<Monomial, BigRational, GradedLexOrder>;

  explicit GradedPolynomial(Ring ring) : ring_(std::move(ring)) {}

  static GradedPolynomial constant(Ring ring, const BigRational& value);
  static GradedPolynomial generator(Ring ring, std::size_t index);
  static GradedPolynomial generator(Ring ring, const std::string& name);
  static GradedPolynomial term(Ring ring, Monomial monomial, const BigRational& value);
  /// Sums the given terms; validates lengths and base membership.
  static GradedPolynomial from_terms(Ring ring, const std::vector<std::pair<Monomial, BigRational>>& terms);

  const Ring& ring() const { return ring_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  BigRational constant_term() const;
  BigRational coefficient(const Monomial& m) const;

  /// Weight of the single graded piece, if the polynomial is homogeneous.
  /// The zero polynomial is homogeneous of every weight (returns nullopt
  /// through is_homogeneous_of only).
  std::optional<int> homogeneous_weight() const;
  bool is_homogeneous_of(int weight) const;

  GradedPolynomial operator-() const;
  GradedPolynomial& operator+=(const GradedPolynomial& rhs);
  GradedPolynomial& operator-=(const GradedPolynomial& rhs);
  GradedPolynomial& operator*=(const GradedPolynomial& rhs) { return *this = *this * rhs; }
  friend GradedPolynomial operator+(GradedPolynomial a, const GradedPolynomial& b) { return a += b; }
  friend GradedPolynomial operator-(GradedPolynomial a, const GradedPolynomial& b) { return a -= b; }
  friend GradedPolynomial operator*(const GradedPolynomial& a, const GradedPolynomial& b);

  /// Scalar action; the scalar must belong to the base ring.
  GradedPolynomial scaled(const BigRational& scalar) const;
  GradedPolynomial pow(unsigned exponent) const;

  /// Adds c * m (c in base, not validated for speed in inner loops).
  void add_term(const Monomial& m, const BigRational& c);

  /// Re-expresses the polynomial over `target`, which must have the same
  /// generators; throws NotInRing when a coefficient leaves the new base.
  GradedPolynomial in_ring(const Ring& target) const;

  /// Ring homomorphism sending generator i to images[i] (all in `target`).
  GradedPolynomial substitute(const Ring& target, std::span<const GradedPolynomial> images) const;

  /// Keeps only terms satisfying `keep`.
  template <class Pred>
  GradedPolynomial filtered(Pred keep) const {
    GradedPolynomial out(ring_);
    for (const auto& [m, c] : terms_)
      if (keep(m)) out.terms_.emplace_hint(out.terms_.end(), m, c);
    return out;
  }

  std::string to_string() const;

  friend bool operator==(const GradedPolynomial& a, const GradedPolynomial& b);

 private:
  Ring ring_;
  TermMap terms_;
};

/// True iff every coefficient's denominator is prime to p.
bool assert_p_local(const GradedPolynomial& a, long p);

/// Throws RingMismatch unless the two rings agree.
void require_same_ring(const Ring& a, const Ring& b);

}  // namespace fglab

#endif  // FGLAB_POLYNOMIAL_HPP
