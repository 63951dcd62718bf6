#ifndef FGLAB_SERIES_HPP
#define FGLAB_SERIES_HPP

#include <array>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "fglab/polynomial.hpp"

namespace fglab {

/// Exponents of the formal variables (t) or (x, y). A third slot exists for
/// the associativity check, which needs F(F(x,y),z).
struct SeriesIndex {
  static constexpr int kMaxArity = 3;
  std::array<int, kMaxArity> e{};

  int degree() const { return e[0] + e[1] + e[2]; }
  friend bool operator==(const SeriesIndex&, const SeriesIndex&) = default;
};

struct SeriesIndexOrder {
  bool operator()(const SeriesIndex& a, const SeriesIndex& b) const {
    const int da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    return a.e < b.e;
  }
};

/// A power series in 1, 2 (or internally 3) formal variables with
/// GradedPolynomial coefficients, known up to total degree `truncation`.
/// Degree counts only the formal variables; generator weights play no role.
class TruncatedSeries {
 public:
  using CoefficientMap = std::map<SeriesIndex, GradedPolynomial, SeriesIndexOrder>;

  TruncatedSeries(Ring ring, int arity, int truncation);

  /// The formal variable number `index` (0-based) as a series.
  static TruncatedSeries variable(Ring ring, int arity, int index, int truncation);
  static TruncatedSeries constant(Ring ring, int arity, int truncation, const GradedPolynomial& value);
  /// sum_i coefficients[i] t^i, entries beyond the truncation ignored.
  static TruncatedSeries univariate(Ring ring, int truncation, const std::vector<BigRational>& coefficients);
  static TruncatedSeries univariate(Ring ring, int truncation, const std::vector<GradedPolynomial>& coefficients);

  const Ring& ring() const { return ring_; }
  int arity() const { return arity_; }
  int truncation() const { return truncation_; }
  const CoefficientMap& coefficients() const { return coefficients_; }

  GradedPolynomial coefficient(const SeriesIndex& index) const;
  GradedPolynomial coefficient(int i) const { return coefficient(SeriesIndex{{i, 0, 0}}); }
  GradedPolynomial coefficient(int i, int j) const { return coefficient(SeriesIndex{{i, j, 0}}); }
  GradedPolynomial constant_term() const { return coefficient(SeriesIndex{}); }
  bool is_zero() const { return coefficients_.empty(); }

  /// Adds value at index; silently drops indices above the truncation.
  void add(const SeriesIndex& index, const GradedPolynomial& value);
  void set(const SeriesIndex& index, const GradedPolynomial& value);

  /// Forgets everything above degree n (n <= truncation).
  TruncatedSeries truncated(int n) const;
  TruncatedSeries in_ring(const Ring& target) const;
  /// Multiplies every coefficient by a ring element.
  TruncatedSeries scaled(const GradedPolynomial& factor) const;
  TruncatedSeries scaled(const BigRational& factor) const;
  TruncatedSeries pow(unsigned exponent) const;

  /// Applies a coefficient map (e.g. a generator substitution).
  template <class Fn>
  TruncatedSeries map_coefficients(const Ring& target, Fn fn) const {
    TruncatedSeries out(target, arity_, truncation_);
    for (const auto& [k, c] : coefficients_) out.add(k, fn(c));
    return out;
  }

  TruncatedSeries operator-() const;
  TruncatedSeries& operator+=(const TruncatedSeries& rhs);
  TruncatedSeries& operator-=(const TruncatedSeries& rhs);
  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
  /// Throws NonInvertibleLeadingTerm unless b's constant term is a unit scalar.
  friend TruncatedSeries operator/(const TruncatedSeries& a, const TruncatedSeries& b);

  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b);

  std::string to_string() const;

 private:
  Ring ring_;
  int arity_;
  int truncation_;
  CoefficientMap coefficients_;
};

/// Multiplicative inverse; requires a unit scalar constant term.
TruncatedSeries inverse(const TruncatedSeries& b);

/// f(g) for univariate f and g of any arity with zero constant term.
TruncatedSeries compose(const TruncatedSeries& f, const TruncatedSeries& g);

/// F(args[0], ..., args[arity-1]); the arguments share one arity and ring
/// and have zero constant term. Result truncation is the minimum involved.
TruncatedSeries substitute(const TruncatedSeries& f, std::span<const TruncatedSeries> args);

/// Compositional inverse of f = u t + O(t^2), u a unit of the base.
TruncatedSeries revert(const TruncatedSeries& f);

TruncatedSeries differentiate(const TruncatedSeries& f);
/// Termwise integral with zero constant, over the rationalized ring.
TruncatedSeries integrate(const TruncatedSeries& f);

/// The series t.
TruncatedSeries identity_series(const Ring& ring, int truncation);

}  // namespace fglab

#endif  // FGLAB_SERIES_HPP
