#ifndef FGLAB_FORMAL_GROUP_LAW_HPP
#define FGLAB_FORMAL_GROUP_LAW_HPP

#include <string_view>
#include <vector>

#include "fglab/series.hpp"

namespace fglab {

enum class Axiom { Unitality, Commutativity, Associativity };

std::string_view to_string(Axiom axiom);

/// First failing coefficient of one axiom. For associativity the index is
/// trivariate (x, y, z) and the defect is F(F(x,y),z) - F(x,F(y,z)) there.
struct AxiomViolation {
  Axiom axiom;
  SeriesIndex index;
  GradedPolynomial defect;
};

/// Reports at most one violation per axiom; empty iff `law` is a formal
/// group law up to its truncation. Requires arity 2 and truncation >= 2.
std::vector<AxiomViolation> check_fgl_axioms(const TruncatedSeries& law);

struct HomogeneityViolation {
  SeriesIndex index;
  GradedPolynomial coefficient;
};

/// Coefficients of x^i y^j that are not homogeneous of weight i + j - 1.
std::vector<HomogeneityViolation> homogeneity_violations(const TruncatedSeries& law);

/// A bivariate series satisfying the formal group law axioms up to its
/// truncation N >= 2.
class FormalGroupLaw {
 public:
  /// Verifies the axioms; throws DegreeTooSmall or NotAnFgl.
  static FormalGroupLaw make(TruncatedSeries law);
  static FormalGroupLaw additive(Ring ring, int truncation);
  /// x + y + a x y.
  static FormalGroupLaw multiplicative(Ring ring, int truncation, const BigRational& a = 1);
  /// exp(l(x) + l(y)) where exp is the compositional inverse of `log`.
  static FormalGroupLaw from_logarithm(const TruncatedSeries& log);
  /// For series that are formal group laws by construction (conjugates,
  /// laws built from a logarithm). Only shape and degree are checked.
  static FormalGroupLaw unchecked(TruncatedSeries law);

  const TruncatedSeries& series() const { return law_; }
  const Ring& ring() const { return law_.ring(); }
  int truncation() const { return law_.truncation(); }
  GradedPolynomial coefficient(int i, int j) const { return law_.coefficient(i, j); }

  /// F(u, v) for series u, v of equal arity with zero constant term.
  TruncatedSeries operator()(const TruncatedSeries& u, const TruncatedSeries& v) const;

  FormalGroupLaw truncated(int n) const;
  FormalGroupLaw in_ring(const Ring& target) const { return FormalGroupLaw(law_.in_ring(target)); }

  friend bool operator==(const FormalGroupLaw& a, const FormalGroupLaw& b) { return a.law_ == b.law_; }

 private:
  explicit FormalGroupLaw(TruncatedSeries law) : law_(std::move(law)) {}

  TruncatedSeries law_;
};

/// A strict series t + a2 t^2 + ... (zero constant, linear coefficient 1).
class OrientationSeries {
 public:
  /// Throws NotStrict.
  static OrientationSeries make(TruncatedSeries series);

  const TruncatedSeries& series() const { return series_; }
  const Ring& ring() const { return series_.ring(); }
  int truncation() const { return series_.truncation(); }

  /// Whether the t^i coefficient is homogeneous of weight i - 1 for all i.
  bool is_graded() const;

  friend bool operator==(const OrientationSeries&, const OrientationSeries&) = default;

 private:
  explicit OrientationSeries(TruncatedSeries series) : series_(std::move(series)) {}
  TruncatedSeries series_;
};

/// f with f(source(x,y)) = target(f(x), f(y)).
struct StrictIso {
  OrientationSeries f;
  FormalGroupLaw source;
  FormalGroupLaw target;
};

/// Indices where f(source(x,y)) and target(f(x), f(y)) differ (first one
/// only); empty iff the iso property holds up to the common truncation.
std::vector<SeriesIndex> strict_iso_defects(const StrictIso& iso);

/// Logarithm over the rationalized ring: integral of 1 / (dF/dy)(t, 0).
TruncatedSeries fgl_log(const FormalGroupLaw& law);
TruncatedSeries fgl_exp(const FormalGroupLaw& law);

/// iota with F(t, iota(t)) = 0, computed inside the coefficient ring.
TruncatedSeries formal_inverse(const FormalGroupLaw& law);
/// [n](t); negative n goes through the formal inverse.
TruncatedSeries n_series(const FormalGroupLaw& law, int n);

/// f(F(f^-1(x), f^-1(y))).
FormalGroupLaw transport_fgl(const FormalGroupLaw& law, const OrientationSeries& f);

/// Transports F along f, reads the orientation back off the resulting
/// strict iso, and transports back along f^-1.
bool orientation_roundtrip(const OrientationSeries& f, const FormalGroupLaw& law);

}  // namespace fglab

#endif  // FGLAB_FORMAL_GROUP_LAW_HPP
