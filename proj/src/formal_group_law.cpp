#include "fglab/formal_group_law.hpp"

#include <algorithm>
#include <array>

#include "fglab/error.hpp"

namespace fglab {

namespace {

TruncatedSeries var(const Ring& ring, int arity, int index, int n) {
  return TruncatedSeries::variable(ring, arity, index, n);
}

TruncatedSeries apply2(const TruncatedSeries& law, const TruncatedSeries& u, const TruncatedSeries& v) {
  const std::array<TruncatedSeries, 2> args{u, v};
  return substitute(law, args);
}

/// First nonzero coefficient of a - b in canonical order, if any.
std::optional<std::pair<SeriesIndex, GradedPolynomial>> first_difference(const TruncatedSeries& a,
                                                                         const TruncatedSeries& b) {
  const TruncatedSeries d = a - b;
  if (d.is_zero()) return std::nullopt;
  const auto& [k, c] = *d.coefficients().begin();
  return std::make_pair(k, c);
}

}  // namespace

std::string_view to_string(Axiom axiom) {
  switch (axiom) {
    case Axiom::Unitality: return "unitality";
    case Axiom::Commutativity: return "commutativity";
    case Axiom::Associativity: return "associativity";
  }
  return "?";
}

std::vector<AxiomViolation> check_fgl_axioms(const TruncatedSeries& law) {
  if (law.arity() != 2) throw Error(Errc::ArityMismatch, "a formal group law is a bivariate series");
  if (law.truncation() < 2) throw Error(Errc::DegreeTooSmall, "truncation degree must be ≥ 2");
  const Ring& ring = law.ring();
  const int n = law.truncation();
  std::vector<AxiomViolation> report;

  // F(x, 0) = x and F(0, y) = y: every coefficient on an axis is fixed.
  TruncatedSeries axes(ring, 2, n);
  for (const auto& [k, c] : law.coefficients())
    if (k.e[0] == 0 || k.e[1] == 0) axes.add(k, c);
  const auto expected = var(ring, 2, 0, n) + var(ring, 2, 1, n);
  if (auto d = first_difference(axes, expected)) report.push_back({Axiom::Unitality, d->first, d->second});

  TruncatedSeries swapped(ring, 2, n);
  for (const auto& [k, c] : law.coefficients()) swapped.add(SeriesIndex{{k.e[1], k.e[0], 0}}, c);
  if (auto d = first_difference(law, swapped)) report.push_back({Axiom::Commutativity, d->first, d->second});

  const auto x = var(ring, 3, 0, n), y = var(ring, 3, 1, n), z = var(ring, 3, 2, n);
  const auto left = apply2(law, apply2(law, x, y), z);
  const auto right = apply2(law, x, apply2(law, y, z));
  if (auto d = first_difference(left, right)) report.push_back({Axiom::Associativity, d->first, d->second});
  return report;
}

std::vector<HomogeneityViolation> homogeneity_violations(const TruncatedSeries& law) {
  std::vector<HomogeneityViolation> out;
  for (const auto& [k, c] : law.coefficients())
    if (!c.is_homogeneous_of(k.degree() - 1)) out.push_back({k, c});
  return out;
}

FormalGroupLaw FormalGroupLaw::make(TruncatedSeries law) {
  const auto report = check_fgl_axioms(law);
  if (!report.empty()) {
    const auto& v = report.front();
    throw Error(Errc::NotAnFgl, "not a formal group law: " + std::string(to_string(v.axiom)) +
                                    " fails with defect " + v.defect.to_string());
  }
  return FormalGroupLaw(std::move(law));
}

FormalGroupLaw FormalGroupLaw::unchecked(TruncatedSeries law) {
  if (law.arity() != 2) throw Error(Errc::ArityMismatch, "a formal group law is a bivariate series");
  if (law.truncation() < 2) throw Error(Errc::DegreeTooSmall, "truncation degree must be ≥ 2");
  return FormalGroupLaw(std::move(law));
}

FormalGroupLaw FormalGroupLaw::additive(Ring ring, int truncation) {
  if (truncation < 2) throw Error(Errc::DegreeTooSmall, "truncation degree must be ≥ 2");
  return FormalGroupLaw(var(ring, 2, 0, truncation) + var(ring, 2, 1, truncation));
}

FormalGroupLaw FormalGroupLaw::multiplicative(Ring ring, int truncation, const BigRational& a) {
  if (truncation < 2) throw Error(Errc::DegreeTooSmall, "truncation degree must be ≥ 2");
  auto law = var(ring, 2, 0, truncation) + var(ring, 2, 1, truncation);
  law.add(SeriesIndex{{1, 1, 0}}, GradedPolynomial::constant(ring, a));
  return FormalGroupLaw(std::move(law));
}

FormalGroupLaw FormalGroupLaw::from_logarithm(const TruncatedSeries& log) {
  const int n = log.truncation();
  if (n < 2) throw Error(Errc::DegreeTooSmall, "truncation degree must be ≥ 2");
  const auto exp = revert(log);
  const auto x = var(log.ring(), 2, 0, n), y = var(log.ring(), 2, 1, n);
  return FormalGroupLaw(compose(exp, compose(log, x) + compose(log, y)));
}

TruncatedSeries FormalGroupLaw::operator()(const TruncatedSeries& u, const TruncatedSeries& v) const {
  return apply2(law_, u, v);
}

FormalGroupLaw FormalGroupLaw::truncated(int n) const {
  if (n < 2) throw Error(Errc::DegreeTooSmall, "truncation degree must be ≥ 2");
  return FormalGroupLaw(law_.truncated(n));
}

OrientationSeries OrientationSeries::make(TruncatedSeries series) {
  if (series.arity() != 1) throw Error(Errc::ArityMismatch, "an orientation series is univariate");
  if (!series.constant_term().is_zero() || series.coefficient(1) != GradedPolynomial::constant(series.ring(), 1))
    throw Error(Errc::NotStrict, "series is not of the form t + O(t^2): " + series.to_string());
  return OrientationSeries(std::move(series));
}

bool OrientationSeries::is_graded() const {
  for (const auto& [k, c] : series_.coefficients())
    if (!c.is_homogeneous_of(k.e[0] - 1)) return false;
  return true;
}

std::vector<SeriesIndex> strict_iso_defects(const StrictIso& iso) {
  const auto& f = iso.f.series();
  const int n = std::min({f.truncation(), iso.source.truncation(), iso.target.truncation()});
  const Ring& ring = f.ring();
  require_same_ring(ring, iso.source.ring());
  require_same_ring(ring, iso.target.ring());
  const auto x = var(ring, 2, 0, n), y = var(ring, 2, 1, n);
  const auto lhs = compose(f, iso.source(x, y));
  const auto rhs = iso.target(compose(f, x), compose(f, y));
  if (auto d = first_difference(lhs.truncated(n), rhs.truncated(n))) return {d->first};
  return {};
}

TruncatedSeries fgl_log(const FormalGroupLaw& law) {
  const Ring q = law.ring()->rationalized();
  const int n = law.truncation();
  TruncatedSeries derivative(q, 1, n);
  for (const auto& [k, c] : law.series().coefficients())
    if (k.e[1] == 1) derivative.add(SeriesIndex{{k.e[0], 0, 0}}, c.in_ring(q));
  const auto one = TruncatedSeries::constant(q, 1, n, GradedPolynomial::constant(q, 1));
  return integrate(one / derivative);
}

TruncatedSeries fgl_exp(const FormalGroupLaw& law) { return revert(fgl_log(law)); }

TruncatedSeries formal_inverse(const FormalGroupLaw& law) {
  const Ring& ring = law.ring();
  const int n = law.truncation();
  auto iota = -var(ring, 1, 0, n);
  // dF/dy(0,0) = 1, so the t^k defect of F(t, iota) is removed by
  // subtracting it from iota_k.
  for (int k = 2; k <= n; ++k) {
    const auto t = var(ring, 1, 0, k);
    const auto e = law.truncated(std::max(k, 2)).series();
    const auto defect = apply2(e, t, iota.truncated(k)).coefficient(k);
    if (!defect.is_zero()) iota.add(SeriesIndex{{k, 0, 0}}, -defect);
  }
  return iota;
}

TruncatedSeries n_series(const FormalGroupLaw& law, int n) {
  const Ring& ring = law.ring();
  const int N = law.truncation();
  const auto step = n >= 0 ? var(ring, 1, 0, N) : formal_inverse(law);
  TruncatedSeries acc(ring, 1, N);
  for (int i = 0; i < (n >= 0 ? n : -n); ++i) acc = law(acc, step);
  return acc;
}

FormalGroupLaw transport_fgl(const FormalGroupLaw& law, const OrientationSeries& f) {
  require_same_ring(law.ring(), f.ring());
  const int n = std::min(law.truncation(), f.truncation());
  const auto fn = f.series().truncated(n);
  const auto inv = revert(fn);
  const auto x = var(law.ring(), 2, 0, n), y = var(law.ring(), 2, 1, n);
  const auto conjugated = compose(fn, law.truncated(n)(compose(inv, x), compose(inv, y)));
  return FormalGroupLaw::unchecked(conjugated);
}

bool orientation_roundtrip(const OrientationSeries& f, const FormalGroupLaw& law) {
  const int n = std::min(law.truncation(), f.truncation());
  const auto base = law.truncated(n);
  const auto orientation = OrientationSeries::make(f.series().truncated(n));
  const auto moved = transport_fgl(base, orientation);

  // Forward: the pair (F', f) determines the orientation as the iso's series.
  const StrictIso iso{orientation, base, moved};
  if (!strict_iso_defects(iso).empty()) return false;
  const auto& recovered = iso.f;
  if (!(recovered == orientation)) return false;

  // Backward: transporting F' along f^-1 returns F.
  const auto back = transport_fgl(moved, OrientationSeries::make(revert(recovered.series())));
  return back == base;
}

}  // namespace fglab
