#include "fglab/chern.hpp"

#include <algorithm>
#include <numeric>

#include "fglab/error.hpp"

namespace fglab {

namespace {

/// Images sending each coefficient-ring generator to the same-named
/// generator of `target` (whose generator list starts with them).
std::vector<GradedPolynomial> prefix_images(const Ring& source, const Ring& target) {
  std::vector<GradedPolynomial> images;
  for (std::size_t j = 0; j < source->size(); ++j) images.push_back(GradedPolynomial::generator(target, j));
  return images;
}

/// e_k of the listed variables (generator indices) of `ring`.
GradedPolynomial elementary_of(const Ring& ring, const std::vector<std::size_t>& vars, int k) {
  // Coefficients of prod (1 + v T), built one factor at a time.
  std::vector<GradedPolynomial> e{GradedPolynomial::constant(ring, 1)};
  for (std::size_t v : vars) {
    const auto x = GradedPolynomial::generator(ring, v);
    e.push_back(GradedPolynomial(ring));
    for (std::size_t i = e.size() - 1; i > 0; --i) e[i] += e[i - 1] * x;
  }
  if (k < 0 || k >= static_cast<int>(e.size())) return GradedPolynomial(ring);
  return e[static_cast<std::size_t>(k)];
}

/// Weight-truncated product in the Chern ring.
GradedPolynomial truncated_product(const ChernRing& ring, const GradedPolynomial& a, const GradedPolynomial& b) {
  GradedPolynomial out(a.ring());
  for (const auto& [ma, ca] : a.terms()) {
    const int wa = ring.chern_weight(ma);
    if (wa > ring.degree_bound()) continue;
    for (const auto& [mb, cb] : b.terms())
      if (wa + ring.chern_weight(mb) <= ring.degree_bound()) out.add_term(ma * mb, ca * cb);
  }
  return out;
}

/// prod_{i<=n} h(x_i) through power sums: log h = sum a_k t^k gives
/// sum_k a_k p_k, with p_k written in the c_i by Newton's identities, then
/// exponentiated in the weight-truncated Chern ring.
GradedPolynomial product_via_power_sums(const TruncatedSeries& h, int rank, int degree_bound) {
  const Ring q = h.ring()->rationalized();
  const ChernRing chern_q(q, rank, degree_bound);
  const ChernRing chern(h.ring(), rank, degree_bound);
  const int D = degree_bound;

  const auto hq = h.in_ring(q).truncated(D);
  const auto log_h = integrate(differentiate(hq) / hq);

  std::vector<GradedPolynomial> power_sums{GradedPolynomial(chern_q.chern_ring())};
  for (int k = 1; k <= D; ++k) {
    GradedPolynomial pk = chern_q.chern_class(k).scaled(k % 2 == 1 ? k : -k);
    for (int i = 1; i < k; ++i) {
      const auto term = chern_q.chern_class(i) * power_sums[static_cast<std::size_t>(k - i)];
      pk += i % 2 == 1 ? term : -term;
    }
    power_sums.push_back(std::move(pk));
  }

  GradedPolynomial exponent(chern_q.chern_ring());
  for (int k = 1; k <= D; ++k) exponent += chern_q.to_chern(log_h.coefficient(k)) * power_sums[static_cast<std::size_t>(k)];

  // exp(S) = sum_j S^j / j!; S has no weight-0 part so j <= D suffices.
  GradedPolynomial result = GradedPolynomial::constant(chern_q.chern_ring(), 1);
  GradedPolynomial power = result;
  for (int j = 1; j <= D; ++j) {
    power = truncated_product(chern_q, power, exponent).scaled(BigRational(1, j));
    result += power;
  }
  return chern_q.truncate(result).in_ring(chern.chern_ring());
}

}  // namespace

ChernRing::ChernRing(Ring coefficients, int rank, int degree_bound)
    : coefficients_(std::move(coefficients)), rank_(rank), degree_bound_(degree_bound) {
  if (rank < 1) throw Error(Errc::InvalidArgument, "Chern ring needs at least one Chern class");
  if (degree_bound < 0) throw Error(Errc::InvalidArgument, "negative degree bound");
  std::vector<Generator> roots, classes;
  for (int i = 1; i <= rank; ++i) {
    roots.push_back({"x" + std::to_string(i), 1});
    classes.push_back({"c" + std::to_string(i), i});
  }
  roots_ = coefficients_->extended(roots);
  chern_ = coefficients_->extended(classes);
}

GradedPolynomial ChernRing::root(int i) const {
  if (i < 1 || i > rank_) throw Error(Errc::InvalidArgument, "root index out of range");
  return GradedPolynomial::generator(roots_, coefficients_->size() + static_cast<std::size_t>(i - 1));
}

GradedPolynomial ChernRing::chern_class(int i) const {
  if (i == 0) return GradedPolynomial::constant(chern_, 1);
  if (i < 0 || i > rank_) return GradedPolynomial(chern_);
  return GradedPolynomial::generator(chern_, coefficients_->size() + static_cast<std::size_t>(i - 1));
}

GradedPolynomial ChernRing::elementary(int i) const {
  std::vector<std::size_t> vars(static_cast<std::size_t>(rank_));
  std::iota(vars.begin(), vars.end(), coefficients_->size());
  return elementary_of(roots_, vars, i);
}

int ChernRing::root_degree(const Monomial& m) const {
  int d = 0;
  for (std::size_t i = coefficients_->size(); i < m.size(); ++i) d += m[i];
  return d;
}

int ChernRing::chern_weight(const Monomial& m) const {
  int w = 0;
  const std::size_t k = coefficients_->size();
  for (std::size_t i = k; i < m.size(); ++i) w += m[i] * static_cast<int>(i - k + 1);
  return w;
}

GradedPolynomial ChernRing::truncate(const GradedPolynomial& chern_poly) const {
  return chern_poly.filtered([&](const Monomial& m) { return chern_weight(m) <= degree_bound_; });
}

GradedPolynomial ChernRing::to_roots(const GradedPolynomial& coefficient) const {
  return coefficient.substitute(roots_, prefix_images(coefficients_, roots_));
}

GradedPolynomial ChernRing::to_chern(const GradedPolynomial& coefficient) const {
  return coefficient.substitute(chern_, prefix_images(coefficients_, chern_));
}

GradedPolynomial ChernRing::chern_to_roots(const GradedPolynomial& chern_poly) const {
  require_same_ring(chern_poly.ring(), chern_);
  auto images = prefix_images(coefficients_, roots_);
  for (int i = 1; i <= rank_; ++i) images.push_back(elementary(i));
  return chern_poly.substitute(roots_, images);
}

GradedPolynomial expand_in_elementary(const ChernRing& ring, const GradedPolynomial& symmetric) {
  require_same_ring(symmetric.ring(), ring.root_ring());
  const std::size_t k = ring.coefficient_ring()->size();
  const int n = ring.rank();

  for (const auto& [m, c] : symmetric.terms())
    if (ring.root_degree(m) > ring.degree_bound())
      throw Error(Errc::InvalidArgument, "symmetric polynomial exceeds the degree bound");

  auto permuted = [&](const std::vector<int>& perm) {
    GradedPolynomial out(symmetric.ring());
    for (const auto& [m, c] : symmetric.terms()) {
      auto e = m.exponents();
      for (int i = 0; i < n; ++i) e[k + static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])] = m[k + static_cast<std::size_t>(i)];
      out.add_term(Monomial(std::move(e)), c);
    }
    return out;
  };
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  if (n <= 4) {
    while (std::next_permutation(perm.begin(), perm.end()))
      if (!(permuted(perm) == symmetric)) throw Error(Errc::NotSymmetric, "polynomial is not symmetric in the roots");
  } else {
    for (int i = 0; i + 1 < n; ++i) {
      std::iota(perm.begin(), perm.end(), 0);
      std::swap(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(i + 1)]);
      if (!(permuted(perm) == symmetric)) throw Error(Errc::NotSymmetric, "polynomial is not symmetric in the roots");
    }
  }

  std::vector<std::vector<GradedPolynomial>> e_powers(static_cast<std::size_t>(n));
  auto e_power = [&](int i, int p) -> const GradedPolynomial& {
    auto& cache = e_powers[static_cast<std::size_t>(i - 1)];
    if (cache.empty()) cache.push_back(GradedPolynomial::constant(ring.root_ring(), 1));
    while (static_cast<int>(cache.size()) <= p) cache.push_back(cache.back() * ring.elementary(i));
    return cache[static_cast<std::size_t>(p)];
  };
  auto root_part = [&](const Monomial& m) {
    return std::vector<int>(m.exponents().begin() + static_cast<std::ptrdiff_t>(k), m.exponents().end());
  };

  GradedPolynomial remaining = symmetric;
  GradedPolynomial result(ring.chern_ring());
  while (!remaining.is_zero()) {
    // Lex-leading root exponent a; a symmetric polynomial has a_1 >= ... >= a_n
    // there and x^a is the leading term of e_1^(a1-a2) ... e_n^(an).
    std::vector<int> lead;
    for (const auto& [m, c] : remaining.terms()) lead = std::max(lead, root_part(m));
    for (int i = 0; i + 1 < n; ++i)
      if (lead[static_cast<std::size_t>(i)] < lead[static_cast<std::size_t>(i + 1)])
        throw Error(Errc::NotSymmetric, "leading exponent is not a partition");

    std::vector<std::pair<Monomial, BigRational>> coeff_terms;
    for (const auto& [m, c] : remaining.terms())
      if (root_part(m) == lead)
        coeff_terms.emplace_back(Monomial(std::vector<int>(m.exponents().begin(), m.exponents().begin() + static_cast<std::ptrdiff_t>(k))), c);
    const auto coefficient = GradedPolynomial::from_terms(ring.coefficient_ring(), coeff_terms);

    std::vector<int> chern_exps(k, 0);
    GradedPolynomial product = ring.to_roots(coefficient);
    for (int i = 1; i <= n; ++i) {
      const int a_i = lead[static_cast<std::size_t>(i - 1)];
      const int a_next = i < n ? lead[static_cast<std::size_t>(i)] : 0;
      chern_exps.push_back(a_i - a_next);
      if (a_i - a_next > 0) product = product * e_power(i, a_i - a_next);
    }
    result += ring.to_chern(coefficient) * GradedPolynomial::term(ring.chern_ring(), Monomial(chern_exps), 1);
    remaining -= product;
  }
  return result;
}

GradedPolynomial expand_product_h(const TruncatedSeries& h, const ChernRing& ring) {
  if (h.arity() != 1) throw Error(Errc::ArityMismatch, "h must be univariate");
  require_same_ring(h.ring(), ring.coefficient_ring());
  if (h.constant_term() != GradedPolynomial::constant(h.ring(), 1))
    throw Error(Errc::NonUnitConstantTerm, "h must have constant term 1");
  const int D = ring.degree_bound();
  if (D < 1) throw Error(Errc::InvalidArgument, "degree bound must be >= 1");
  if (h.truncation() < D) throw Error(Errc::InvalidArgument, "h is not known up to the degree bound");

  const int n = ring.rank();
  auto expansion = product_via_power_sums(h, n, D);
  const auto next = product_via_power_sums(h, n + 1, D);
  const ChernRing wider(h.ring(), n + 1, D);
  const int stable = std::min(n, D);
  const auto low = expansion.filtered([&](const Monomial& m) { return ring.chern_weight(m) <= stable; });
  GradedPolynomial low_next(ring.chern_ring());
  for (const auto& [m, c] : next.terms()) {
    if (wider.chern_weight(m) > stable) continue;
    auto e = m.exponents();
    e.pop_back();  // c_{n+1} cannot occur below weight n+1
    low_next.add_term(Monomial(std::move(e)), c);
  }
  if (!(low == low_next)) throw Error(Errc::StabilityFailure, "expansion is not stable under n -> n+1");
  return expansion;
}

bool multiplicativity_check(const TruncatedSeries& h, int n, int m, int degree_bound) {
  const Ring& r = h.ring();
  const ChernRing big(r, n + m, degree_bound);
  const std::size_t k = r->size();
  // Interleave x1, y1, x2, y2, ...; the longer list fills the tail.
  std::vector<std::size_t> xs, ys;
  std::size_t pos = k;
  for (int i = 0; i < std::max(n, m); ++i) {
    if (i < n) xs.push_back(pos++);
    if (i < m) ys.push_back(pos++);
  }
  auto in_roots = [&](const GradedPolynomial& p, int rank, const std::vector<std::size_t>& vars) {
    auto images = prefix_images(r, big.root_ring());
    for (int i = 1; i <= rank; ++i) images.push_back(elementary_of(big.root_ring(), vars, i));
    return p.substitute(big.root_ring(), images);
  };
  auto cut = [&](const GradedPolynomial& p) {
    return p.filtered([&](const Monomial& mono) { return big.root_degree(mono) <= degree_bound; });
  };

  const auto px = expand_product_h(h, ChernRing(r, n, degree_bound));
  const auto py = expand_product_h(h, ChernRing(r, m, degree_bound));
  const auto pxy = expand_product_h(h, big);
  const auto lhs = cut(in_roots(px, n, xs) * in_roots(py, m, ys));
  const auto rhs = cut(big.chern_to_roots(pxy));
  return lhs == rhs;
}

TruncatedSeries tensor_first_chern(const FormalGroupLaw& law, int degree_bound) {
  if (degree_bound < 1 || degree_bound > law.truncation())
    throw Error(Errc::InvalidArgument, "degree bound must lie in [1, truncation]");
  return law.series().truncated(degree_bound);
}

ThomClassPolynomial thom_class_poly(int rank, const ChernRing& ring) {
  if (rank < 1) throw Error(Errc::InvalidArgument, "rank must be >= 1");
  if (rank > ring.rank()) throw Error(Errc::RankTooLarge, "rank exceeds the number of Chern classes");
  const Ring& cr = ring.chern_ring();
  TruncatedSeries f(cr, 1, rank);
  for (int i = 0; i <= rank; ++i) f.add(SeriesIndex{{rank - i, 0, 0}}, ring.chern_class(i));

  // Trivial bundle: every c_i -> 0 leaves t^r.
  auto images = prefix_images(ring.coefficient_ring(), cr);
  for (int i = 1; i <= ring.rank(); ++i) images.push_back(GradedPolynomial(cr));
  TruncatedSeries trivial = f.map_coefficients(cr, [&](const GradedPolynomial& c) { return c.substitute(cr, images); });
  TruncatedSeries expected(cr, 1, rank);
  expected.add(SeriesIndex{{rank, 0, 0}}, GradedPolynomial::constant(cr, 1));
  if (!(trivial == expected)) throw Error(Errc::InvalidArgument, "Thom polynomial does not reduce to t^r");
  return ThomClassPolynomial{rank, std::move(f)};
}

bool thom_whitney_identity(const Ring& coefficients, int n, int m) {
  const ChernRing big(coefficients, n + m, n + m);
  const Ring& roots = big.root_ring();
  const std::size_t k = coefficients->size();
  std::vector<std::size_t> all, xs, ys;
  for (int i = 0; i < n + m; ++i) {
    all.push_back(k + static_cast<std::size_t>(i));
    (i < n ? xs : ys).push_back(k + static_cast<std::size_t>(i));
  }
  auto thom = [&](const std::vector<std::size_t>& vars) {
    const int r = static_cast<int>(vars.size());
    TruncatedSeries f(roots, 1, n + m);
    for (int i = 0; i <= r; ++i) f.add(SeriesIndex{{r - i, 0, 0}}, elementary_of(roots, vars, i));
    return f;
  };
  return thom(all) == thom(xs) * thom(ys);
}

ProjectiveRing::ProjectiveRing(Ring coefficients, int dimension)
    : coefficients_(std::move(coefficients)), dimension_(dimension) {
  if (dimension < 0) throw Error(Errc::InvalidArgument, "negative projective dimension");
  ring_ = coefficients_->extended({{"x", 1}});
}

GradedPolynomial ProjectiveRing::x() const { return GradedPolynomial::generator(ring_, coefficients_->size()); }

GradedPolynomial ProjectiveRing::reduce(const GradedPolynomial& a) const {
  require_same_ring(a.ring(), ring_);
  const std::size_t xi = coefficients_->size();
  return a.filtered([&](const Monomial& m) { return m[xi] <= dimension_; });
}

GradedPolynomial ProjectiveRing::from_series(const TruncatedSeries& a) const {
  if (a.arity() != 1) throw Error(Errc::ArityMismatch, "expected a univariate polynomial");
  require_same_ring(a.ring(), coefficients_);
  const auto images = prefix_images(coefficients_, ring_);
  GradedPolynomial out(ring_);
  for (const auto& [k, c] : a.coefficients()) out += c.substitute(ring_, images) * x().pow(static_cast<unsigned>(k.e[0]));
  return reduce(out);
}

TruncatedSeries ProjectiveRing::to_series(const GradedPolynomial& a) const {
  require_same_ring(a.ring(), ring_);
  const std::size_t xi = coefficients_->size();
  TruncatedSeries out(coefficients_, 1, dimension_);
  const auto reduced = reduce(a);
  for (const auto& [m, c] : reduced.terms()) {
    auto e = m.exponents();
    const int power = e[xi];
    e.erase(e.begin() + static_cast<std::ptrdiff_t>(xi));
    out.add(SeriesIndex{{power, 0, 0}}, GradedPolynomial::term(coefficients_, Monomial(std::move(e)), c));
  }
  return out;
}

GradedPolynomial projective_ring_reduce(const ProjectiveRing& ring, const GradedPolynomial& a) {
  return ring.reduce(a);
}

}  // namespace fglab
