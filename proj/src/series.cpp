#include "fglab/series.hpp"

#include <algorithm>
#include <sstream>

#include "fglab/error.hpp"

namespace fglab {

namespace {

void require_compatible(const TruncatedSeries& a, const TruncatedSeries& b) {
  require_same_ring(a.ring(), b.ring());
  if (a.arity() != b.arity())
    throw Error(Errc::ArityMismatch, "arity " + std::to_string(a.arity()) + " vs " + std::to_string(b.arity()));
}

SeriesIndex operator+(const SeriesIndex& a, const SeriesIndex& b) {
  return SeriesIndex{{a.e[0] + b.e[0], a.e[1] + b.e[1], a.e[2] + b.e[2]}};
}

}  // namespace

TruncatedSeries::TruncatedSeries(Ring ring, int arity, int truncation)
    : ring_(std::move(ring)), arity_(arity), truncation_(truncation) {
  if (arity < 1 || arity > SeriesIndex::kMaxArity)
    throw Error(Errc::ArityMismatch, "series arity must be 1, 2 or 3");
  if (truncation < 0) throw Error(Errc::InvalidArgument, "negative truncation");
}

TruncatedSeries TruncatedSeries::variable(Ring ring, int arity, int index, int truncation) {
  TruncatedSeries out(ring, arity, truncation);
  if (index < 0 || index >= arity) throw Error(Errc::InvalidArgument, "variable index out of range");
  SeriesIndex k;
  k.e[static_cast<std::size_t>(index)] = 1;
  out.add(k, GradedPolynomial::constant(ring, 1));
  return out;
}

TruncatedSeries TruncatedSeries::constant(Ring ring, int arity, int truncation, const GradedPolynomial& value) {
  TruncatedSeries out(std::move(ring), arity, truncation);
  out.add(SeriesIndex{}, value);
  return out;
}

TruncatedSeries TruncatedSeries::univariate(Ring ring, int truncation, const std::vector<BigRational>& coefficients) {
  TruncatedSeries out(ring, 1, truncation);
  for (std::size_t i = 0; i < coefficients.size(); ++i)
    out.add(SeriesIndex{{static_cast<int>(i), 0, 0}}, GradedPolynomial::constant(ring, coefficients[i]));
  return out;
}

TruncatedSeries TruncatedSeries::univariate(Ring ring, int truncation, const std::vector<GradedPolynomial>& coefficients) {
  TruncatedSeries out(std::move(ring), 1, truncation);
  for (std::size_t i = 0; i < coefficients.size(); ++i) out.add(SeriesIndex{{static_cast<int>(i), 0, 0}}, coefficients[i]);
  return out;
}

GradedPolynomial TruncatedSeries::coefficient(const SeriesIndex& index) const {
  const auto it = coefficients_.find(index);
  return it == coefficients_.end() ? GradedPolynomial(ring_) : it->second;
}

void TruncatedSeries::add(const SeriesIndex& index, const GradedPolynomial& value) {
  for (int v = arity_; v < SeriesIndex::kMaxArity; ++v)
    if (index.e[static_cast<std::size_t>(v)] != 0)
      throw Error(Errc::ArityMismatch, "exponent on a variable beyond the series arity");
  if (index.degree() > truncation_ || value.is_zero()) return;
  require_same_ring(ring_, value.ring());
  auto [it, inserted] = coefficients_.try_emplace(index, value);
  if (!inserted) {
    it->second += value;
    if (it->second.is_zero()) coefficients_.erase(it);
  }
}

void TruncatedSeries::set(const SeriesIndex& index, const GradedPolynomial& value) {
  coefficients_.erase(index);
  add(index, value);
}

TruncatedSeries TruncatedSeries::truncated(int n) const {
  if (n > truncation_) throw Error(Errc::InvalidArgument, "cannot raise truncation of a series");
  TruncatedSeries out(ring_, arity_, n);
  for (const auto& [k, c] : coefficients_) {
    if (k.degree() > n) break;
    out.coefficients_.emplace_hint(out.coefficients_.end(), k, c);
  }
  return out;
}

TruncatedSeries TruncatedSeries::in_ring(const Ring& target) const {
  TruncatedSeries out(target, arity_, truncation_);
  for (const auto& [k, c] : coefficients_) out.coefficients_.emplace_hint(out.coefficients_.end(), k, c.in_ring(target));
  return out;
}

TruncatedSeries TruncatedSeries::scaled(const GradedPolynomial& factor) const {
  TruncatedSeries out(ring_, arity_, truncation_);
  for (const auto& [k, c] : coefficients_) out.add(k, c * factor);
  return out;
}

TruncatedSeries TruncatedSeries::scaled(const BigRational& factor) const {
  TruncatedSeries out(ring_, arity_, truncation_);
  for (const auto& [k, c] : coefficients_) out.add(k, c.scaled(factor));
  return out;
}

TruncatedSeries TruncatedSeries::pow(unsigned exponent) const {
  TruncatedSeries result = constant(ring_, arity_, truncation_, GradedPolynomial::constant(ring_, 1));
  TruncatedSeries base = *this;
  while (exponent) {
    if (exponent & 1U) result = result * base;
    exponent >>= 1U;
    if (exponent) base = base * base;
  }
  return result;
}

TruncatedSeries TruncatedSeries::operator-() const {
  TruncatedSeries out(*this);
  for (auto& [k, c] : out.coefficients_) c = -c;
  return out;
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& rhs) {
  require_compatible(*this, rhs);
  if (rhs.truncation_ < truncation_) *this = truncated(rhs.truncation_);
  for (const auto& [k, c] : rhs.coefficients_) add(k, c);
  return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& rhs) {
  require_compatible(*this, rhs);
  if (rhs.truncation_ < truncation_) *this = truncated(rhs.truncation_);
  for (const auto& [k, c] : rhs.coefficients_) add(k, -c);
  return *this;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  require_compatible(a, b);
  const int n = std::min(a.truncation_, b.truncation_);
  TruncatedSeries out(a.ring_, a.arity_, n);
  for (const auto& [ka, ca] : a.coefficients_) {
    const int room = n - ka.degree();
    if (room < 0) break;
    for (const auto& [kb, cb] : b.coefficients_) {
      if (kb.degree() > room) break;
      out.add(ka + kb, ca * cb);
    }
  }
  return out;
}

TruncatedSeries inverse(const TruncatedSeries& b) {
  const GradedPolynomial b0 = b.constant_term();
  if (!b0.is_constant() || !b.ring()->base().is_unit(b0.constant_term()))
    throw Error(Errc::NonInvertibleLeadingTerm,
                "constant term " + b0.to_string() + " is not a unit of " + b.ring()->to_string());
  const BigRational inv0 = BigRational(1) / b0.constant_term();
  // b = b0 (1 + c) with c = O(deg 1); 1/(1+c) = 1 - c(1 - c(1 - ...)).
  TruncatedSeries c = b.scaled(inv0);
  c.set(SeriesIndex{}, GradedPolynomial(b.ring()));
  const auto one = TruncatedSeries::constant(b.ring(), b.arity(), b.truncation(), GradedPolynomial::constant(b.ring(), 1));
  TruncatedSeries r = one;
  for (int k = 0; k < b.truncation(); ++k) r = one - c * r;
  return r.scaled(inv0);
}

TruncatedSeries operator/(const TruncatedSeries& a, const TruncatedSeries& b) {
  require_compatible(a, b);
  return a * inverse(b);
}

bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
  return a.arity_ == b.arity_ && a.truncation_ == b.truncation_ && same_ring(a.ring_, b.ring_) &&
         a.coefficients_ == b.coefficients_;
}

std::string TruncatedSeries::to_string() const {
  static constexpr const char* kUni[] = {"t"};
  static constexpr const char* kMulti[] = {"x", "y", "z"};
  const char* const* names = arity_ == 1 ? kUni : kMulti;
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : coefficients_) {
    const bool simple = c.terms().size() == 1;
    std::string cs = c.to_string();
    if (!first) {
      if (simple && cs.front() == '-') {
        os << " - ";
        cs.erase(0, 1);
      } else {
        os << " + ";
      }
    }
    first = false;
    bool any_var = k.degree() > 0;
    if (!any_var) {
      os << (simple ? cs : "(" + cs + ")");
    } else {
      if (cs == "-1") os << '-';
      else if (cs != "1") os << (simple ? cs : "(" + cs + ")") << '*';
      bool need_star = false;
      for (int v = 0; v < arity_; ++v) {
        const int e = k.e[static_cast<std::size_t>(v)];
        if (e == 0) continue;
        if (need_star) os << '*';
        os << names[v];
        if (e > 1) os << '^' << e;
        need_star = true;
      }
    }
  }
  if (first) os << '0';
  os << " + O(" << truncation_ + 1 << ')';
  return os.str();
}

TruncatedSeries compose(const TruncatedSeries& f, const TruncatedSeries& g) {
  if (f.arity() != 1) throw Error(Errc::ArityMismatch, "compose: outer series must be univariate");
  return substitute(f, std::span<const TruncatedSeries>(&g, 1));
}

TruncatedSeries substitute(const TruncatedSeries& f, std::span<const TruncatedSeries> args) {
  if (static_cast<int>(args.size()) != f.arity())
    throw Error(Errc::ArityMismatch, "substitute: need one argument per variable");
  const int arity = args.front().arity();
  int n = f.truncation();
  for (const auto& g : args) {
    require_same_ring(f.ring(), g.ring());
    if (g.arity() != arity) throw Error(Errc::ArityMismatch, "substitute: arguments differ in arity");
    if (!g.constant_term().is_zero())
      throw Error(Errc::NonzeroConstantTerm, "substitute: argument has nonzero constant term");
    n = std::min(n, g.truncation());
  }

  const Ring& ring = f.ring();
  std::vector<std::vector<TruncatedSeries>> powers(args.size());
  auto power = [&](std::size_t v, int e) -> const TruncatedSeries& {
    auto& cache = powers[v];
    if (cache.empty())
      cache.push_back(TruncatedSeries::constant(ring, arity, n, GradedPolynomial::constant(ring, 1)));
    while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.back() * args[v].truncated(n));
    return cache[static_cast<std::size_t>(e)];
  };

  using Entry = std::pair<SeriesIndex, const GradedPolynomial*>;
  // Horner-style grouping on the leading variables keeps the number of
  // full series products linear in the truncation.
  auto eval = [&](auto&& self, std::size_t level, const std::vector<Entry>& entries) -> TruncatedSeries {
    TruncatedSeries out(ring, arity, n);
    if (level + 1 == args.size()) {
      for (const auto& [k, c] : entries) {
        const auto& p = power(level, k.e[level]);
        for (const auto& [pk, pc] : p.coefficients()) out.add(pk, pc * *c);
      }
      return out;
    }
    std::map<int, std::vector<Entry>> groups;
    for (const auto& e : entries) groups[e.first.e[level]].push_back(e);
    for (const auto& [e, group] : groups) {
      TruncatedSeries inner = self(self, level + 1, group);
      out += e == 0 ? inner : power(level, e) * inner;
    }
    return out;
  };

  std::vector<Entry> entries;
  for (const auto& [k, c] : f.coefficients())
    if (k.degree() <= n) entries.emplace_back(k, &c);
  return eval(eval, 0, entries);
}

TruncatedSeries revert(const TruncatedSeries& f) {
  if (f.arity() != 1) throw Error(Errc::ArityMismatch, "revert: series must be univariate");
  if (!f.constant_term().is_zero()) throw Error(Errc::NonzeroConstantTerm, "revert: nonzero constant term");
  const GradedPolynomial u = f.coefficient(1);
  if (!u.is_constant() || !f.ring()->base().is_unit(u.constant_term()))
    throw Error(Errc::NonInvertibleLinearCoefficient, "revert: linear coefficient " + u.to_string() + " is not a unit");
  const BigRational inv_u = BigRational(1) / u.constant_term();
  const int n = f.truncation();
  TruncatedSeries g(f.ring(), 1, n);
  g.add(SeriesIndex{{1, 0, 0}}, GradedPolynomial::constant(f.ring(), inv_u));
  // Fix one coefficient at a time: f(g) = t + e t^k + O(t^{k+1}) is corrected
  // by subtracting e/u from g_k.
  for (int k = 2; k <= n; ++k) {
    const TruncatedSeries fg = compose(f.truncated(k), g.truncated(k));
    const GradedPolynomial e = fg.coefficient(k);
    if (!e.is_zero()) g.add(SeriesIndex{{k, 0, 0}}, (-e).scaled(inv_u));
  }
  return g;
}

TruncatedSeries differentiate(const TruncatedSeries& f) {
  if (f.arity() != 1) throw Error(Errc::ArityMismatch, "differentiate: series must be univariate");
  TruncatedSeries out(f.ring(), 1, f.truncation());
  for (const auto& [k, c] : f.coefficients())
    if (k.e[0] > 0) out.add(SeriesIndex{{k.e[0] - 1, 0, 0}}, c.scaled(k.e[0]));
  return out;
}

TruncatedSeries integrate(const TruncatedSeries& f) {
  if (f.arity() != 1) throw Error(Errc::ArityMismatch, "integrate: series must be univariate");
  const Ring q = f.ring()->rationalized();
  TruncatedSeries out(q, 1, f.truncation());
  for (const auto& [k, c] : f.coefficients())
    out.add(SeriesIndex{{k.e[0] + 1, 0, 0}}, c.in_ring(q).scaled(BigRational(1, k.e[0] + 1)));
  return out;
}

TruncatedSeries identity_series(const Ring& ring, int truncation) {
  return TruncatedSeries::variable(ring, 1, 0, truncation);
}

}  // namespace fglab
