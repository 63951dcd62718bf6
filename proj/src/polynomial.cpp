#include "fglab/polynomial.hpp"

#include <numeric>
#include <sstream>

#include "fglab/error.hpp"

namespace fglab {

Monomial::Monomial(std::vector<int> exponents) : exponents_(std::move(exponents)) {
  for (int e : exponents_) {
    if (e < 0) throw Error(Errc::InvalidArgument, "negative exponent in monomial");
    degree_ += e;
  }
}

int Monomial::weight(const RingDescriptor& ring) const {
  int w = 0;
  for (std::size_t i = 0; i < exponents_.size(); ++i) w += exponents_[i] * ring.generators()[i].weight;
  return w;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial out;
  out.exponents_.resize(a.exponents_.size());
  for (std::size_t i = 0; i < a.exponents_.size(); ++i) out.exponents_[i] = a.exponents_[i] + b.exponents_[i];
  out.degree_ = a.degree_ + b.degree_;
  return out;
}

void require_same_ring(const Ring& a, const Ring& b) {
  if (!same_ring(a, b))
    throw Error(Errc::RingMismatch, "ring mismatch: " + a->to_string() + " vs " + b->to_string());
}

GradedPolynomial GradedPolynomial::constant(Ring ring, const BigRational& value) {
  return term(std::move(ring), Monomial(), value);
}

GradedPolynomial GradedPolynomial::generator(Ring ring, std::size_t index) {
  if (index >= ring->size()) throw Error(Errc::UnknownGenerator, "generator index out of range");
  std::vector<int> e(ring->size(), 0);
  e[index] = 1;
  return term(std::move(ring), Monomial(std::move(e)), 1);
}

GradedPolynomial GradedPolynomial::generator(Ring ring, const std::string& name) {
  const auto index = ring->index_of(name);
  if (!index) throw Error(Errc::UnknownGenerator, "unknown generator " + name);
  return generator(std::move(ring), *index);
}

GradedPolynomial GradedPolynomial::term(Ring ring, Monomial monomial, const BigRational& value) {
  if (monomial.size() == 0 && ring->size() != 0) monomial = Monomial::unit(ring->size());
  return from_terms(std::move(ring), {{std::move(monomial), value}});
}

GradedPolynomial GradedPolynomial::from_terms(Ring ring, const std::vector<std::pair<Monomial, BigRational>>& terms) {
  GradedPolynomial out(std::move(ring));
  for (const auto& [m, c] : terms) {
    if (m.size() != out.ring_->size())
      throw Error(Errc::InvalidArgument, "monomial length does not match generator count");
    if (!out.ring_->base().contains(c))
      throw Error(Errc::NotInRing, c.to_string() + " is not in " + out.ring_->base().to_string());
    out.add_term(m, c);
  }
  return out;
}

bool GradedPolynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_unit());
}

BigRational GradedPolynomial::constant_term() const {
  if (terms_.empty() || !terms_.begin()->first.is_unit()) return 0;
  return terms_.begin()->second;
}

BigRational GradedPolynomial::coefficient(const Monomial& m) const {
  const auto it = terms_.find(m);
  return it == terms_.end() ? BigRational(0) : it->second;
}

std::optional<int> GradedPolynomial::homogeneous_weight() const {
  std::optional<int> w;
  for (const auto& [m, c] : terms_) {
    const int mw = m.weight(*ring_);
    if (w && *w != mw) return std::nullopt;
    w = mw;
  }
  return w;
}

bool GradedPolynomial::is_homogeneous_of(int weight) const {
  for (const auto& [m, c] : terms_)
    if (m.weight(*ring_) != weight) return false;
  return true;
}

void GradedPolynomial::add_term(const Monomial& m, const BigRational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

GradedPolynomial GradedPolynomial::operator-() const {
  GradedPolynomial out(*this);
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

GradedPolynomial& GradedPolynomial::operator+=(const GradedPolynomial& rhs) {
  require_same_ring(ring_, rhs.ring_);
  for (const auto& [m, c] : rhs.terms_) add_term(m, c);
  return *this;
}

GradedPolynomial& GradedPolynomial::operator-=(const GradedPolynomial& rhs) {
  require_same_ring(ring_, rhs.ring_);
  for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
  return *this;
}

GradedPolynomial operator*(const GradedPolynomial& a, const GradedPolynomial& b) {
  require_same_ring(a.ring_, b.ring_);
  GradedPolynomial out(a.ring_);
  if (a.is_zero() || b.is_zero()) return out;
  // Scalar fast path: most series over Z, Q, Z_(p) carry constant coefficients.
  if (a.ring_->size() == 0) {
    out.terms_.emplace(Monomial(), a.terms_.begin()->second * b.terms_.begin()->second);
    if (out.terms_.begin()->second.is_zero()) out.terms_.clear();
    return out;
  }
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
  return out;
}

GradedPolynomial GradedPolynomial::scaled(const BigRational& scalar) const {
  if (!ring_->base().contains(scalar))
    throw Error(Errc::NotInRing, scalar.to_string() + " is not in " + ring_->base().to_string());
  GradedPolynomial out(ring_);
  if (scalar.is_zero()) return out;
  for (const auto& [m, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), m, c * scalar);
  return out;
}

GradedPolynomial GradedPolynomial::pow(unsigned exponent) const {
  GradedPolynomial result = constant(ring_, 1);
  GradedPolynomial base = *this;
  while (exponent) {
    if (exponent & 1U) result = result * base;
    exponent >>= 1U;
    if (exponent) base = base * base;
  }
  return result;
}

GradedPolynomial GradedPolynomial::in_ring(const Ring& target) const {
  if (target->generators() != ring_->generators())
    throw Error(Errc::RingMismatch, "in_ring: generator lists differ");
  GradedPolynomial out(target);
  for (const auto& [m, c] : terms_) {
    if (!target->base().contains(c))
      throw Error(Errc::NotInRing, c.to_string() + " is not in " + target->base().to_string());
    out.terms_.emplace_hint(out.terms_.end(), m, c);
  }
  return out;
}

GradedPolynomial GradedPolynomial::substitute(const Ring& target, std::span<const GradedPolynomial> images) const {
  if (images.size() != ring_->size())
    throw Error(Errc::InvalidArgument, "substitute: need one image per generator");
  for (const auto& img : images) require_same_ring(img.ring(), target);
  GradedPolynomial out(target);
  // Cache powers per generator; typical exponents are small.
  std::vector<std::vector<GradedPolynomial>> powers(images.size());
  auto power = [&](std::size_t i, int e) -> const GradedPolynomial& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(constant(target, 1));
    while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.back() * images[i]);
    return cache[static_cast<std::size_t>(e)];
  };
  for (const auto& [m, c] : terms_) {
    if (!target->base().contains(c))
      throw Error(Errc::NotInRing, c.to_string() + " is not in " + target->base().to_string());
    GradedPolynomial t = constant(target, c);
    for (std::size_t i = 0; i < m.size(); ++i)
      if (m[i] != 0) t = t * power(i, m[i]);
    out += t;
  }
  return out;
}

std::string GradedPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    BigRational mag = c.sign() < 0 ? -c : c;
    if (first) {
      if (c.sign() < 0) os << '-';
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    const bool bare = m.is_unit();
    if (bare || !mag.is_one()) os << mag.to_string();
    bool need_star = !bare && !mag.is_one();
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (need_star) os << '*';
      os << ring_->generators()[i].name;
      if (m[i] > 1) os << '^' << m[i];
      need_star = true;
    }
  }
  return os.str();
}

bool operator==(const GradedPolynomial& a, const GradedPolynomial& b) {
  return same_ring(a.ring_, b.ring_) && a.terms_ == b.terms_;
}

bool assert_p_local(const GradedPolynomial& a, long p) {
  for (const auto& [m, c] : a.terms())
    if (!is_p_local(c, p)) return false;
  return true;
}

}  // namespace fglab
