#include "fglab/ring.hpp"

#include <set>
#include <sstream>

#include "fglab/error.hpp"

namespace fglab {

bool BaseRing::contains(const BigRational& q) const {
  switch (kind) {
    case BaseKind::Integers: return q.is_integer();
    case BaseKind::Rationals: return true;
    case BaseKind::PLocalIntegers: return is_p_local(q, prime);
  }
  return false;
}

bool BaseRing::is_unit(const BigRational& q) const {
  if (q.is_zero()) return false;
  switch (kind) {
    case BaseKind::Integers: return q == 1 || q == -1;
    case BaseKind::Rationals: return true;
    case BaseKind::PLocalIntegers:
      return is_p_local(q, prime) && is_p_local(BigRational(q.denominator(), q.numerator()), prime);
  }
  return false;
}

std::string BaseRing::to_string() const {
  switch (kind) {
    case BaseKind::Integers: return "Z";
    case BaseKind::Rationals: return "Q";
    case BaseKind::PLocalIntegers: return "Z_(" + std::to_string(prime) + ")";
  }
  return "?";
}

std::optional<std::size_t> RingDescriptor::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < generators_.size(); ++i)
    if (generators_[i].name == name) return i;
  return std::nullopt;
}

Ring RingDescriptor::rationalized() const { return with_base(BaseRing::rationals()); }

Ring RingDescriptor::with_base(BaseRing base) const { return make_ring(base, generators_); }

Ring RingDescriptor::extended(const std::vector<Generator>& extra) const {
  auto all = generators_;
  all.insert(all.end(), extra.begin(), extra.end());
  return make_ring(base_, std::move(all));
}

std::string RingDescriptor::to_string() const {
  std::ostringstream os;
  os << base_.to_string();
  if (!generators_.empty()) {
    os << '[';
    for (std::size_t i = 0; i < generators_.size(); ++i) {
      if (i) os << ", ";
      os << generators_[i].name << ':' << generators_[i].weight;
    }
    os << ']';
  }
  return os.str();
}

Ring make_ring(BaseRing base, std::vector<Generator> generators) {
  if (base.kind == BaseKind::PLocalIntegers && !is_prime(base.prime))
    throw Error(Errc::NotPrime, std::to_string(base.prime) + " is not prime");
  if (base.kind != BaseKind::PLocalIntegers) base.prime = 0;
  std::set<std::string> seen;
  for (const auto& g : generators) {
    if (g.name.empty()) throw Error(Errc::EmptyName, "generator with empty name");
    if (g.weight < 0) throw Error(Errc::InvalidArgument, "negative weight for generator " + g.name);
    if (!seen.insert(g.name).second) throw Error(Errc::DuplicateGenerator, "duplicate generator " + g.name);
  }
  return Ring(new RingDescriptor(base, std::move(generators)));
}

bool same_ring(const Ring& a, const Ring& b) { return a == b || *a == *b; }

}  // namespace fglab
