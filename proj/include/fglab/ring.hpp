#ifndef FGLAB_RING_HPP
#define FGLAB_RING_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "fglab/rational.hpp"

namespace fglab {

enum class BaseKind { Integers, Rationals, PLocalIntegers };

/// The scalar number system under a coefficient ring: Z, Q, or Z_(p).
struct BaseRing {
  BaseKind kind = BaseKind::Rationals;
  long prime = 0;  // only meaningful for PLocalIntegers

  static BaseRing integers() { return {BaseKind::Integers, 0}; }
  static BaseRing rationals() { return {BaseKind::Rationals, 0}; }
  static BaseRing p_local(long p) { return {BaseKind::PLocalIntegers, p}; }

  /// Membership of a rational scalar.
  bool contains(const BigRational& q) const;
  /// Units of the base: +-1 over Z, numerators prime to p over Z_(p),
  /// every nonzero scalar over Q.
  bool is_unit(const BigRational& q) const;

  std::string to_string() const;

  friend bool operator==(const BaseRing&, const BaseRing&) = default;
};

struct Generator {
  std::string name;
  int weight = 0;

  friend bool operator==(const Generator&, const Generator&) = default;
};

/// A graded coefficient ring base[g1, ..., gk] with one integer weight per
/// polynomial generator. Immutable; shared by the polynomials that live in it.
class RingDescriptor {
 public:
  const BaseRing& base() const { return base_; }
  const std::vector<Generator>& generators() const { return generators_; }
  std::size_t size() const { return generators_.size(); }

  std::optional<std::size_t> index_of(const std::string& name) const;

  /// Same generators over Q.
  std::shared_ptr<const RingDescriptor> rationalized() const;
  /// Same generators over another base.
  std::shared_ptr<const RingDescriptor> with_base(BaseRing base) const;
  /// Appends generators after the existing ones.
  std::shared_ptr<const RingDescriptor> extended(const std::vector<Generator>& extra) const;

  std::string to_string() const;

  friend bool operator==(const RingDescriptor&, const RingDescriptor&) = default;

 private:
  friend std::shared_ptr<const RingDescriptor> make_ring(BaseRing, std::vector<Generator>);
  RingDescriptor(BaseRing base, std::vector<Generator> generators)
      : base_(base), generators_(std::move(generators)) {}

  BaseRing base_;
  std::vector<Generator> generators_;
};

using Ring = std::shared_ptr<const RingDescriptor>;

/// Validates and builds a descriptor. Throws DuplicateGenerator, EmptyName,
/// NotPrime, or InvalidArgument (negative weight).
Ring make_ring(BaseRing base, std::vector<Generator> generators = {});

/// Pointer-or-value equality.
bool same_ring(const Ring& a, const Ring& b);

}  // namespace fglab

#endif  // FGLAB_RING_HPP
