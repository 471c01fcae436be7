#pragma once

#include <optional>
#include <string>
#include <utility>

#include "ttg/base_ring.hpp"
#include "ttg/factor.hpp"

namespace ttg {

enum class ComponentKind { base, quotient, localization };

/// An element of a connected factor of a ring, stored as a fraction.
/// The denominator is 1 except in localizations, where it is canonical and
/// built from primes of the inverted element only.
struct Scalar {
  BaseElem num;
  BaseElem den;

  friend bool operator==(const Scalar&, const Scalar&) = default;
};

/// One factor of a RingDescriptor: B, B/(d) or B[1/f] with B = Z or F_p[t].
///
/// Quotient moduli are canonical nonzero nonunits. Localizations are stored
/// at the radical of the inverted element so that B[1/2] and B[1/4] compare
/// equal.
class Component {
 public:
  static Component base(const BaseRing& b);
  static Component quotient(const BaseRing& b, const BaseElem& d);
  static Component localization(const BaseRing& b, const BaseElem& f);

  ComponentKind kind() const { return kind_; }
  const BaseRing& base_ring() const { return base_; }
  /// d for quotients, f for localizations; 1 for a plain base.
  const BaseElem& parameter() const { return param_; }

  /// Linear algebra runs directly (SNF, division) on base and localization kinds.
  bool is_euclidean() const { return kind_ != ComponentKind::quotient; }
  bool has_generic_point() const { return kind_ != ComponentKind::quotient; }
  /// Whether the prime q of the base is a point of this component's Spec.
  bool contains_prime(const BaseElem& q) const;

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(long v) const;
  Scalar from_base(const BaseElem& a) const;
  Scalar fraction(const BaseElem& num, const BaseElem& den) const;

  Scalar add(const Scalar& a, const Scalar& b) const;
  Scalar sub(const Scalar& a, const Scalar& b) const;
  Scalar mul(const Scalar& a, const Scalar& b) const;
  Scalar neg(const Scalar& a) const;
  Scalar pow(const Scalar& a, unsigned e) const;

  bool is_zero(const Scalar& a) const { return base_.is_zero(a.num); }
  bool is_one(const Scalar& a) const { return base_.is_one(a.num) && base_.is_one(a.den); }
  bool is_unit(const Scalar& a) const;
  Scalar inverse(const Scalar& a) const;
  /// Nilpotent elements: zero in domains, multiples of rad(d) in B/(d).
  bool is_nilpotent(const Scalar& a) const;
  /// Smallest n >= 1 with a^n == 0, if a is nilpotent.
  std::optional<unsigned> nilpotency_index(const Scalar& a) const;

  // Euclidean structure; valid only when is_euclidean().
  mpz_class norm(const Scalar& a) const;
  std::pair<Scalar, Scalar> divmod(const Scalar& a, const Scalar& b) const;
  std::optional<Scalar> divide(const Scalar& a, const Scalar& b) const;
  Scalar normalizing_unit(const Scalar& a) const;
  Scalar canonical(const Scalar& a) const;

  /// Representative in the base ring: num for base and quotient kinds.
  /// Throws for localization elements with nontrivial denominator.
  BaseElem lift(const Scalar& a) const;

  std::string to_string(const Scalar& a) const;
  std::string name() const;

  friend bool operator==(const Component& a, const Component& b) {
    return a.kind_ == b.kind_ && a.base_ == b.base_ && a.param_ == b.param_;
  }

 private:
  Component(BaseRing b, ComponentKind k, BaseElem p) : base_(std::move(b)), kind_(k), param_(std::move(p)) {}
  void require_euclidean(const char* op) const;
  Scalar reduce(BaseElem num, BaseElem den) const;

  BaseRing base_;
  ComponentKind kind_;
  BaseElem param_;
};

}  // namespace ttg
