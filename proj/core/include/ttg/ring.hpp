#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ttg/component.hpp"

namespace ttg {

/// A ring element: one Scalar per component of the ring.
struct Element {
  std::vector<Scalar> parts;

  friend bool operator==(const Element&, const Element&) = default;
};

/// Desk-scale commutative ring: Z, F_p[t], a principal quotient, a
/// localization at one element, or a finite product of those.
///
/// Internally a ring is its list of connected factors (components). The zero
/// ring has no components. Quotients and localizations are canonicalized on
/// construction: Z/12 localized at 2 is stored as Z/3, quotients of
/// localizations become quotients of the base.
class Ring {
 public:
  static Ring integers();
  static Ring polynomials(std::uint32_t p);
  static Ring zero_ring();
  static Ring from_component(Component c);
  static Ring from_components(std::vector<Component> c) { return Ring(std::move(c)); }
  static Ring quotient(const Ring& base, const Element& d);
  static Ring localization(const Ring& base, const Element& f);
  static Ring product(const std::vector<Ring>& factors);

  const std::vector<Component>& components() const { return components_; }
  const Component& component(std::size_t i) const { return components_.at(i); }
  std::size_t size() const { return components_.size(); }
  bool is_zero_ring() const { return components_.empty(); }
  bool is_product() const { return components_.size() > 1; }
  /// Number of elements when finite.
  std::optional<mpz_class> cardinality() const;

  Element zero() const;
  Element one() const;
  Element from_int(long v) const;
  /// The same base element in every component (reduced as needed).
  Element from_base(const BaseElem& a) const;
  /// Component i carries `value`, every other component zero.
  Element embed(std::size_t i, const Scalar& value) const;

  Element add(const Element& a, const Element& b) const;
  Element sub(const Element& a, const Element& b) const;
  Element mul(const Element& a, const Element& b) const;
  Element neg(const Element& a) const;
  Element pow(const Element& a, unsigned e) const;
  bool is_zero(const Element& a) const;
  bool is_unit(const Element& a) const;
  bool is_nilpotent(const Element& a) const;
  std::optional<unsigned> nilpotency_index(const Element& a) const;

  /// Every element, for finite rings (throws BoundExceeded above `limit`).
  std::vector<Element> elements(std::size_t limit = 100000) const;

  void check(const Element& a) const;
  std::string to_string(const Element& a) const;
  std::string name() const;

  friend bool operator==(const Ring&, const Ring&) = default;

 private:
  explicit Ring(std::vector<Component> c) : components_(std::move(c)) {}
  std::vector<Component> components_;
};

/// A point of Spec: a prime of a component's base, or its generic point.
struct PointDescriptor {
  std::size_t component = 0;
  std::optional<BaseElem> prime;  // nullopt = generic point

  bool is_generic() const { return !prime.has_value(); }
  friend bool operator==(const PointDescriptor&, const PointDescriptor&) = default;
};

struct PointEnumeration {
  std::vector<PointDescriptor> points;
  bool complete = true;
};

/// Points of Spec(R) in canonical order: by component, generic point first,
/// then primes ascending. Infinite components are truncated at `bound`
/// (integer primes <= bound, irreducible polynomials of degree <= bound).
PointEnumeration enumerate_points(const Ring& ring, unsigned bound);

/// Whether the point belongs to Spec(R).
bool is_point_of(const Ring& ring, const PointDescriptor& x);
/// Whether x lies in the closure of y.
bool specializes(const PointDescriptor& y, const PointDescriptor& x);
std::string point_label(const Ring& ring, const PointDescriptor& x);
bool point_less(const Ring& ring, const PointDescriptor& a, const PointDescriptor& b);

Ring localize_ring(const Ring& ring, const Element& f);

/// R_red = R / nil(R) together with the projection.
class NilradicalQuotient {
 public:
  explicit NilradicalQuotient(const Ring& ring);
  const Ring& source() const { return source_; }
  const Ring& reduced() const { return reduced_; }
  Element project(const Element& a) const;
  bool is_identity() const { return source_ == reduced_; }

 private:
  Ring source_;
  Ring reduced_;
};

inline NilradicalQuotient nilradical_quotient(const Ring& ring) { return NilradicalQuotient(ring); }

}  // namespace ttg
