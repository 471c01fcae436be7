#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ttg/spectrum.hpp"

namespace ttg {

/// Where one target component gets its values: a source component and, for
/// polynomial sources, the image of t.
struct ComponentAssignment {
  std::size_t source_component = 0;
  std::optional<Scalar> t_image;

  friend bool operator==(const ComponentAssignment&, const ComponentAssignment&) = default;
};

/// Unital ring homomorphism between supported rings. Every target component
/// receives its values from a single source component (maps out of a
/// product are projections followed by maps of connected rings).
class RingMap {
 public:
  /// Validates the assignment: characteristic compatibility, relations of
  /// quotient sources sent to zero, inverted elements sent to units.
  RingMap(Ring source, Ring target, std::vector<ComponentAssignment> assignments);

  static RingMap identity(const Ring& r);
  /// The unique map out of Z (or out of a ring generated by 1).
  static RingMap canonical(const Ring& source, const Ring& target);
  /// Map out of a single-component polynomial-type source sending t to `t_image`.
  static RingMap polynomial(const Ring& source, const Ring& target, const Element& t_image);

  const Ring& source() const { return source_; }
  const Ring& target() const { return target_; }
  const std::vector<ComponentAssignment>& assignments() const { return assignments_; }

  Element apply(const Element& a) const;
  /// Image of a source-base element in target component j.
  Scalar apply_base(std::size_t j, const BaseElem& a) const;
  /// Image in target component j of a scalar of its source component.
  Scalar apply_scalar(std::size_t j, const Scalar& a) const;

  std::string to_string() const;

  friend bool operator==(const RingMap&, const RingMap&) = default;

 private:
  Ring source_;
  Ring target_;
  std::vector<ComponentAssignment> assignments_;
};

/// g o f.
RingMap compose(const RingMap& g, const RingMap& f);

/// The localization map R -> R[1/f]; components where f vanishes are dropped.
RingMap localization_map(const Ring& ring, const Element& f);

/// Base change of a complex along f (entrywise image of the differentials).
Complex pullback(const RingMap& f, const Complex& p);
ChainMap pullback(const RingMap& f, const ChainMap& m);

/// The prime of the source contracted from a point of the target.
PointDescriptor contraction(const RingMap& f, const PointDescriptor& y);

/// f^{-1}(Y) for a finitary support Y over the source.
Support preimage_support(const RingMap& f, const Support& y);

struct GeometricReport {
  std::vector<std::string> checks;  // one entry per identity verified
  std::vector<std::string> failures;
  bool dense = false;
  bool ok() const { return failures.empty() && dense; }
};

/// Preimage commutes with the intersection of the family (and with the
/// empty intersection), and pullback of the unit has full support.
GeometricReport verify_geometric(const RingMap& f, const std::vector<Support>& family);

/// Spc(f): the point of Spc(source) attached to a point of Spc(target).
SpectrumPoint spc_map(const RingMap& f, const SpectrumPoint& y);
/// The same point obtained as the intersection of all enumerated closures H
/// with y in f^{-1}(H) (enumeration of the source up to `bound`).
Support spc_map_by_intersection(const RingMap& f, const PointDescriptor& y, unsigned bound);

/// Equality of ring maps decided on the derived side: for every generator
/// and sample a, the base changes of multiplication by a on the unit agree
/// in the homotopy category of the target.
bool maps_equal_via_derived(const RingMap& f, const RingMap& g, const std::vector<Element>& samples = {});

/// Generators of the source as a ring: 1, and t for polynomial-type components.
std::vector<Element> ring_generators(const Ring& r);

}  // namespace ttg
