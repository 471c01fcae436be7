#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "ttg/complex.hpp"
#include "ttg/ring.hpp"

namespace ttg {

/// Part of a support inside one component: either the whole component
/// (closure of its generic point) or a finite set of closed points.
struct ComponentSupport {
  bool whole = false;
  std::vector<BaseElem> points;  // canonical primes, ascending; empty when whole

  friend bool operator==(const ComponentSupport&, const ComponentSupport&) = default;
};

/// Finitary specialization-closed subset of Spec(R).
///
/// Quotient components have finitely many points and never carry the whole
/// flag: their full Spec is stored as the explicit point list.
class Support {
 public:
  explicit Support(Ring ring);
  Support(Ring ring, std::vector<ComponentSupport> components);

  static Support whole(const Ring& ring);
  /// Closure of a single point.
  static Support closure(const Ring& ring, const PointDescriptor& x);
  static Support of_points(const Ring& ring, const std::vector<PointDescriptor>& xs);

  const Ring& ring() const { return ring_; }
  const std::vector<ComponentSupport>& components() const { return components_; }
  const ComponentSupport& component(std::size_t c) const { return components_.at(c); }

  bool is_empty() const;
  bool contains(const PointDescriptor& x) const;
  bool is_subset_of(const Support& other) const;
  /// The points of the support that are not specializations of other points
  /// in it: generic points of whole components and isolated closed points.
  std::vector<PointDescriptor> maximal_points() const;
  /// The enumerated points lying in the support.
  std::vector<PointDescriptor> points_in(const PointEnumeration& e) const;

  std::string to_string() const;

  friend bool operator==(const Support&, const Support&) = default;

 private:
  void normalize();

  Ring ring_;
  std::vector<ComponentSupport> components_;
};

Support unite(const Support& a, const Support& b);
Support intersect(const Support& a, const Support& b);

/// Union of the supports of the homology modules.
Support supph(const Complex& p);
/// Union of supph over a generator list (the empty list gives the empty support).
Support thomason_phi(const Ring& ring, const std::vector<Complex>& generators);
/// Whether P lies in the tensor-thick subcategory with support Y.
bool membership(const Complex& p, const Support& y);

/// Koszul complexes of the closed points plus component units for whole
/// components; their supports cover exactly Y.
std::vector<Complex> realize_generators(const Support& y);
/// The direct sum of realize_generators(y).
Complex realize(const Support& y);

struct ThetaOptions {
  std::size_t budget = 200;       // maximal number of produced objects
  std::vector<Complex> probes;    // tensor probes; empty means unit plus Koszul probes
  unsigned probe_bound = 3;       // enumeration bound for default probes
  HomLimits hom_limits{};
};

struct ThetaSample {
  std::vector<Complex> objects;
  bool budget_exhausted = false;
  std::size_t skipped_pairs = 0;  // member pairs whose Hom exceeded the size guard
};

/// One closure step: the inputs, zero, shifts, cones of sampled maps between
/// members, summands of explicit decompositions and tensor products with
/// probes. Throws std::logic_error if an output leaves the input support.
ThetaSample theta_step(const Ring& ring, const std::vector<Complex>& d, const ThetaOptions& options = {});
/// theta_step iterated `steps` times within one shared budget.
ThetaSample theta_saturate(const Ring& ring, const std::vector<Complex>& d, unsigned steps,
                           const ThetaOptions& options = {});

/// Every finitary support whose closed points come from the enumeration (the
/// power set of points, with whole flags for components having a generic
/// point). Throws BoundExceeded past `limit` supports.
std::vector<Support> all_supports(const Ring& ring, const PointEnumeration& e, std::size_t limit = 1u << 16);

}  // namespace ttg
