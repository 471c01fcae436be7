#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ttg/support.hpp"

namespace ttg {

/// Nonempty irreducible support: one closed point, or one whole component.
bool is_atomic(const Support& y);

/// An atomic subcategory, stored through its support.
struct SpectrumPoint {
  PointDescriptor descriptor;
  Support support;
};

/// x goes to the subcategory supported on the closure of x.
SpectrumPoint E_map(const Ring& ring, const PointDescriptor& x);
/// Inverse of E_map: the generic point of the irreducible support.
std::optional<PointDescriptor> E_inverse(const Support& y);

struct BasisOpen {
  std::string witness;            // label of the witness complex
  Complex object;
  Support support;                // supph(object)
  std::vector<std::size_t> points;  // indices into SpectrumModel::points: U(object)
};

/// Spc(D^perf(R)) on the enumerated points, with the basis U(a) for the
/// canonical witness family and the specialization order.
class SpectrumModel {
 public:
  SpectrumModel(Ring ring, unsigned bound, std::vector<std::pair<std::string, Complex>> extra_witnesses = {});

  const Ring& ring() const { return ring_; }
  unsigned bound() const { return bound_; }
  bool complete() const { return complete_; }
  const std::vector<SpectrumPoint>& points() const { return points_; }
  const std::vector<BasisOpen>& basis() const { return basis_; }

  /// Index of the point with the given descriptor, if enumerated.
  std::optional<std::size_t> index_of(const PointDescriptor& x) const;
  /// Whether points[j] lies in the closure of points[i].
  bool specializes(std::size_t i, std::size_t j) const;
  /// Pairs (i, j), i != j, with points[j] in the closure of points[i] and nothing strictly between.
  std::vector<std::pair<std::size_t, std::size_t>> covering_relations() const;

  /// U(a): enumerated points whose subcategory is not contained in <a>.
  std::vector<std::size_t> U(const Complex& a) const;
  /// F(a): enumerated points whose subcategory is contained in <a>.
  std::vector<std::size_t> F(const Complex& a) const;
  /// Point set X - Supph(a), computed on the Spec side.
  std::vector<std::size_t> complement_of_support(const Complex& a) const;

 private:
  Ring ring_;
  unsigned bound_;
  bool complete_;
  std::vector<SpectrumPoint> points_;
  std::vector<BasisOpen> basis_;
};

SpectrumModel build_spectrum(const Ring& ring, unsigned bound);

/// Canonical witnesses: 0, the unit, component units of products, Koszul
/// complexes of enumerated closed points and sums of pairs of those.
std::vector<std::pair<std::string, Complex>> canonical_witnesses(const Ring& ring, unsigned bound);

struct TopologyReport {
  std::size_t pairs_checked = 0;
  std::size_t opens_checked = 0;
  std::vector<std::string> failures;
  bool e_bijective = false;
  bool ok() const { return failures.empty() && e_bijective; }
};

/// U(a) n U(b) = U(a + b) on all pairs of basis witnesses (up to `max_pairs`),
/// U(0) = everything, F(a) closed under specialization, U(a) = X - Supph(a),
/// and E bijective with the order matching inclusion of supports.
TopologyReport check_topology_axioms(const SpectrumModel& s, std::size_t max_pairs = 100000);

}  // namespace ttg
