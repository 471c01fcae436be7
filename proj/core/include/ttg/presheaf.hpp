#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "ttg/morphism.hpp"

namespace ttg {

/// Open subset V = Spec(R) - Z for a finitary support Z. Every such V is
/// basic: V = D(f) with f the product of the closed points of Z in each
/// component, and f = 0 on components contained in Z.
class OpenSet {
 public:
  explicit OpenSet(Support complement);
  static OpenSet whole(const Ring& ring) { return OpenSet(Support(ring)); }
  static OpenSet empty(const Ring& ring) { return OpenSet(Support::whole(ring)); }

  const Ring& ring() const { return complement_.ring(); }
  const Support& complement() const { return complement_; }
  /// f with V = D(f).
  const Element& witness() const { return witness_; }
  bool contains(const PointDescriptor& x) const { return !complement_.contains(x); }
  bool is_subset_of(const OpenSet& other) const { return other.complement_.is_subset_of(complement_); }
  std::string to_string() const;

 private:
  Support complement_;
  Element witness_;
};

/// The support of J(V): the complement of V.
Support J_of_open(const OpenSet& v);
/// J(V) assembled as the union of the closures of the enumerated points
/// outside V (the generated subcategory of the atomic points not in V).
Support J_by_points(const OpenSet& v, unsigned bound);

/// R -> R_V, the ring of sections over a basic open.
RingMap section_map(const OpenSet& v);
Ring section_ring(const OpenSet& v);
/// Restriction R_{V2} -> R_{V1} for V1 inside V2.
RingMap restriction(const OpenSet& v2, const OpenSet& v1);

/// q_V(P): base change to R_V.
Complex localize_object(const Complex& p, const OpenSet& v);

/// Q over R with an isomorphism between q_V(Q) and P.
struct ClearedComplex {
  Complex q;
  ChainMap to_p;    // q_V(Q) -> P
  ChainMap from_p;  // P -> q_V(Q)
};

/// Scales differentials by powers of the inverted element (and lifts through
/// the Chinese remainder theorem for quotients) to find a complex over R
/// whose localization is isomorphic to P. `loc` is the map R -> R_f.
ClearedComplex clear_denominators(const RingMap& loc, const Complex& p);
/// Both composites are homotopic to the identities (checked with witnesses).
bool verify_cleared(const RingMap& loc, const Complex& p, const ClearedComplex& c);

struct FractionReport {
  std::size_t sampled = 0;
  std::size_t found = 0;
  std::size_t missed = 0;
  bool budget_exhausted = false;
  bool hom_localizes = false;  // Hom_K(X, Y) localized = Hom over R_V
  ModuleClass hom_before;      // over R
  ModuleClass hom_after;       // over R_V
  std::vector<std::string> notes;
  bool ok() const { return missed == 0 && hom_localizes; }
};

/// Represents sampled maps X_V -> Y_V as fractions s^{-1} h with h a map
/// over R and s multiplication by a power of f (cone(s) supported in Z),
/// and compares Hom modules before and after localization.
FractionReport fraction_spotcheck(const Complex& x, const Complex& y, const OpenSet& v, std::size_t budget = 16,
                                  const HomLimits& limits = {});

/// Every support over the enumerated points is the union of the closures of
/// its points. Returns the number of supports checked, or throws on failure.
std::size_t molecular_check(const Ring& ring, unsigned bound);

struct PresheafMorphismReport {
  Support image_of_J;          // supph of f* applied to generators of J(V)
  Support J_of_preimage;       // J(Phi^{-1}(V))
  bool inclusion = false;
  std::size_t squares_checked = 0;
  std::vector<std::string> failures;
  bool ok() const { return inclusion && failures.empty(); }
};

/// The induced map R_V -> T_{Phi^{-1}(V)}.
RingMap localized_map(const RingMap& f, const OpenSet& v);

/// phi(J(V)) inside J(Phi^{-1}(V)), and localization commuting with pullback
/// on the sample complexes.
PresheafMorphismReport presheaf_morphism_check(const RingMap& f, const OpenSet& v, const std::vector<Complex>& samples);

}  // namespace ttg
