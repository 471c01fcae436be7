#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ttg/presheaf.hpp"

namespace ttg {

/// Endomorphism of the identity functor of D^perf(R_V) given by a central
/// multiplier r of the section ring.
class IdentityEndo {
 public:
  IdentityEndo(OpenSet home, Element r);

  const OpenSet& home() const { return home_; }
  const Ring& ring() const { return ring_; }
  const Element& multiplier() const { return r_; }
  /// The component at an object: multiplication by r.
  ChainMap at(const Complex& p) const;

 private:
  OpenSet home_;
  Ring ring_;
  Element r_;
};

IdentityEndo lambda(const Element& r, const OpenSet& v);
/// The global-sections version, V = Spec R.
IdentityEndo lambda(const Element& r, const Ring& ring);
/// The component on the unit, read as a ring element.
Element sigma(const IdentityEndo& a);

IdentityEndo add(const IdentityEndo& a, const IdentityEndo& b);
IdentityEndo compose(const IdentityEndo& a, const IdentityEndo& b);

struct NilpotenceCheck {
  std::optional<bool> value;       // nullopt: indeterminate
  unsigned exponent = 0;           // the power found, when value is true
  unsigned exponent_bound = 0;
  std::vector<Homotopy> witnesses;  // one per generator: a^exponent ~ 0
  std::string reason;
};

/// Searches a^k ~ 0 on every generator for k up to the nilpotency index of
/// sigma(a) (16 when it has none). A non-nilpotent multiplier is reported
/// false: its power on the unit is multiplication by a nonzero element.
/// Throws InvalidArgument when the generators do not have full support.
NilpotenceCheck is_pointwise_nilpotent(const IdentityEndo& a, const std::vector<Complex>& generators,
                                       const HomLimits& limits = {});

/// The multiplier pushed along the restriction to V1.
IdentityEndo rho_descend(const IdentityEndo& a, const OpenSet& v1);

/// Sections of the reconstructed presheaf over one basic open.
struct SectionRow {
  Support complement;
  Ring sections;           // R_V, the multiplier ring
  std::string pnil;        // description of PNil(V)
  bool pnil_exhaustive = false;
  Ring reduced;            // R_V / PNil
  Ring expected;           // sections of Spec(R_red) over the same open
  bool match = false;
};

struct StalkRow {
  PointDescriptor point;
  std::string label;
  std::string stalk;           // of the reconstructed sheaf
  std::string reduced_stalk;
  std::string expected;        // stalk of Spec(R_red)
  std::optional<Ring> finite;  // the reduced stalk when it is a finite ring
  bool match = false;
};

struct SpaceRow {
  std::string label;
  std::string support;      // the point of Spc as a support
  std::string spec_point;   // the matching point of Spec(R_red)
  bool match = false;
};

/// Spc(D^perf R) with the End / PNil sections on the enumerated basic
/// opens, sheafified on that basis, next to Spec(R_red).
struct RingedSpaceModel {
  Ring ring;
  Ring reduced_ring;
  unsigned bound = 0;
  bool truncated = false;
  SpectrumModel spectrum;
  std::vector<std::pair<std::size_t, std::size_t>> covering;  // specialization covers
  std::vector<SpaceRow> space;
  std::vector<SectionRow> sections;
  std::vector<StalkRow> stalks;
  std::size_t restrictions_checked = 0;
  std::size_t sheaf_conditions_checked = 0;
  bool sheaf_exhaustive = false;
  std::vector<std::string> failures;

  bool homeomorphic() const;
  bool ok() const { return failures.empty(); }
  /// R reduced and the reconstruction returns its own sections.
  bool fixed_point() const;
  /// Sections over the open with empty complement, reduced.
  const Ring& global_sections() const;
};

RingedSpaceModel reconstruct_ringed_space(const Ring& ring, unsigned bound, const HomLimits& limits = {});

}  // namespace ttg
