#include "ttg/endo.hpp"

#include <algorithm>

#include "ttg/error.hpp"
#include "ttg/factor.hpp"

namespace ttg {

namespace {

constexpr unsigned kDefaultExponentBound = 16;
constexpr std::size_t kMaxRestrictionTriples = 20000;
constexpr std::size_t kMaxSheafProduct = 1u << 16;

void require_same_home(const IdentityEndo& a, const IdentityEndo& b) {
  if (!(a.home().complement() == b.home().complement())) throw InvalidArgument("endomorphisms live on different opens");
}

RingMap reduction_map(const Ring& ring, const Ring& reduced) {
  std::vector<ComponentAssignment> a;
  for (std::size_t c = 0; c < reduced.size(); ++c) {
    const Component& comp = reduced.component(c);
    std::optional<Scalar> t;
    if (!comp.base_ring().is_integers()) t = comp.from_base(comp.base_ring().variable());
    a.push_back({c, t});
  }
  return RingMap(ring, reduced, std::move(a));
}

std::vector<Element> component_elements(const Ring& ring, std::size_t c) {
  std::vector<Element> out;
  for (const auto& e : Ring::from_component(ring.component(c)).elements()) out.push_back(ring.embed(c, e.parts[0]));
  return out;
}

std::vector<Element> component_samples(const Ring& ring, std::size_t c, unsigned bound) {
  const Component& comp = ring.component(c);
  std::vector<Element> out;
  for (long v = -static_cast<long>(bound); v <= static_cast<long>(bound); ++v) out.push_back(ring.embed(c, comp.from_int(v)));
  if (!comp.base_ring().is_integers()) {
    const BaseElem t = comp.base_ring().variable();
    for (unsigned k = 1; k <= bound; ++k) out.push_back(ring.embed(c, comp.from_base(comp.base_ring().pow(t, k))));
  }
  return out;
}

/// Complement of the smallest enumerated open containing x.
Support smallest_open_complement(const Ring& ring, const PointEnumeration& e, const PointDescriptor& x) {
  std::vector<PointDescriptor> others;
  for (const auto& y : e.points)
    if (!specializes(y, x)) others.push_back(y);
  return Support::of_points(ring, others);
}

std::string local_ring_label(const Component& c, const PointDescriptor& x) {
  const BaseRing& b = c.base_ring();
  if (x.is_generic()) return b.is_integers() ? "Q" : "F" + std::to_string(b.characteristic()) + "(t)";
  return b.name() + "_(" + b.to_string(*x.prime) + ")";
}

std::string describe(const Ring& ring, const std::vector<Element>& xs) {
  std::string s = "{";
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? ", " : "") + ring.to_string(xs[i]);
  return s + "}";
}

/// Equalizer check for the cover V = V1 u V2 on finite section rings.
bool gluing_holds(const RingMap& r1, const RingMap& r2, const RingMap& s1, const RingMap& s2) {
  const auto sections = r1.source().elements();
  const auto a = r1.target().elements();
  const auto b = r2.target().elements();
  if (a.size() * b.size() > kMaxSheafProduct) throw BoundExceeded("sheaf check: cover too large");
  std::vector<std::pair<Element, Element>> images;
  for (const auto& x : sections) images.emplace_back(r1.apply(x), r2.apply(x));
  for (std::size_t i = 0; i < images.size(); ++i)
    for (std::size_t j = i + 1; j < images.size(); ++j)
      if (images[i] == images[j]) return false;
  std::size_t compatible = 0;
  for (const auto& u : a)
    for (const auto& v : b)
      if (s1.apply(u) == s2.apply(v)) ++compatible;
  return compatible == sections.size();
}

}  // namespace

IdentityEndo::IdentityEndo(OpenSet home, Element r)
    : home_(std::move(home)), ring_(section_ring(home_)), r_(std::move(r)) {
  ring_.check(r_);
}

ChainMap IdentityEndo::at(const Complex& p) const {
  if (!(p.ring() == ring_)) throw InvalidArgument("object over " + p.ring().name() + ", expected " + ring_.name());
  return ChainMap::multiplication(p, r_);
}

IdentityEndo lambda(const Element& r, const OpenSet& v) { return IdentityEndo(v, r); }

IdentityEndo lambda(const Element& r, const Ring& ring) { return IdentityEndo(OpenSet::whole(ring), r); }

Element sigma(const IdentityEndo& a) {
  const ChainMap on_unit = a.at(unit(a.ring()));
  Element out;
  for (std::size_t c = 0; c < a.ring().size(); ++c) out.parts.push_back(on_unit.at(c, 0)(0, 0));
  return out;
}

IdentityEndo add(const IdentityEndo& a, const IdentityEndo& b) {
  require_same_home(a, b);
  return IdentityEndo(a.home(), a.ring().add(a.multiplier(), b.multiplier()));
}

IdentityEndo compose(const IdentityEndo& a, const IdentityEndo& b) {
  require_same_home(a, b);
  return IdentityEndo(a.home(), a.ring().mul(a.multiplier(), b.multiplier()));
}

NilpotenceCheck is_pointwise_nilpotent(const IdentityEndo& a, const std::vector<Complex>& generators,
                                       const HomLimits& limits) {
  const Ring& ring = a.ring();
  for (const auto& g : generators)
    if (!(g.ring() == ring)) throw InvalidArgument("generator over the wrong ring");
  if (!(thomason_phi(ring, generators) == Support::whole(ring))) {
    throw InvalidArgument("generators do not have full support");
  }
  NilpotenceCheck out;
  const auto index = ring.nilpotency_index(a.multiplier());
  out.exponent_bound = index ? std::max(*index, 1u) : kDefaultExponentBound;
  try {
    for (unsigned k = 1; k <= out.exponent_bound; ++k) {
      const Element power = ring.pow(a.multiplier(), k);
      std::vector<Homotopy> witnesses;
      for (const auto& g : generators) {
        auto h = null_homotopy(ChainMap::multiplication(g, power), limits);
        if (!h) break;
        witnesses.push_back(std::move(*h));
      }
      if (witnesses.size() == generators.size()) {
        out.value = true;
        out.exponent = k;
        out.witnesses = std::move(witnesses);
        return out;
      }
    }
  } catch (const BoundExceeded& e) {
    out.reason = e.what();
    return out;
  }
  if (!ring.is_nilpotent(a.multiplier())) {
    out.value = false;
    out.reason = "no power of " + ring.to_string(a.multiplier()) + " vanishes on the unit";
  } else {
    out.reason = "exponent bound " + std::to_string(out.exponent_bound) + " exceeded";
  }
  return out;
}

IdentityEndo rho_descend(const IdentityEndo& a, const OpenSet& v1) {
  return IdentityEndo(v1, restriction(a.home(), v1).apply(a.multiplier()));
}

bool RingedSpaceModel::homeomorphic() const {
  return std::all_of(space.begin(), space.end(), [](const SpaceRow& r) { return r.match; });
}

bool RingedSpaceModel::fixed_point() const {
  if (!(ring == reduced_ring)) return false;
  for (const auto& s : sections)
    if (!s.match || !(s.reduced == s.sections)) return false;
  return homeomorphic() && std::all_of(stalks.begin(), stalks.end(), [](const StalkRow& r) { return r.match; });
}

const Ring& RingedSpaceModel::global_sections() const {
  for (const auto& s : sections)
    if (s.complement.is_empty()) return s.reduced;
  throw std::logic_error("no global sections row");
}

RingedSpaceModel reconstruct_ringed_space(const Ring& ring, unsigned bound, const HomLimits& limits) {
  if (bound < 1) throw InvalidArgument("bound must be at least 1");
  const PointEnumeration e = enumerate_points(ring, bound);
  const NilradicalQuotient nq(ring);
  RingedSpaceModel m{ring, nq.reduced(), bound, !e.complete, SpectrumModel(ring, bound), {}, {}, {}, {}, 0, 0, false, {}};
  const RingMap pi = reduction_map(ring, m.reduced_ring);
  const SpectrumModel& spc = m.spectrum;
  m.covering = spc.covering_relations();

  // points: Spc against Spec(R_red)
  const TopologyReport topo = check_topology_axioms(spc);
  for (const auto& f : topo.failures) m.failures.push_back("topology: " + f);
  const auto& pts = spc.points();
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const auto back = E_inverse(pts[i].support);
    SpaceRow row{point_label(ring, pts[i].descriptor), pts[i].support.to_string(), "-", false};
    if (back && is_point_of(m.reduced_ring, *back)) {
      row.spec_point = point_label(m.reduced_ring, *back);
      row.match = contraction(pi, *back) == pts[i].descriptor;
      for (std::size_t j = 0; j < pts.size(); ++j)
        if (spc.specializes(i, j) != specializes(*back, pts[j].descriptor)) row.match = false;
    }
    if (!row.match) m.failures.push_back("point " + row.label + " has no matching point of Spec(R_red)");
    m.space.push_back(std::move(row));
  }

  // sections over the enumerated basic opens
  const auto supports = all_supports(ring, e);
  std::vector<OpenSet> opens, red_opens;
  for (const auto& y : supports) {
    opens.emplace_back(y);
    red_opens.emplace_back(preimage_support(pi, y));
  }
  for (std::size_t k = 0; k < opens.size(); ++k) {
    const OpenSet& v = opens[k];
    const Ring rv = section_ring(v);
    const NilradicalQuotient nv(rv);
    SectionRow row{v.complement(), rv, "", true, nv.reduced(), section_ring(red_opens[k]), false};
    bool pnil_ok = true;
    const std::vector<Complex> gens{unit(rv)};
    for (std::size_t c = 0; c < rv.size(); ++c) {
      const bool finite = rv.component(c).kind() == ComponentKind::quotient;
      row.pnil_exhaustive = row.pnil_exhaustive && finite;
      std::vector<Element> pnil;
      for (const auto& r : finite ? component_elements(rv, c) : component_samples(rv, c, bound)) {
        const NilpotenceCheck n = is_pointwise_nilpotent(IdentityEndo(v, r), gens, limits);
        if (!n.value) {
          m.failures.push_back("PNil undecided on " + rv.to_string(r) + ": " + n.reason);
          pnil_ok = false;
          continue;
        }
        if (*n.value) pnil.push_back(r);
        if (*n.value != rv.is_zero(nv.project(r))) pnil_ok = false;
      }
      if (c > 0) row.pnil += "; ";
      row.pnil += rv.component(c).name() + ": " + (finite ? describe(rv, pnil) : "0 (sampled)");
    }
    if (rv.is_zero_ring()) row.pnil = "0";
    if (!pnil_ok) m.failures.push_back("PNil differs from the nilradical over " + v.to_string());
    row.match = pnil_ok && row.reduced == row.expected;
    if (!row.match) {
      m.failures.push_back("sections over " + v.to_string() + ": " + row.reduced.name() + " vs " + row.expected.name());
    }
    m.sections.push_back(std::move(row));
  }

  // restrictions commute
  for (std::size_t a = 0; a < opens.size() && m.restrictions_checked < kMaxRestrictionTriples; ++a)
    for (std::size_t b = 0; b < opens.size(); ++b) {
      if (!opens[b].is_subset_of(opens[a])) continue;
      for (std::size_t c = 0; c < opens.size(); ++c) {
        if (!opens[c].is_subset_of(opens[b])) continue;
        ++m.restrictions_checked;
        if (!(compose(restriction(opens[b], opens[c]), restriction(opens[a], opens[b])) ==
              restriction(opens[a], opens[c]))) {
          m.failures.push_back("restrictions do not commute");
        }
      }
    }

  // sheaf condition on two-element covers, for finite rings
  if (ring.cardinality() && e.complete) {
    m.sheaf_exhaustive = true;
    for (std::size_t a = 0; a < opens.size(); ++a)
      for (std::size_t b = 0; b < opens.size(); ++b)
        for (std::size_t c = b + 1; c < opens.size(); ++c) {
          if (b == a || c == a || !opens[b].is_subset_of(opens[a]) || !opens[c].is_subset_of(opens[a])) continue;
          if (!(intersect(supports[b], supports[c]) == supports[a])) continue;
          const OpenSet meet(unite(supports[b], supports[c]));
          const OpenSet red_meet(preimage_support(pi, meet.complement()));
          ++m.sheaf_conditions_checked;
          const bool raw = gluing_holds(restriction(opens[a], opens[b]), restriction(opens[a], opens[c]),
                                        restriction(opens[b], meet), restriction(opens[c], meet));
          const bool red = gluing_holds(restriction(red_opens[a], red_opens[b]), restriction(red_opens[a], red_opens[c]),
                                        restriction(red_opens[b], red_meet), restriction(red_opens[c], red_meet));
          if (!raw || !red) m.failures.push_back("gluing fails over " + opens[a].to_string());
        }
  }

  // stalks
  for (const auto& x : e.points) {
    const Component& c = ring.component(x.component);
    const Component& rc = m.reduced_ring.component(x.component);
    StalkRow row{x, point_label(ring, x), "", "", "", std::nullopt, false};
    const OpenSet v(smallest_open_complement(ring, e, x));
    const Ring local = section_ring(v);
    if (c.kind() == ComponentKind::quotient) {
      const Ring reduced = nilradical_quotient(local).reduced();
      const Ring expected = Ring::from_component(Component::quotient(rc.base_ring(), *x.prime));
      row.stalk = local.name();
      row.reduced_stalk = reduced.name();
      row.expected = expected.name();
      row.finite = reduced;
      row.match = reduced == expected;
    } else {
      // the enumerated approximant: only x and its generizations remain
      bool only_x = local.size() == 1 && local == nilradical_quotient(local).reduced();
      for (const auto& y : enumerate_points(local, bound).points)
        if (!y.is_generic() && !(x.prime && *y.prime == *x.prime)) only_x = false;
      row.stalk = local_ring_label(c, x);
      row.reduced_stalk = row.stalk;
      row.expected = local_ring_label(rc, x);
      row.match = only_x && row.reduced_stalk == row.expected;
    }
    if (!row.match) m.failures.push_back("stalk at " + row.label + ": " + row.reduced_stalk + " vs " + row.expected);
    m.stalks.push_back(std::move(row));
  }
  return m;
}

}  // namespace ttg
