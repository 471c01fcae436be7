#include "ttg/presheaf.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

#include "ttg/error.hpp"

namespace ttg {

namespace {

Element open_witness(const Support& complement) {
  const Ring& ring = complement.ring();
  Element f;
  for (std::size_t c = 0; c < ring.size(); ++c) {
    const Component& comp = ring.component(c);
    const auto& part = complement.component(c);
    if (part.whole) {
      f.parts.push_back(comp.zero());
      continue;
    }
    BaseElem prod = comp.base_ring().one();
    for (const auto& q : part.points) prod = comp.base_ring().mul(prod, q);
    f.parts.push_back(comp.from_base(prod));
  }
  return f;
}

/// Target component of `loc` fed by source component i, if any.
std::optional<std::size_t> image_component(const RingMap& loc, std::size_t i) {
  for (std::size_t j = 0; j < loc.assignments().size(); ++j)
    if (loc.assignments()[j].source_component == i) return j;
  return std::nullopt;
}

BaseElem lcm(const BaseRing& b, const BaseElem& x, const BaseElem& y) {
  return b.canonical(b.exact_div(b.mul(x, y), b.gcd(x, y)));
}

/// Lifts entries of a matrix over the localization `t` back to `s` after
/// multiplying by a common denominator.
///
/// For quotients B/(d) -> B/(d') the lift is the CRT solution that is x
/// modulo d' and 0 modulo d/d'; the scale is then 1.
class Lifter {
 public:
  Lifter(const Component& s, const Component& t) : s_(s), t_(t) {
    if (t.kind() == ComponentKind::quotient && !(s == t)) {
      const BaseRing& b = s.base_ring();
      const BaseElem e = b.exact_div(s.parameter(), t.parameter());
      const BaseRing::Bezout bz = b.ext_gcd(e, t.parameter());
      if (!b.is_one(bz.g)) throw std::logic_error("localized modulus is not a coprime factor");
      idempotent_ = b.mul(e, bz.x);
    }
  }

  BaseElem denominator(const Matrix& m) const {
    const BaseRing& b = s_.base_ring();
    BaseElem out = b.one();
    if (t_.kind() == ComponentKind::quotient) return out;
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (std::size_t c = 0; c < m.cols(); ++c) out = lcm(b, out, m(r, c).den);
    return out;
  }

  Matrix lift(const Matrix& m, const BaseElem& scale) const {
    const BaseRing& b = s_.base_ring();
    return transform(m, [&](const Scalar& x) {
      if (idempotent_) return s_.from_base(b.mod(b.mul(x.num, *idempotent_), s_.parameter()));
      if (t_.kind() == ComponentKind::quotient) return s_.from_base(x.num);
      return s_.from_base(b.mul(x.num, b.exact_div(scale, x.den)));
    });
  }

 private:
  const Component& s_;
  const Component& t_;
  std::optional<BaseElem> idempotent_;
};

bool same_homology(const Complex& a, const Complex& b) {
  if (!(a.ring() == b.ring())) return false;
  if (a.is_zero() || b.is_zero()) return is_acyclic(a) && is_acyclic(b);
  const int lo = std::min(a.lo(), b.lo()), hi = std::max(a.hi(), b.hi());
  for (int n = lo; n <= hi; ++n)
    if (!(homology(a, n) == homology(b, n))) return false;
  return true;
}

}  // namespace

OpenSet::OpenSet(Support complement) : complement_(std::move(complement)), witness_(open_witness(complement_)) {}

std::string OpenSet::to_string() const { return "Spec " + ring().name() + " - " + complement_.to_string(); }

Support J_of_open(const OpenSet& v) { return v.complement(); }

Support J_by_points(const OpenSet& v, unsigned bound) {
  Support out(v.ring());
  for (const auto& x : enumerate_points(v.ring(), bound).points)
    if (!v.contains(x)) out = unite(out, Support::closure(v.ring(), x));
  return out;
}

RingMap section_map(const OpenSet& v) { return localization_map(v.ring(), v.witness()); }

Ring section_ring(const OpenSet& v) { return section_map(v).target(); }

RingMap restriction(const OpenSet& v2, const OpenSet& v1) {
  if (!(v1.ring() == v2.ring())) throw InvalidArgument("restriction: opens of different rings");
  if (!v1.is_subset_of(v2)) throw InvalidArgument("restriction: " + v1.to_string() + " is not inside " + v2.to_string());
  const RingMap outer = section_map(v2);
  RingMap r = localization_map(outer.target(), outer.apply(v1.witness()));
  if (!(r.target() == section_ring(v1))) throw std::logic_error("restriction does not land in the smaller section ring");
  return r;
}

Complex localize_object(const Complex& p, const OpenSet& v) { return pullback(section_map(v), p); }

ClearedComplex clear_denominators(const RingMap& loc, const Complex& p) {
  if (!(p.ring() == loc.target())) throw InvalidArgument("clear_denominators: complex over the wrong ring");
  const Ring& source = loc.source();
  std::vector<ComponentComplex> blocks;
  std::vector<DegreeMatrices> to(loc.target().size()), from(loc.target().size());
  for (std::size_t i = 0; i < source.size(); ++i) {
    const Component& s = source.component(i);
    const auto j = image_component(loc, i);
    if (!j || p.block(*j).is_zero()) {
      blocks.emplace_back(s);
      continue;
    }
    const Component& t = loc.target().component(*j);
    const auto& b = p.block(*j);
    const Lifter lifter(s, t);
    std::vector<std::size_t> ranks;
    std::vector<Matrix> diffs;
    Scalar c = t.one();
    for (int n = b.lo(); n <= b.hi(); ++n) {
      ranks.push_back(b.rank(n));
      if (n > b.lo()) {
        const Matrix d = b.differential(n);
        const BaseElem scale = lifter.denominator(d);
        diffs.push_back(lifter.lift(d, scale));
        c = t.mul(c, loc.apply_scalar(*j, s.from_base(scale)));
      }
      to[*j][n] = Matrix::scalar(t, b.rank(n), c);
      from[*j][n] = Matrix::scalar(t, b.rank(n), t.inverse(c));
    }
    blocks.emplace_back(s, b.lo(), std::move(ranks), std::move(diffs));
  }
  Complex q(source, std::move(blocks));
  const Complex lq = pullback(loc, q);
  return ClearedComplex{q, ChainMap(lq, p, std::move(to)), ChainMap(p, lq, std::move(from))};
}

bool verify_cleared(const RingMap& loc, const Complex& p, const ClearedComplex& c) {
  const Complex lq = pullback(loc, c.q);
  if (!(c.to_p.source() == lq) || !(c.to_p.target() == p)) return false;
  if (!(c.from_p.source() == p) || !(c.from_p.target() == lq)) return false;
  const HomLimits generous{1u << 14};
  const ChainMap a = subtract(compose(c.from_p, c.to_p), ChainMap::identity(lq));
  const ChainMap b = subtract(compose(c.to_p, c.from_p), ChainMap::identity(p));
  const auto ha = null_homotopy(a, generous);
  const auto hb = null_homotopy(b, generous);
  return ha && hb && verify_homotopy(a, *ha) && verify_homotopy(b, *hb);
}

FractionReport fraction_spotcheck(const Complex& x, const Complex& y, const OpenSet& v, std::size_t budget,
                                  const HomLimits& limits) {
  if (!(x.ring() == v.ring()) || !(y.ring() == v.ring())) throw InvalidArgument("fraction_spotcheck: ring mismatch");
  const Ring& ring = v.ring();
  const RingMap loc = section_map(v);
  const Complex xv = pullback(loc, x), yv = pullback(loc, y);
  FractionReport r;

  std::vector<ChainMap> samples = chain_map_generators(xv, yv, limits);
  const std::size_t gens = samples.size();
  for (std::size_t k = 0; k + 1 < gens; ++k) samples.push_back(add(samples[k], samples[k + 1]));
  if (samples.size() > budget) {
    samples.erase(samples.begin() + static_cast<std::ptrdiff_t>(budget), samples.end());
    r.budget_exhausted = true;
  }

  for (const auto& g : samples) {
    ++r.sampled;
    std::vector<DegreeMatrices> h(ring.size());
    Element s = ring.one();
    for (std::size_t i = 0; i < ring.size(); ++i) {
      const auto j = image_component(loc, i);
      if (!j) continue;
      const Component& sc = ring.component(i);
      const Lifter lifter(sc, loc.target().component(*j));
      BaseElem scale = sc.base_ring().one();
      for (const auto& [n, m] : g.components()[*j]) scale = lcm(sc.base_ring(), scale, lifter.denominator(m));
      for (const auto& [n, m] : g.components()[*j]) h[i][n] = lifter.lift(m, scale);
      s.parts[i] = sc.from_base(scale);
    }
    try {
      const ChainMap hm(x, y, std::move(h));
      if (!supph(cone(ChainMap::multiplication(y, s)).cone()).is_subset_of(v.complement())) {
        ++r.missed;
        r.notes.push_back("denominator is not supported in the complement");
        continue;
      }
      if (!is_null_homotopic(subtract(pullback(loc, hm), scale(loc.apply(s), g)), limits)) {
        ++r.missed;
        r.notes.push_back("cleared map does not localize to the sample");
        continue;
      }
      ++r.found;
    } catch (const InvalidArgument& e) {
      ++r.missed;
      r.notes.push_back(std::string("lift is not a chain map: ") + e.what());
    }
  }

  r.hom_before = hom_up_to_homotopy(x, y, limits);
  r.hom_after = hom_up_to_homotopy(xv, yv, limits);
  ModuleClass expected;
  for (std::size_t j = 0; j < loc.target().size(); ++j) {
    const std::size_t i = loc.assignments()[j].source_component;
    expected.components.push_back(
        localize_module(ring.component(i), loc.target().component(j), r.hom_before.components[i]));
  }
  r.hom_localizes = expected == r.hom_after;
  if (!r.hom_localizes) {
    r.notes.push_back("Hom localized " + to_string(loc.target(), expected) + " != " +
                      to_string(loc.target(), r.hom_after));
  }
  return r;
}

std::size_t molecular_check(const Ring& ring, unsigned bound) {
  const PointEnumeration e = enumerate_points(ring, bound);
  std::size_t n = 0;
  for (const auto& y : all_supports(ring, e)) {
    Support u(ring);
    for (const auto& x : y.points_in(e)) u = unite(u, Support::closure(ring, x));
    if (!(u == y)) throw std::logic_error(y.to_string() + " is not the union of its point closures");
    ++n;
  }
  return n;
}

RingMap localized_map(const RingMap& f, const OpenSet& v) {
  if (!(v.ring() == f.source())) throw InvalidArgument("localized_map: open of the wrong ring");
  const RingMap src = section_map(v);
  const OpenSet w(preimage_support(f, v.complement()));
  const RingMap dst = section_map(w);
  std::vector<ComponentAssignment> a;
  for (std::size_t k = 0; k < dst.target().size(); ++k) {
    const std::size_t j = dst.assignments()[k].source_component;
    const std::size_t i = f.assignments()[j].source_component;
    const auto m = image_component(src, i);
    if (!m) throw std::logic_error("localized_map: preimage open meets a dropped component");
    std::optional<Scalar> t;
    if (f.assignments()[j].t_image) t = dst.apply_scalar(k, *f.assignments()[j].t_image);
    a.push_back({*m, t});
  }
  return RingMap(src.target(), dst.target(), std::move(a));
}

PresheafMorphismReport presheaf_morphism_check(const RingMap& f, const OpenSet& v, const std::vector<Complex>& samples) {
  PresheafMorphismReport r{supph(pullback(f, realize(v.complement()))), preimage_support(f, v.complement()), false, 0, {}};
  r.inclusion = r.image_of_J.is_subset_of(r.J_of_preimage);
  if (!r.inclusion) r.failures.push_back(r.image_of_J.to_string() + " not inside " + r.J_of_preimage.to_string());

  const OpenSet w(r.J_of_preimage);
  const RingMap fv = localized_map(f, v);
  const RingMap qv = section_map(v), qw = section_map(w);
  if (!(compose(fv, qv) == compose(qw, f))) r.failures.push_back("ring square does not commute");
  for (const auto& p : samples) {
    ++r.squares_checked;
    const Complex lhs = pullback(fv, pullback(qv, p));
    const Complex rhs = pullback(qw, pullback(f, p));
    if (!(lhs == rhs) && !same_homology(lhs, rhs)) r.failures.push_back("localization and pullback disagree");
  }
  return r;
}

}  // namespace ttg
