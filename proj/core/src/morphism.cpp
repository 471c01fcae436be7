#include "ttg/morphism.hpp"

#include <algorithm>
#include <stdexcept>

#include "ttg/error.hpp"
#include "ttg/factor.hpp"

namespace ttg {

namespace {

Scalar integer_in(const Component& c, const mpz_class& n) {
  const BaseRing& b = c.base_ring();
  if (b.is_integers()) return c.from_base(BaseElem(n));
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), n.get_mpz_t(), b.characteristic());
  return c.from_base(b.poly({r.get_si()}));
}

bool polynomial_type(const Component& c) { return !c.base_ring().is_integers(); }

/// Closed points of V(a) in component c for an element a of c.
std::vector<BaseElem> zero_locus_of(const Component& c, const Scalar& a) {
  const BaseRing& b = c.base_ring();
  std::vector<BaseElem> out;
  for (auto& q : prime_divisors(b, c.lift(a)))
    if (c.contains_prime(q)) out.push_back(std::move(q));
  return out;
}

}  // namespace

RingMap::RingMap(Ring source, Ring target, std::vector<ComponentAssignment> assignments)
    : source_(std::move(source)), target_(std::move(target)), assignments_(std::move(assignments)) {
  if (assignments_.size() != target_.size()) throw InvalidArgument("ring map needs one assignment per target component");
  for (std::size_t j = 0; j < assignments_.size(); ++j) {
    auto& a = assignments_[j];
    if (a.source_component >= source_.size()) throw InvalidArgument("ring map assignment out of range");
    const Component& s = source_.component(a.source_component);
    const Component& t = target_.component(j);
    if (polynomial_type(s)) {
      if (!a.t_image) throw InvalidArgument("ring map out of " + s.name() + " needs an image of t");
      if (!t.is_zero(integer_in(t, s.base_ring().characteristic()))) {
        throw InvalidArgument("characteristic mismatch: " + s.name() + " -> " + t.name());
      }
      a.t_image = t.add(*a.t_image, t.zero());
    } else {
      a.t_image.reset();
    }
    if (s.kind() == ComponentKind::quotient && !t.is_zero(apply_base(j, s.parameter()))) {
      throw InvalidArgument("ring map does not kill " + s.base_ring().to_string(s.parameter()));
    }
    if (s.kind() == ComponentKind::localization && !t.is_unit(apply_base(j, s.parameter()))) {
      throw InvalidArgument("ring map does not invert " + s.base_ring().to_string(s.parameter()));
    }
  }
}

RingMap RingMap::identity(const Ring& r) {
  std::vector<ComponentAssignment> a;
  for (std::size_t j = 0; j < r.size(); ++j) {
    const Component& c = r.component(j);
    std::optional<Scalar> t;
    if (polynomial_type(c)) t = c.from_base(c.base_ring().variable());
    a.push_back({j, t});
  }
  return RingMap(r, r, std::move(a));
}

RingMap RingMap::canonical(const Ring& source, const Ring& target) {
  if (source == target) return identity(source);
  if (source.size() != 1 || polynomial_type(source.component(0))) {
    throw InvalidArgument("no canonical map out of " + source.name());
  }
  return RingMap(source, target, std::vector<ComponentAssignment>(target.size()));
}

RingMap RingMap::polynomial(const Ring& source, const Ring& target, const Element& t_image) {
  if (source.size() != 1 || !polynomial_type(source.component(0))) {
    throw InvalidArgument(source.name() + " is not a polynomial-type ring");
  }
  target.check(t_image);
  std::vector<ComponentAssignment> a;
  for (std::size_t j = 0; j < target.size(); ++j) a.push_back({0, t_image.parts[j]});
  return RingMap(source, target, std::move(a));
}

Scalar RingMap::apply_base(std::size_t j, const BaseElem& a) const {
  const Component& s = source_.component(assignments_.at(j).source_component);
  const Component& t = target_.component(j);
  if (s.base_ring().is_integers()) return integer_in(t, std::get<mpz_class>(a));
  const auto& coeffs = std::get<Poly>(a).coeffs;
  const Scalar& tau = *assignments_[j].t_image;
  Scalar out = t.zero();
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    out = t.add(t.mul(out, tau), integer_in(t, mpz_class(static_cast<unsigned long>(*it))));
  }
  return out;
}

Scalar RingMap::apply_scalar(std::size_t j, const Scalar& a) const {
  const Component& t = target_.component(j);
  const Scalar num = apply_base(j, a.num);
  const Scalar den = apply_base(j, a.den);
  return t.mul(num, t.inverse(den));
}

Element RingMap::apply(const Element& a) const {
  source_.check(a);
  Element out;
  for (std::size_t j = 0; j < target_.size(); ++j)
    out.parts.push_back(apply_scalar(j, a.parts[assignments_[j].source_component]));
  return out;
}

std::string RingMap::to_string() const {
  std::string s = source_.name() + " -> " + target_.name();
  bool any = false;
  for (std::size_t j = 0; j < assignments_.size(); ++j) {
    if (!assignments_[j].t_image) continue;
    s += any ? ", " : ": ";
    s += "t -> " + target_.component(j).to_string(*assignments_[j].t_image);
    if (target_.is_product()) s += "@" + std::to_string(j);
    any = true;
  }
  return s;
}

RingMap compose(const RingMap& g, const RingMap& f) {
  if (!(f.target() == g.source())) throw InvalidArgument("compose: target of f is not the source of g");
  std::vector<ComponentAssignment> a;
  for (std::size_t k = 0; k < g.target().size(); ++k) {
    const std::size_t j = g.assignments()[k].source_component;
    const auto& fa = f.assignments()[j];
    std::optional<Scalar> t;
    if (fa.t_image) {
      t = g.apply_scalar(k, *fa.t_image);
    }
    a.push_back({fa.source_component, t});
  }
  return RingMap(f.source(), g.target(), std::move(a));
}

RingMap localization_map(const Ring& ring, const Element& f) {
  ring.check(f);
  std::vector<Component> comps;
  std::vector<ComponentAssignment> a;
  for (std::size_t i = 0; i < ring.size(); ++i) {
    const Component& c = ring.component(i);
    if (c.is_zero(f.parts[i])) continue;
    const Ring single = Ring::from_component(c);
    const Ring local = localize_ring(single, Element{{f.parts[i]}});
    for (const auto& lc : local.components()) {
      std::optional<Scalar> t;
      if (polynomial_type(lc)) t = lc.from_base(lc.base_ring().variable());
      comps.push_back(lc);
      a.push_back({i, t});
    }
  }
  return RingMap(ring, Ring::from_components(std::move(comps)), std::move(a));
}

Complex pullback(const RingMap& f, const Complex& p) {
  if (!(p.ring() == f.source())) throw InvalidArgument("pullback: complex over the wrong ring");
  std::vector<ComponentComplex> blocks;
  for (std::size_t j = 0; j < f.target().size(); ++j) {
    const Component& t = f.target().component(j);
    const auto& b = p.block(f.assignments()[j].source_component);
    if (b.is_zero()) {
      blocks.emplace_back(t);
      continue;
    }
    std::vector<std::size_t> ranks;
    std::vector<Matrix> diffs;
    for (int n = b.lo(); n <= b.hi(); ++n) {
      ranks.push_back(b.rank(n));
      if (n == b.lo()) continue;
      const Matrix d = b.differential(n);
      Matrix out = Matrix::zero(t, d.rows(), d.cols());
      for (std::size_t r = 0; r < d.rows(); ++r)
        for (std::size_t c = 0; c < d.cols(); ++c) {
          out(r, c) = f.apply_scalar(j, d(r, c));
        }
      diffs.push_back(std::move(out));
    }
    blocks.emplace_back(t, b.lo(), std::move(ranks), std::move(diffs));
  }
  return Complex(f.target(), std::move(blocks));
}

ChainMap pullback(const RingMap& f, const ChainMap& m) {
  std::vector<DegreeMatrices> comps(f.target().size());
  for (std::size_t j = 0; j < f.target().size(); ++j) {
    const std::size_t s = f.assignments()[j].source_component;
    const Component& t = f.target().component(j);
    for (const auto& [n, mat] : m.components()[s]) {
      Matrix out = Matrix::zero(t, mat.rows(), mat.cols());
      for (std::size_t r = 0; r < mat.rows(); ++r)
        for (std::size_t c = 0; c < mat.cols(); ++c) {
          out(r, c) = f.apply_scalar(j, mat(r, c));
        }
      comps[j][n] = std::move(out);
    }
  }
  return ChainMap(pullback(f, m.source()), pullback(f, m.target()), std::move(comps));
}

PointDescriptor contraction(const RingMap& f, const PointDescriptor& y) {
  if (!is_point_of(f.target(), y)) throw InvalidArgument("contraction: not a point of " + f.target().name());
  const std::size_t j = y.component;
  const std::size_t s = f.assignments()[j].source_component;
  const Component& sc = f.source().component(s);
  const Component& tc = f.target().component(j);
  const BaseRing& sb = sc.base_ring();
  const BaseRing& tb = tc.base_ring();
  PointDescriptor out{s, std::nullopt};
  if (sb.is_integers()) {
    if (!tb.is_integers()) {
      out.prime = BaseElem(mpz_class(tb.characteristic()));
    } else if (!y.is_generic()) {
      out.prime = *y.prime;
    }
  } else {
    const Scalar& tau = *f.assignments()[j].t_image;
    if (tb.is_integers()) {
      // target Z/(p): t goes to a constant c, kernel (t - c)
      const long c = mpz_class(std::get<mpz_class>(tc.lift(tau))).get_si();
      out.prime = sb.canonical(sb.poly({-c, 1}));
    } else if (!y.is_generic()) {
      const BaseElem& q = *y.prime;
      const BaseElem num = tb.mod(tau.num, q);
      const BaseRing::Bezout inv = tb.ext_gcd(tb.mod(tau.den, q), q);
      const BaseElem value = tb.mod(tb.mul(num, tb.mul(inv.x, tb.unit_inverse(inv.g))), q);
      const int degree = std::get<Poly>(q).degree();
      for (const auto& m : enumerate_primes(sb, static_cast<unsigned>(degree))) {
        BaseElem acc = tb.zero();
        const auto& coeffs = std::get<Poly>(m).coeffs;
        for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
          acc = tb.mod(tb.add(tb.mul(acc, value), tb.poly({static_cast<std::int64_t>(*it)})), q);
        if (tb.is_zero(acc)) {
          out.prime = m;
          break;
        }
      }
      if (!out.prime) throw std::logic_error("no minimal polynomial found");
    } else {
      const BaseElem g = tb.gcd(tau.num, tau.den);
      const BaseElem num = tb.exact_div(tau.num, g), den = tb.exact_div(tau.den, g);
      if (std::get<Poly>(num).degree() <= 0 && std::get<Poly>(den).degree() == 0) {
        const BaseElem c = tb.mul(num, tb.unit_inverse(den));
        const long value = std::get<Poly>(c).is_zero() ? 0 : static_cast<long>(std::get<Poly>(c).coeffs[0]);
        out.prime = sb.canonical(sb.poly({-value, 1}));
      }
    }
  }
  if (!is_point_of(f.source(), out)) throw std::logic_error("contraction left Spec of the source");
  return out;
}

Support preimage_support(const RingMap& f, const Support& y) {
  if (!(y.ring() == f.source())) throw InvalidArgument("preimage_support: support over the wrong ring");
  std::vector<ComponentSupport> parts(f.target().size());
  for (std::size_t j = 0; j < f.target().size(); ++j) {
    const Component& tc = f.target().component(j);
    const auto& src = y.component(f.assignments()[j].source_component);
    auto& part = parts[j];
    if (src.whole) {
      part.whole = true;
      continue;
    }
    for (const auto& pi : src.points) {
      const Scalar image = f.apply_base(j, pi);
      if (tc.is_zero(image)) {
        part.whole = true;
        part.points.clear();
        break;
      }
      for (auto& q : zero_locus_of(tc, image)) part.points.push_back(std::move(q));
    }
  }
  return Support(f.target(), std::move(parts));
}

GeometricReport verify_geometric(const RingMap& f, const std::vector<Support>& family) {
  GeometricReport r;
  Support meet = Support::whole(f.source());
  Support meet_of_preimages = Support::whole(f.target());
  for (const auto& y : family) {
    meet = intersect(meet, y);
    const Support pre = preimage_support(f, y);
    meet_of_preimages = intersect(meet_of_preimages, pre);
    const Support realized = supph(pullback(f, realize(y)));
    r.checks.push_back("supph(f*(realize " + y.to_string() + ")) = f^-1 " + y.to_string());
    if (!(realized == pre)) r.failures.push_back("pullback support " + realized.to_string() + " != " + pre.to_string());
  }
  r.checks.push_back("f^-1 of the intersection of " + std::to_string(family.size()) + " supports");
  const Support lhs = preimage_support(f, meet);
  if (!(lhs == meet_of_preimages)) {
    r.failures.push_back("f^-1(meet) = " + lhs.to_string() + " but meet of preimages = " + meet_of_preimages.to_string());
  }
  r.checks.push_back("density: supph(f*(1)) is everything");
  r.dense = supph(pullback(f, unit(f.source()))) == Support::whole(f.target());
  if (!r.dense) r.failures.push_back("pullback of the unit does not have full support");
  return r;
}

SpectrumPoint spc_map(const RingMap& f, const SpectrumPoint& y) {
  return E_map(f.source(), contraction(f, y.descriptor));
}

Support spc_map_by_intersection(const RingMap& f, const PointDescriptor& y, unsigned bound) {
  Support out = Support::whole(f.source());
  for (const auto& x : enumerate_points(f.source(), bound).points) {
    const Support h = Support::closure(f.source(), x);
    if (preimage_support(f, h).contains(y)) out = intersect(out, h);
  }
  return out;
}

std::vector<Element> ring_generators(const Ring& r) {
  std::vector<Element> out{r.one()};
  for (std::size_t c = 0; c < r.size(); ++c) {
    const Component& comp = r.component(c);
    if (r.is_product()) out.push_back(r.embed(c, comp.one()));
    if (polynomial_type(comp)) out.push_back(r.embed(c, comp.from_base(comp.base_ring().variable())));
    if (comp.kind() == ComponentKind::localization) {
      out.push_back(r.embed(c, comp.inverse(comp.from_base(comp.parameter()))));
    }
  }
  return out;
}

bool maps_equal_via_derived(const RingMap& f, const RingMap& g, const std::vector<Element>& samples) {
  if (!(f.source() == g.source()) || !(f.target() == g.target())) return false;
  std::vector<Element> probe = ring_generators(f.source());
  probe.insert(probe.end(), samples.begin(), samples.end());
  const Complex u = unit(f.source());
  for (const auto& a : probe) {
    const ChainMap lambda = ChainMap::multiplication(u, a);
    if (!is_null_homotopic(subtract(pullback(f, lambda), pullback(g, lambda)))) return false;
  }
  return true;
}

}  // namespace ttg
