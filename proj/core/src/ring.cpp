#include "ttg/ring.hpp"

#include <algorithm>

#include "ttg/error.hpp"

namespace ttg {

Ring Ring::integers() { return Ring({Component::base(BaseRing::integers())}); }
Ring Ring::polynomials(std::uint32_t p) { return Ring({Component::base(BaseRing::polynomials(p))}); }
Ring Ring::zero_ring() { return Ring({}); }
Ring Ring::from_component(Component c) { return Ring({std::move(c)}); }

Ring Ring::quotient(const Ring& base, const Element& d) {
  base.check(d);
  if (base.is_zero(d)) throw InvalidArgument("quotient generator must be nonzero");
  if (base.is_unit(d)) throw InvalidArgument("quotient generator must be a nonunit");
  std::vector<Component> out;
  for (std::size_t i = 0; i < base.size(); ++i) {
    const Component& c = base.component(i);
    const BaseRing& b = c.base_ring();
    const Scalar& di = d.parts[i];
    if (c.is_zero(di)) {
      out.push_back(c);
      continue;
    }
    BaseElem gen;
    switch (c.kind()) {
      case ComponentKind::base:
        gen = di.num;
        break;
      case ComponentKind::quotient:
        gen = b.gcd(di.num, c.parameter());
        break;
      case ComponentKind::localization:
        gen = coprime_part(b, di.num, c.parameter());
        break;
    }
    if (b.is_unit(gen)) continue;
    out.push_back(Component::quotient(b, gen));
  }
  return Ring(std::move(out));
}

Ring Ring::localization(const Ring& base, const Element& f) { return localize_ring(base, f); }

Ring Ring::product(const std::vector<Ring>& factors) {
  std::vector<Component> out;
  for (const auto& r : factors)
    for (const auto& c : r.components_) out.push_back(c);
  return Ring(std::move(out));
}

std::optional<mpz_class> Ring::cardinality() const {
  mpz_class n = 1;
  for (const auto& c : components_) {
    if (c.kind() != ComponentKind::quotient) return std::nullopt;
    const BaseRing& b = c.base_ring();
    if (b.is_integers()) {
      n *= std::get<mpz_class>(c.parameter());
    } else {
      mpz_class q;
      mpz_ui_pow_ui(q.get_mpz_t(), b.characteristic(),
                    static_cast<unsigned long>(std::get<Poly>(c.parameter()).degree()));
      n *= q;
    }
  }
  return n;
}

Element Ring::zero() const {
  Element e;
  for (const auto& c : components_) e.parts.push_back(c.zero());
  return e;
}

Element Ring::one() const {
  Element e;
  for (const auto& c : components_) e.parts.push_back(c.one());
  return e;
}

Element Ring::from_int(long v) const {
  Element e;
  for (const auto& c : components_) e.parts.push_back(c.from_int(v));
  return e;
}

Element Ring::from_base(const BaseElem& a) const {
  Element e;
  for (const auto& c : components_) e.parts.push_back(c.from_base(a));
  return e;
}

Element Ring::embed(std::size_t i, const Scalar& value) const {
  Element e = zero();
  e.parts.at(i) = value;
  return e;
}

namespace {

template <class Op>
Element zip(const std::vector<Component>& comps, const Element& a, const Element& b, Op op) {
  Element e;
  e.parts.reserve(comps.size());
  for (std::size_t i = 0; i < comps.size(); ++i) e.parts.push_back(op(comps[i], a.parts[i], b.parts[i]));
  return e;
}

}  // namespace

Element Ring::add(const Element& a, const Element& b) const {
  return zip(components_, a, b, [](const Component& c, const Scalar& x, const Scalar& y) { return c.add(x, y); });
}

Element Ring::sub(const Element& a, const Element& b) const {
  return zip(components_, a, b, [](const Component& c, const Scalar& x, const Scalar& y) { return c.sub(x, y); });
}

Element Ring::mul(const Element& a, const Element& b) const {
  return zip(components_, a, b, [](const Component& c, const Scalar& x, const Scalar& y) { return c.mul(x, y); });
}

Element Ring::neg(const Element& a) const {
  Element e;
  for (std::size_t i = 0; i < size(); ++i) e.parts.push_back(components_[i].neg(a.parts[i]));
  return e;
}

Element Ring::pow(const Element& a, unsigned e) const {
  Element out;
  for (std::size_t i = 0; i < size(); ++i) out.parts.push_back(components_[i].pow(a.parts[i], e));
  return out;
}

bool Ring::is_zero(const Element& a) const {
  for (std::size_t i = 0; i < size(); ++i)
    if (!components_[i].is_zero(a.parts[i])) return false;
  return true;
}

bool Ring::is_unit(const Element& a) const {
  for (std::size_t i = 0; i < size(); ++i)
    if (!components_[i].is_unit(a.parts[i])) return false;
  return true;
}

bool Ring::is_nilpotent(const Element& a) const {
  for (std::size_t i = 0; i < size(); ++i)
    if (!components_[i].is_nilpotent(a.parts[i])) return false;
  return true;
}

std::optional<unsigned> Ring::nilpotency_index(const Element& a) const {
  unsigned index = 1;
  for (std::size_t i = 0; i < size(); ++i) {
    auto k = components_[i].nilpotency_index(a.parts[i]);
    if (!k) return std::nullopt;
    index = std::max(index, *k);
  }
  return index;
}

std::vector<Element> Ring::elements(std::size_t limit) const {
  const auto card = cardinality();
  if (!card) throw UnsupportedRing(name() + " is infinite");
  if (*card > limit) throw BoundExceeded(name() + " has more than " + std::to_string(limit) + " elements");
  std::vector<std::vector<Scalar>> per_component;
  for (const auto& c : components_) {
    std::vector<Scalar> residues;
    const BaseRing& b = c.base_ring();
    if (b.is_integers()) {
      const mpz_class& d = std::get<mpz_class>(c.parameter());
      for (mpz_class v = 0; v < d; ++v) residues.push_back(c.from_base(BaseElem(v)));
    } else {
      const int deg = std::get<Poly>(c.parameter()).degree();
      const std::uint32_t p = b.characteristic();
      std::vector<std::int64_t> coeffs(static_cast<std::size_t>(deg), 0);
      for (;;) {
        residues.push_back(c.from_base(b.poly(coeffs)));
        std::size_t i = 0;
        while (i < coeffs.size() && ++coeffs[i] == p) coeffs[i++] = 0;
        if (i == coeffs.size()) break;
      }
    }
    per_component.push_back(std::move(residues));
  }
  std::vector<Element> out{Element{}};
  for (const auto& residues : per_component) {
    std::vector<Element> next;
    for (const auto& partial : out) {
      for (const auto& r : residues) {
        Element e = partial;
        e.parts.push_back(r);
        next.push_back(std::move(e));
      }
    }
    out = std::move(next);
  }
  return out;
}

void Ring::check(const Element& a) const {
  if (a.parts.size() != size()) {
    throw InvalidArgument("element has " + std::to_string(a.parts.size()) + " parts, ring " + name() + " has " +
                          std::to_string(size()) + " components");
  }
}

std::string Ring::to_string(const Element& a) const {
  if (size() == 1) return components_[0].to_string(a.parts[0]);
  std::string s = "(";
  for (std::size_t i = 0; i < size(); ++i) {
    if (i > 0) s += ", ";
    s += components_[i].to_string(a.parts[i]);
  }
  return s + ")";
}

std::string Ring::name() const {
  if (components_.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < size(); ++i) {
    if (i > 0) s += " x ";
    s += components_[i].name();
  }
  return s;
}

PointEnumeration enumerate_points(const Ring& ring, unsigned bound) {
  if (bound < 1) throw InvalidArgument("enumeration bound must be >= 1");
  PointEnumeration out;
  for (std::size_t i = 0; i < ring.size(); ++i) {
    const Component& c = ring.component(i);
    const BaseRing& b = c.base_ring();
    if (c.kind() == ComponentKind::quotient) {
      for (auto& q : prime_divisors(b, c.parameter())) out.points.push_back({i, std::move(q)});
      continue;
    }
    out.points.push_back({i, std::nullopt});
    for (auto& q : enumerate_primes(b, bound)) {
      if (c.contains_prime(q)) out.points.push_back({i, std::move(q)});
    }
    out.complete = false;
  }
  return out;
}

bool is_point_of(const Ring& ring, const PointDescriptor& x) {
  if (x.component >= ring.size()) return false;
  const Component& c = ring.component(x.component);
  if (x.is_generic()) return c.has_generic_point();
  const BaseRing& b = c.base_ring();
  if (!(b.canonical(*x.prime) == *x.prime)) return false;
  return is_prime_element(b, *x.prime) && c.contains_prime(*x.prime);
}

bool specializes(const PointDescriptor& y, const PointDescriptor& x) {
  if (y.component != x.component) return false;
  return y.is_generic() || y == x;
}

std::string point_label(const Ring& ring, const PointDescriptor& x) {
  std::string s = x.is_generic() ? std::string("eta") : "(" + ring.component(x.component).base_ring().to_string(*x.prime) + ")";
  if (ring.is_product()) s += "@" + std::to_string(x.component);
  return s;
}

bool point_less(const Ring& ring, const PointDescriptor& a, const PointDescriptor& b) {
  if (a.component != b.component) return a.component < b.component;
  if (a.is_generic() != b.is_generic()) return a.is_generic();
  if (a.is_generic()) return false;
  return ring.component(a.component).base_ring().less(*a.prime, *b.prime);
}

Ring localize_ring(const Ring& ring, const Element& f) {
  ring.check(f);
  if (ring.is_zero(f)) throw InvalidArgument("cannot localize at zero");
  std::vector<Component> out;
  for (std::size_t i = 0; i < ring.size(); ++i) {
    const Component& c = ring.component(i);
    const BaseRing& b = c.base_ring();
    const Scalar& fi = f.parts[i];
    if (c.is_zero(fi)) continue;
    switch (c.kind()) {
      case ComponentKind::base:
        out.push_back(b.is_unit(fi.num) ? c : Component::localization(b, fi.num));
        break;
      case ComponentKind::localization: {
        const BaseElem extra = coprime_part(b, fi.num, c.parameter());
        out.push_back(b.is_unit(extra) ? c : Component::localization(b, b.mul(c.parameter(), extra)));
        break;
      }
      case ComponentKind::quotient: {
        const BaseElem rest = coprime_part(b, c.parameter(), fi.num);
        if (!b.is_unit(rest)) out.push_back(Component::quotient(b, rest));
        break;
      }
    }
  }
  return Ring::from_components(std::move(out));
}

NilradicalQuotient::NilradicalQuotient(const Ring& ring) : source_(ring), reduced_(ring) {
  std::vector<Component> out;
  for (const auto& c : ring.components()) {
    if (c.kind() == ComponentKind::quotient) {
      out.push_back(Component::quotient(c.base_ring(), radical(c.base_ring(), c.parameter())));
    } else {
      out.push_back(c);
    }
  }
  reduced_ = Ring::from_components(std::move(out));
}

Element NilradicalQuotient::project(const Element& a) const {
  source_.check(a);
  Element out;
  for (std::size_t i = 0; i < reduced_.size(); ++i) {
    out.parts.push_back(reduced_.component(i).from_base(source_.component(i).lift(a.parts[i])));
  }
  return out;
}

}  // namespace ttg
