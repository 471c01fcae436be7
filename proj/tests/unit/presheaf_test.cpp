#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "ttg/error.hpp"
#include "ttg/presheaf.hpp"

using namespace ttg;
using namespace fixtures;

namespace {

PointDescriptor pt(long p, std::size_t c = 0) { return {c, zb(p)}; }

OpenSet z_minus(const std::vector<long>& primes) {
  std::vector<PointDescriptor> xs;
  for (long p : primes) xs.push_back(pt(p));
  return OpenSet(Support::of_points(Z(), xs));
}

Complex two_term(const Ring& r, const Matrix& d) {
  return Complex(r, {ComponentComplex(r.component(0), 0, {d.rows(), d.cols()}, {d})});
}

/// Random 2-term complex over a one-component ring, entries a/den^k.
Complex random_fraction_complex(const Ring& r, std::mt19937& rng, const BaseElem& den) {
  const Component& c = r.component(0);
  const BaseRing& b = c.base_ring();
  std::uniform_int_distribution<int> size(1, 2), value(-4, 4), power(0, 2);
  Matrix d = Matrix::zero(c, size(rng), size(rng));
  for (std::size_t i = 0; i < d.rows(); ++i)
    for (std::size_t j = 0; j < d.cols(); ++j) {
      BaseElem num = b.is_integers() ? BaseElem(mpz_class(value(rng)))
                                     : b.poly({value(rng) & 1, value(rng) & 1, value(rng) & 1});
      d(i, j) = c.fraction(num, b.pow(den, power(rng)));
    }
  return two_term(r, d);
}

bool same_homology(const Complex& a, const Complex& b) {
  for (int n = -3; n <= 3; ++n)
    if (!(homology(a, n) == homology(b, n))) return false;
  return true;
}

}  // namespace

TEST_CASE("open sets and their witnesses") {
  const OpenSet v = z_minus({2});
  CHECK(J_of_open(v) == Support::closure(Z(), pt(2)));
  CHECK(J_by_points(v, 13) == J_of_open(v));
  CHECK(v.witness() == Z().from_int(2));
  CHECK(section_ring(v) == localize_ring(Z(), Z().from_int(2)));
  CHECK(v.contains(pt(3)));
  CHECK_FALSE(v.contains(pt(2)));
  CHECK(v.contains({0, std::nullopt}));

  CHECK(section_ring(OpenSet(Support::closure(Zn(12), pt(2)))) == Zn(3));
  CHECK(section_ring(OpenSet::whole(Zn(12))) == Zn(12));
  CHECK(section_ring(OpenSet::empty(Zn(12))).is_zero_ring());
  CHECK(section_ring(OpenSet::empty(Z())).is_zero_ring());
  CHECK(section_ring(z_minus({2, 3})) == localize_ring(Z(), Z().from_int(6)));

  const Ring prod = Ring::product({Z(), Zn(4)});
  const OpenSet half(Support(prod, {{false, {}}, {false, {zb(2)}}}));
  CHECK(section_ring(half) == Z());
}

TEST_CASE("J by points agrees with J of the open") {
  for (const Ring& r : {Z(), Zn(12), Fpt(2), Ring::product({Zn(4), Zn(3)})}) {
    const PointEnumeration e = enumerate_points(r, 2);
    for (const auto& y : all_supports(r, e)) CHECK(J_by_points(OpenSet(y), 2) == y);
  }
}

TEST_CASE("restrictions compose") {
  for (const Ring& r : {Z(), Zn(12), Fpt(2), Ring::product({Z(), Zn(9)})}) {
    const auto supports = all_supports(r, enumerate_points(r, 1));
    std::vector<OpenSet> opens;
    for (const auto& y : supports) opens.emplace_back(y);
    std::size_t triples = 0;
    for (const auto& v3 : opens) {
      CHECK(restriction(v3, v3) == RingMap::identity(section_ring(v3)));
      for (const auto& v2 : opens) {
        if (!v2.is_subset_of(v3)) continue;
        for (const auto& v1 : opens) {
          if (!v1.is_subset_of(v2)) continue;
          CHECK(compose(restriction(v2, v1), restriction(v3, v2)) == restriction(v3, v1));
          ++triples;
        }
      }
    }
    CHECK(triples > 0);
  }
  CHECK_THROWS_AS(restriction(z_minus({2}), z_minus({})), InvalidArgument);
}

TEST_CASE("clear_denominators example") {
  const Ring z = Z();
  const RingMap loc = section_map(z_minus({2}));
  const Ring zh = loc.target();
  Matrix d(1, 1, zh.component(0).fraction(zb(-3), zb(2)));
  const Complex p = two_term(zh, d);
  const ClearedComplex c = clear_denominators(loc, p);
  CHECK(c.q == two_term(z, int_matrix(z, {{-3}})));
  CHECK(verify_cleared(loc, p, c));
}

TEST_CASE("clear_denominators round trips") {
  std::mt19937 rng(41);
  const Ring z = Z();
  const Ring f2 = Fpt(2);
  std::size_t checked = 0;
  const std::vector<std::pair<RingMap, BaseElem>> setups{
      {localization_map(z, z.from_int(2)), zb(2)},
      {localization_map(z, z.from_int(6)), zb(6)},
      {localization_map(f2, poly(f2, {0, 1})), f2.component(0).base_ring().poly({0, 1})},
  };
  for (const auto& [loc, den] : setups) {
    for (int k = 0; k < 12; ++k) {
      Complex p = random_fraction_complex(loc.target(), rng, den);
      if (k % 3 == 0) p = tensor(p, random_fraction_complex(loc.target(), rng, den));
      const ClearedComplex c = clear_denominators(loc, p);
      CHECK(verify_cleared(loc, p, c));
      CHECK(same_homology(pullback(loc, c.q), p));
      ++checked;
    }
  }
  CHECK(checked >= 20);

  // quotient components: Z/12 -> Z/3 lifts through CRT
  const RingMap q = section_map(OpenSet(Support::closure(Zn(12), pt(2))));
  const Complex p = two_term(Zn(3), int_matrix(Zn(3), {{2, 1}}));
  const ClearedComplex c = clear_denominators(q, p);
  CHECK(verify_cleared(q, p, c));
  CHECK(c.q.block(0).differential(1) == int_matrix(Zn(12), {{8, 4}}));
}

TEST_CASE("Hom localizes on V = Spec Z - {(2)}") {
  const Ring z = Z();
  const OpenSet v = z_minus({2});
  std::vector<Complex> objects{unit(z), koszul(z, z.from_int(2)), koszul(z, z.from_int(3)),
                               koszul(z, z.from_int(4)), koszul(z, z.from_int(6)),
                               shift(koszul(z, z.from_int(12))), tensor(koszul(z, z.from_int(2)), koszul(z, z.from_int(6)))};
  std::size_t pairs = 0;
  for (const auto& x : objects)
    for (const auto& y : objects) {
      const FractionReport r = fraction_spotcheck(x, y, v, 8, HomLimits{400});
      CHECK_MESSAGE(r.ok(), x.total_rank(), " -> ", y.total_rank());
      CHECK(r.found == r.sampled);
      ++pairs;
    }
  CHECK(pairs >= 30);

  const FractionReport r = fraction_spotcheck(koszul(z, z.from_int(2)), koszul(z, z.from_int(2)), v);
  CHECK_FALSE(r.hom_before.is_zero());
  CHECK(r.hom_after.is_zero());
}

TEST_CASE("fraction spotcheck on finite and polynomial rings") {
  const OpenSet v(Support::closure(Zn(12), pt(2)));
  for (const auto& x : {unit(Zn(12)), koszul(Zn(12), Zn(12).from_int(2)), koszul(Zn(12), Zn(12).from_int(3))})
    CHECK(fraction_spotcheck(x, unit(Zn(12)), v).ok());
  const Ring f2 = Fpt(2);
  const OpenSet w(Support::closure(f2, {0, f2.component(0).base_ring().poly({0, 1})}));
  for (const auto& x : {unit(f2), koszul(f2, poly(f2, {0, 1})), koszul(f2, poly(f2, {1, 1}))})
    CHECK(fraction_spotcheck(x, koszul(f2, poly(f2, {0, 0, 1})), w).ok());
}

TEST_CASE("supports are molecular") {
  CHECK(molecular_check(Z(), 7) == 17);
  CHECK(molecular_check(Zn(12), 1) == 4);
  CHECK(molecular_check(Fpt(2), 2) == 9);
}

TEST_CASE("presheaf morphisms") {
  const Ring z = Z();
  const Ring f2 = Fpt(2);
  const Ring f4 = Ring::quotient(f2, poly(f2, {1, 1, 1}));
  const std::vector<RingMap> maps{RingMap::canonical(z, Zn(12)), RingMap::canonical(z, Zn(5)),
                                  localization_map(z, z.from_int(3)),
                                  RingMap::polynomial(f2, f4, poly(f4, {0, 1}))};
  for (const auto& f : maps) {
    std::vector<Complex> samples{unit(f.source())};
    for (const auto& x : enumerate_points(f.source(), 2).points)
      if (!x.is_generic()) samples.push_back(koszul_at(f.source(), x));
    for (const auto& y : all_supports(f.source(), enumerate_points(f.source(), 2))) {
      const auto r = presheaf_morphism_check(f, OpenSet(y), samples);
      CHECK(r.ok());
      CHECK(r.squares_checked == samples.size());
    }
  }
  const auto r = presheaf_morphism_check(RingMap::canonical(z, Zn(12)), z_minus({2}), {unit(z)});
  CHECK(r.J_of_preimage == Support::closure(Zn(12), pt(2)));
  CHECK(localized_map(RingMap::canonical(z, Zn(12)), z_minus({2})).target() == Zn(3));
}
