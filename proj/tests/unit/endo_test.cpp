#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "ttg/endo.hpp"
#include "ttg/error.hpp"

using namespace ttg;
using namespace fixtures;

namespace {

PointDescriptor pt(long p, std::size_t c = 0) { return {c, zb(p)}; }

Ring dual_numbers() {
  const Ring f2 = Fpt(2);
  return Ring::quotient(f2, poly(f2, {0, 0, 1}));
}

/// Nilpotents by repeated multiplication, independent of the ring's own test.
bool nilpotent_by_powering(const Ring& r, const Element& a) {
  Element p = a;
  for (int k = 0; k < 64; ++k) {
    if (p == r.zero()) return true;
    p = r.mul(p, a);
  }
  return false;
}

const SectionRow& row_for(const RingedSpaceModel& m, const Support& complement) {
  for (const auto& s : m.sections)
    if (s.complement == complement) return s;
  throw std::logic_error("no such open");
}

}  // namespace

TEST_CASE("sigma splits lambda") {
  for (const Ring& r : {Zn(12), Zn(4), dual_numbers(), Ring::product({Zn(4), Zn(3)})}) {
    for (const auto& a : r.elements()) CHECK(sigma(lambda(a, r)) == a);
  }
  std::mt19937 rng(7);
  std::uniform_int_distribution<long> v(-100000, 100000);
  for (int i = 0; i < 100; ++i) {
    const Element a = Z().from_int(v(rng));
    CHECK(sigma(lambda(a, Z())) == a);
  }
  CHECK(sigma(lambda(Z().from_int(5), Z())) == Z().from_int(5));
  CHECK(sigma(lambda(Z().one(), Z())) == Z().one());
  CHECK(sigma(lambda(Z().zero(), Z())) == Z().zero());
}

TEST_CASE("lambda is a ring homomorphism") {
  const Ring r = Zn(12);
  for (const auto& a : r.elements())
    for (const auto& b : r.elements()) {
      CHECK(sigma(add(lambda(a, r), lambda(b, r))) == r.add(a, b));
      CHECK(sigma(compose(lambda(a, r), lambda(b, r))) == r.mul(a, b));
    }
  // naturality on sample maps: r f = f r
  const Complex k = koszul(r, r.from_int(4));
  for (const auto& f : chain_map_generators(k, k)) {
    const IdentityEndo a = lambda(r.from_int(5), r);
    CHECK(maps_equal(compose(a.at(k), f), compose(f, a.at(k))));
  }
}

TEST_CASE("pointwise nilpotence") {
  const auto z4 = is_pointwise_nilpotent(lambda(Zn(4).from_int(2), Zn(4)), {unit(Zn(4))});
  REQUIRE(z4.value);
  CHECK(*z4.value);
  CHECK(z4.exponent == 2);
  CHECK(verify_homotopy(ChainMap::multiplication(unit(Zn(4)), Zn(4).from_int(4)), z4.witnesses[0]));

  const auto z12 = is_pointwise_nilpotent(lambda(Zn(12).from_int(6), Zn(12)), {unit(Zn(12))});
  REQUIRE(z12.value);
  CHECK(*z12.value);

  const Ring d = dual_numbers();
  const auto dt = is_pointwise_nilpotent(lambda(poly(d, {0, 1}), d), {unit(d)});
  REQUIRE(dt.value);
  CHECK(*dt.value);

  const auto z = is_pointwise_nilpotent(lambda(Z().from_int(2), Z()), {unit(Z())});
  REQUIRE(z.value);
  CHECK_FALSE(*z.value);
  CHECK(z.exponent_bound == 16);

  // generators other than the unit
  const Ring z12r = Zn(12);
  const std::vector<Complex> gens{koszul_at(z12r, pt(2)), koszul_at(z12r, pt(3))};
  const auto g = is_pointwise_nilpotent(lambda(z12r.from_int(6), z12r), gens);
  REQUIRE(g.value);
  CHECK(*g.value);
  CHECK(g.witnesses.size() == 2);
  CHECK_THROWS_AS(is_pointwise_nilpotent(lambda(z12r.from_int(6), z12r), {koszul_at(z12r, pt(2))}), InvalidArgument);

  // the verdict matches exhaustive powering
  for (const Ring& r : {Zn(8), Zn(36), dual_numbers(), Ring::product({Zn(4), Zn(9)})}) {
    for (const auto& a : r.elements()) {
      const auto n = is_pointwise_nilpotent(lambda(a, r), {unit(r)});
      REQUIRE(n.value);
      CHECK(*n.value == nilpotent_by_powering(r, a));
    }
  }
}

TEST_CASE("rho_descend") {
  const Ring z = Z();
  const OpenSet d3(Support::closure(z, pt(3)));
  const IdentityEndo two = rho_descend(lambda(z.from_int(2), z), d3);
  CHECK(two.ring() == localize_ring(z, z.from_int(3)));
  CHECK(two.multiplier() == two.ring().from_int(2));

  const OpenSet d2(Support::closure(Zn(12), pt(2)));
  const IdentityEndo six = rho_descend(lambda(Zn(12).from_int(6), Zn(12)), d2);
  CHECK(six.ring() == Zn(3));
  CHECK(six.multiplier() == Zn(3).zero());

  const IdentityEndo id = rho_descend(lambda(z.one(), z), d3);
  CHECK(id.multiplier() == id.ring().one());

  // pointwise nilpotents descend to pointwise nilpotents
  const Ring r = Zn(36);
  for (const auto& y : all_supports(r, enumerate_points(r, 1))) {
    const OpenSet v(y);
    for (const auto& a : r.elements()) {
      const auto before = is_pointwise_nilpotent(lambda(a, r), {unit(r)});
      if (!*before.value) continue;
      const IdentityEndo b = rho_descend(lambda(a, r), v);
      CHECK(*is_pointwise_nilpotent(b, {unit(b.ring())}).value);
    }
  }
}

TEST_CASE("reconstruction of Z/12") {
  const RingedSpaceModel m = reconstruct_ringed_space(Zn(12), 1);
  CHECK(m.ok());
  CHECK(m.space.size() == 2);
  CHECK(m.covering.empty());
  CHECK(m.homeomorphic());
  CHECK(m.global_sections() == Zn(6));
  REQUIRE(m.stalks.size() == 2);
  CHECK(m.stalks[0].stalk == "Z/(4)");
  CHECK(*m.stalks[0].finite == Zn(2));
  CHECK(*m.stalks[1].finite == Zn(3));
  CHECK(m.sheaf_exhaustive);
  CHECK(m.sheaf_conditions_checked > 0);
  CHECK_FALSE(m.fixed_point());
  CHECK(row_for(m, Support(Zn(12))).pnil == "Z/(12): {0, 6}");
}

TEST_CASE("reconstruction of Z") {
  const RingedSpaceModel m = reconstruct_ringed_space(Z(), 7);
  CHECK(m.ok());
  CHECK(m.truncated);
  CHECK(m.space.size() == 5);
  CHECK(m.covering.size() == 4);
  const Ring z = Z();
  CHECK(row_for(m, Support::closure(z, pt(2))).reduced == localize_ring(z, z.from_int(2)));
  CHECK(row_for(m, Support::of_points(z, {pt(3), pt(5)})).reduced == localize_ring(z, z.from_int(15)));
  for (const auto& s : m.sections) {
    Element f = z.one();
    for (const auto& q : s.complement.component(0).points) f = z.mul(f, z.from_base(q));
    if (s.complement.component(0).whole) {
      CHECK(s.reduced.is_zero_ring());
    } else {
      CHECK(s.reduced == localize_ring(z, f));
    }
  }
  CHECK(m.stalks[0].stalk == "Q");
  CHECK(m.stalks[1].stalk == "Z_(2)");
  CHECK(m.fixed_point());
}

TEST_CASE("reduced rings are fixed points") {
  for (const Ring& r : {Zn(6), Zn(30), Zn(2), Fpt(2), Ring::product({Z(), Zn(5)}),
                        localize_ring(Z(), Z().from_int(2))}) {
    const RingedSpaceModel m = reconstruct_ringed_space(r, 2);
    CHECK_MESSAGE(m.ok(), r.name());
    CHECK_MESSAGE(m.fixed_point(), r.name());
  }
  const RingedSpaceModel f2 = reconstruct_ringed_space(Zn(2), 1);
  CHECK(f2.space.size() == 1);
  CHECK(f2.global_sections() == Zn(2));
  for (const Ring& r : {Zn(4), dual_numbers(), Ring::product({Zn(9), Z()})}) {
    const RingedSpaceModel m = reconstruct_ringed_space(r, 2);
    CHECK_MESSAGE(m.ok(), r.name());
    CHECK_FALSE(m.fixed_point());
    CHECK(m.global_sections() == nilradical_quotient(r).reduced());
  }
}
