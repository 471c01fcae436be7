#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "oracles.hpp"
#include "ttg/error.hpp"
#include "ttg/support.hpp"

using namespace ttg;
using namespace fixtures;

namespace {

PointDescriptor pt(long p, std::size_t c = 0) { return {c, zb(p)}; }
PointDescriptor eta(std::size_t c = 0) { return {c, std::nullopt}; }

Complex random_z_complex(std::mt19937& rng) {
  const Ring z = Z();
  std::uniform_int_distribution<long> entry(-6, 6);
  std::uniform_int_distribution<int> kind(0, 3);
  // sums of Koszul complexes, units and shifted copies keep d^2 = 0 trivially
  Complex out = zero_complex(z);
  const int parts = 1 + kind(rng);
  for (int i = 0; i < parts; ++i) {
    Complex piece = koszul(z, z.from_int(entry(rng)));
    if (kind(rng) == 0) piece = shift(piece, kind(rng) - 1);
    out = direct_sum(out, piece);
  }
  return out;
}

}  // namespace

TEST_CASE("supph examples") {
  const Ring z = Z();
  CHECK(supph(unit(z)) == Support::whole(z));
  CHECK(supph(koszul(z, z.from_int(2))) == Support::closure(z, pt(2)));
  CHECK(supph(cone(ChainMap::identity(unit(z))).cone()).is_empty());
  CHECK(supph(koszul(z, z.from_int(12))) == Support::of_points(z, {pt(2), pt(3)}));
  CHECK(supph(koszul(z, z.from_int(0))) == Support::whole(z));
  CHECK(supph(koszul(z, z.from_int(-1))).is_empty());

  const Ring z12 = Zn(12);
  CHECK(supph(unit(z12)) == Support::of_points(z12, {pt(2), pt(3)}));
  CHECK(supph(unit(z12)) == Support::whole(z12));
  CHECK(supph(koszul(z12, z12.from_int(2))) == Support::closure(z12, pt(2)));
  CHECK(supph(koszul(z12, z12.from_int(5))).is_empty());
  // Z/12 --6--> Z/12 has homology Z/6 in both degrees
  CHECK(supph(koszul(z12, z12.from_int(6))) == Support::whole(z12));

  const Ring z2 = localize_ring(z, z.from_int(2));
  CHECK(supph(koszul(z2, z2.from_int(6))) == Support::closure(z2, pt(3)));
}

TEST_CASE("supph agrees with the residue-field acyclicity oracle over Z") {
  std::mt19937 rng(17);
  const Ring z = Z();
  const std::vector<long> primes{2, 3, 5, 7, 11, 13};
  for (int trial = 0; trial < 120; ++trial) {
    const Complex p = random_z_complex(rng);
    const Support s = supph(p);
    CHECK(s.contains(eta()) == !oracles::acyclic_rational(p));
    if (s.contains(eta())) continue;
    for (long q : primes) CHECK(s.contains(pt(q)) == !oracles::acyclic_mod(p, q));
  }
}

TEST_CASE("thomason_phi and membership") {
  const Ring z = Z();
  const Complex c2 = koszul(z, z.from_int(2)), c3 = koszul(z, z.from_int(3));
  CHECK(thomason_phi(z, {c2, c3}) == Support::of_points(z, {pt(2), pt(3)}));
  CHECK(thomason_phi(z, {unit(z)}) == Support::whole(z));
  CHECK(thomason_phi(z, {}).is_empty());
  CHECK(membership(c2, Support::of_points(z, {pt(2), pt(3)})));
  CHECK_FALSE(membership(unit(z), Support::closure(z, pt(2))));
  CHECK(membership(cone(ChainMap::identity(unit(z))).cone(), Support(z)));
}

TEST_CASE("lattice operations") {
  const Ring z = Z();
  const Support s2 = Support::closure(z, pt(2)), s3 = Support::closure(z, pt(3));
  CHECK(unite(s2, s3) == Support::of_points(z, {pt(2), pt(3)}));
  CHECK(intersect(Support::whole(z), Support::closure(z, pt(5))) == Support::closure(z, pt(5)));
  CHECK(intersect(Support::whole(z), Support::whole(z)) == Support::whole(z));
  CHECK(intersect(s2, s3).is_empty());
  CHECK(s2.is_subset_of(Support::whole(z)));
  CHECK_FALSE(Support::whole(z).is_subset_of(s2));
  CHECK(unite(s2, Support::whole(z)) == Support::whole(z));
  CHECK_THROWS_AS(Support::closure(z, pt(4)), InvalidArgument);
  CHECK_THROWS_AS(Support::closure(Zn(12), pt(5)), InvalidArgument);
}

TEST_CASE("generator realization round trip on every support") {
  const Ring f2 = Fpt(2);
  const std::vector<std::pair<Ring, unsigned>> rings{
      {Z(), 13}, {Zn(12), 1}, {f2, 2}, {Ring::product({Zn(4), Zn(3)}), 1}, {Ring::quotient(f2, poly(f2, {0, 1, 1})), 1}};
  for (const auto& [r, bound] : rings) {
    for (const auto& y : all_supports(r, enumerate_points(r, bound))) {
      CHECK(thomason_phi(r, realize_generators(y)) == y);
      CHECK(supph(realize(y)) == y);
      for (const auto& g : realize_generators(y)) CHECK(membership(g, y));
    }
  }
}

TEST_CASE("supph is compatible with sums, shifts, cones and tensors") {
  std::mt19937 rng(23);
  const Ring z = Z();
  for (int trial = 0; trial < 40; ++trial) {
    const Complex p = random_z_complex(rng), q = random_z_complex(rng);
    CHECK(supph(direct_sum(p, q)) == unite(supph(p), supph(q)));
    CHECK(supph(shift(p)) == supph(p));
    CHECK(supph(tensor(p, q)) == intersect(supph(p), supph(q)));
    for (const auto& f : chain_map_generators(p, q, HomLimits{400})) {
      CHECK(supph(cone(f).cone()).is_subset_of(unite(supph(p), supph(q))));
    }
  }
}

TEST_CASE("theta steps stay inside the input support") {
  const Ring z = Z();
  auto sample = theta_step(z, {});
  REQUIRE(sample.objects.size() == 1);
  CHECK(sample.objects[0].is_zero());

  sample = theta_step(z, {koszul(z, z.from_int(2))});
  CHECK(sample.objects.size() > 5);
  for (const auto& o : sample.objects) CHECK(membership(o, Support::closure(z, pt(2))));

  sample = theta_saturate(z, {unit(z)}, 2, ThetaOptions{60});
  CHECK(sample.budget_exhausted);
  CHECK(sample.objects.size() == 60);

  const Ring r = Ring::product({Zn(4), Zn(3)});
  sample = theta_step(r, {koszul(r, r.from_int(2))});
  for (const auto& o : sample.objects) CHECK(membership(o, Support::closure(r, pt(2, 0))));
}

TEST_CASE("monotonicity through generator samples") {
  const Ring z12 = Zn(12);
  const auto supports = all_supports(z12, enumerate_points(z12, 1));
  for (const auto& a : supports)
    for (const auto& b : supports) {
      bool all_in = true;
      for (const auto& g : theta_step(z12, realize_generators(a)).objects) all_in = all_in && membership(g, b);
      CHECK(all_in == a.is_subset_of(b));
    }
}
