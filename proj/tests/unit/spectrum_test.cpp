#include "doctest.h"
#include "fixtures.hpp"
#include "ttg/dot.hpp"
#include "ttg/spectrum.hpp"

using namespace ttg;
using namespace fixtures;

namespace {

PointDescriptor pt(long p, std::size_t c = 0) { return {c, zb(p)}; }

/// Y is atomic iff it is nonempty and is not covered by two proper
/// specialization-closed subsets (brute force over the enumerated lattice).
bool atomic_by_covers(const Support& y, const std::vector<Support>& lattice) {
  if (y.is_empty()) return false;
  for (const auto& a : lattice) {
    if (!a.is_subset_of(y) || a == y) continue;
    for (const auto& b : lattice) {
      if (!b.is_subset_of(y) || b == y) continue;
      if (unite(a, b) == y) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("is_atomic examples") {
  const Ring z = Z();
  CHECK(is_atomic(Support::closure(z, pt(2))));
  CHECK_FALSE(is_atomic(Support::of_points(z, {pt(2), pt(3)})));
  CHECK(is_atomic(Support::whole(z)));
  CHECK_FALSE(is_atomic(Support(z)));
  CHECK_FALSE(is_atomic(Support::whole(Zn(12))));
}

TEST_CASE("is_atomic agrees with the cover oracle") {
  const Ring f2 = Fpt(2);
  const std::vector<std::pair<Ring, unsigned>> rings{
      {Zn(30), 1}, {Zn(12), 1}, {Ring::product({Zn(4), Zn(3)}), 1}, {Z(), 5}, {f2, 1},
      {Ring::product({Z(), Zn(2)}), 3}};
  for (const auto& [r, bound] : rings) {
    const auto lattice = all_supports(r, enumerate_points(r, bound));
    for (const auto& y : lattice) CHECK(is_atomic(y) == atomic_by_covers(y, lattice));
  }
}

TEST_CASE("build_spectrum examples") {
  const auto s12 = build_spectrum(Zn(12), 1);
  CHECK(s12.complete());
  REQUIRE(s12.points().size() == 2);
  CHECK(s12.covering_relations().empty());

  const Ring z = Z();
  const auto s = build_spectrum(z, 5);
  CHECK_FALSE(s.complete());
  REQUIRE(s.points().size() == 4);
  CHECK(s.points()[0].descriptor.is_generic());
  const auto cover = s.covering_relations();
  CHECK(cover.size() == 3);
  for (const auto& [i, j] : cover) CHECK(i == 0);
  const auto u = s.U(koszul(z, z.from_int(2)));
  CHECK(u == std::vector<std::size_t>{0, 2, 3});

  const auto f = build_spectrum(Zn(2), 3);
  CHECK(f.points().size() == 1);
  CHECK(build_spectrum(Ring::zero_ring(), 3).points().empty());
}

TEST_CASE("E map") {
  const Ring z = Z();
  CHECK(E_map(z, pt(3)).support == Support::closure(z, pt(3)));
  CHECK(E_map(z, {0, std::nullopt}).support == Support::whole(z));
  const Ring f2 = Fpt(2);
  const Ring local = Ring::quotient(f2, poly(f2, {0, 0, 1}));
  const auto pts = enumerate_points(local, 1).points;
  REQUIRE(pts.size() == 1);
  CHECK(E_map(local, pts[0]).support == Support::whole(local));
  CHECK(E_inverse(Support::closure(z, pt(7))) == pt(7));
  CHECK_FALSE(E_inverse(Support(z)).has_value());
}

TEST_CASE("topology axioms on testbed rings") {
  const Ring f2 = Fpt(2);
  const std::vector<std::pair<Ring, unsigned>> rings{
      {Z(), 7}, {Zn(12), 1}, {f2, 2}, {Ring::product({Zn(4), Zn(3)}), 1}, {localize_ring(Z(), Z().from_int(6)), 7}};
  for (const auto& [r, bound] : rings) {
    const auto s = build_spectrum(r, bound);
    const auto report = check_topology_axioms(s);
    CHECK(report.ok());
    CHECK(report.pairs_checked > 0);
    for (const auto& f : report.failures) MESSAGE(f);
  }
}

TEST_CASE("U of specific witnesses") {
  const Ring z = Z();
  const auto s = build_spectrum(z, 5);
  CHECK(s.U(unit(z)).empty());
  const auto a = koszul(z, z.from_int(2)), b = koszul(z, z.from_int(3));
  CHECK(s.U(direct_sum(a, b)) == std::vector<std::size_t>{0, 3});
  CHECK(s.U(direct_sum(unit(z), unit(z))).empty());
}

TEST_CASE("dot output") {
  const std::string z = emit_dot(build_spectrum(Z(), 3));
  CHECK(z == "digraph spc {\n  p0 [label=\"η\"];\n  p1 [label=\"(2)\"];\n  p2 [label=\"(3)\"];\n  p0 -> p1;\n  p0 -> p2;\n}\n");
  const std::string z12 = emit_dot(build_spectrum(Zn(12), 1));
  CHECK(z12.find("->") == std::string::npos);
  CHECK(z12.find("p1 [label=\"(3)\"]") != std::string::npos);
  CHECK(emit_dot(build_spectrum(Ring::zero_ring(), 1)) == "digraph spc {\n}\n");
  CHECK(emit_dot(build_spectrum(Zn(2), 1)) == "digraph spc {\n  p0 [label=\"(2)\"];\n}\n");
}
