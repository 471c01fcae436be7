#include "ttg/verify.hpp"

#include <algorithm>
#include <functional>
#include <random>

#include "ttg/endo.hpp"
#include "ttg/error.hpp"
#include "ttg/factor.hpp"

namespace ttg {

namespace {

const std::vector<std::pair<std::string, std::string>> kCatalog{
    {"kernel.snf", "U M V = D with U, V invertible and a divisibility chain on the diagonal"},
    {"kernel.factor", "unit times the product of prime powers recomposes the input"},
    {"kernel.nilradical", "R_red is reduced and the projection kills exactly the nilpotents"},
    {"kernel.points", "enumerated points of a finite ring are its maximal ideals"},
    {"kernel.localize", "points of R[1/f] are the points of R not containing f"},
    {"complex.d2", "d o d = 0 on every constructed complex"},
    {"complex.les", "homology of a cone triangle is exact at every joint"},
    {"complex.tensor-swap", "P (x) Q and Q (x) P have the same homology"},
    {"complex.hom-unit", "Hom(1, 1) is free of rank one"},
    {"complex.quasi-iso", "adding cone(id) changes neither homology nor Hom"},
    {"complex.cone-id", "cone(id) is contractible, with a verified witness"},
    {"support.phi-psi", "the generator construction realizes every finitary support exactly"},
    {"support.psi-phi", "generators lie in their support and theta-step samples stay inside it"},
    {"support.sum-shift-cone", "supph of sums, shifts and cones"},
    {"support.tensor", "supph(P (x) Q) = supph(P) n supph(Q)"},
    {"support.monotone", "Y1 inside Y2 iff the generators of Y1 are members of Y2"},
    {"spectrum.e-bijective", "E is a bijection on enumerated points and matches the specialization order"},
    {"spectrum.basis", "U(a) = X - Supph(a) for every basis witness"},
    {"spectrum.meet", "U(a) n U(b) = U(a + b) on witness pairs"},
    {"spectrum.closed-down", "F(a) is closed under specialization"},
    {"spectrum.atomic", "is_atomic agrees with the brute-force irreducibility oracle"},
    {"spectrum.principal", "an atomic support is the support of one object"},
    {"geometric.pullback-support", "supph(f* P) = f^-1 supph(P)"},
    {"geometric.functorial", "Spc(g o f) = Spc(f) o Spc(g)"},
    {"geometric.continuity", "Spc(f)^-1 F(a) = F(f* a) as point sets"},
    {"geometric.diagram", "Spc(f) o E = E o contraction, and equals the intersection description"},
    {"geometric.meet-dense", "preimage commutes with meets and pullback of the unit has full support"},
    {"geometric.faithful", "the derived equality test separates distinct maps and identifies equal ones"},
    {"presheaf.restriction", "restrictions compose for nested opens"},
    {"presheaf.localize-support", "supph(q_V P) = supph(P) n V"},
    {"presheaf.clear", "clear_denominators gives Q with q_V Q isomorphic to P (verified inverse pair)"},
    {"presheaf.J-monotone", "V1 inside V2 implies J(V2) inside J(V1); J(V) is generated by its points"},
    {"presheaf.hom", "Hom localizes and sampled maps are fractions with denominators supported off V"},
    {"presheaf.molecular", "every support is the union of the closures of its points"},
    {"presheaf.morphism", "f* J(V) lies in J(f^-1 V) and localization commutes with pullback"},
    {"endo.split", "sigma o lambda = id"},
    {"endo.pnil", "pointwise nilpotent multipliers are exactly the nilpotent ones, with homotopy witnesses"},
    {"endo.commutative", "End(1) is commutative"},
    {"endo.surjective", "sections surject onto the reduced sections on every basic open"},
    {"endo.descend", "rho_descend localizes the multiplier and preserves pointwise nilpotence"},
    {"reconstruct.space", "Spc matches Spec(R_red) point by point, with the same order"},
    {"reconstruct.sections", "End/PNil sections equal the sections of Spec(R_red) on every basic open"},
    {"reconstruct.stalks", "stalks equal the local rings of Spec(R_red)"},
    {"reconstruct.sheaf", "restrictions commute and gluing holds on finite covers"},
    {"reconstruct.fixed-point", "reduced rings reconstruct to themselves; R and R_red give the same output"},
};

const std::vector<std::string> kSuites{"thomason", "topology", "geometric", "presheaf", "endo", "reconstruct"};

struct Outcome {
  bool ok = true;
  std::string witness;
};

/// Counts checked instances and keeps the first failure.
class Tally {
 public:
  void expect(bool ok, const std::function<std::string()>& what) {
    ++n_;
    if (!ok && !bad_) bad_ = what();
  }
  void count(std::size_t k = 1) { n_ += k; }
  std::size_t n() const { return n_; }
  Outcome done(const std::string& unit) const {
    if (bad_) return {false, *bad_};
    return {true, std::to_string(n_) + " " + unit};
  }

 private:
  std::size_t n_ = 0;
  std::optional<std::string> bad_;
};

class Checker {
 public:
  explicit Checker(VerificationReport& r) : r_(r) {}

  void run(const std::string& id, const std::string& subject, const std::function<Outcome()>& f) {
    CheckResult c{id, subject, CheckStatus::pass, ""};
    try {
      const Outcome o = f();
      c.status = o.ok ? CheckStatus::pass : CheckStatus::fail;
      c.witness = o.witness;
    } catch (const BoundExceeded& e) {
      c.status = CheckStatus::indeterminate;
      c.witness = e.what();
    } catch (const std::exception& e) {
      c.status = CheckStatus::fail;
      c.witness = std::string("error: ") + e.what();
    }
    r_.checks.push_back(std::move(c));
  }

 private:
  VerificationReport& r_;
};

Ring Zn(long n) { return Ring::quotient(Ring::integers(), Ring::integers().from_int(n)); }

Ring poly_quotient(std::uint32_t p, std::vector<std::int64_t> c) {
  const Ring f = Ring::polynomials(p);
  return Ring::quotient(f, f.from_base(f.component(0).base_ring().poly(std::move(c))));
}

std::string subject_of(const Ring& r, unsigned bound) {
  return r.name() + (r.cardinality() ? "" : " (bound " + std::to_string(bound) + ")");
}

bool d_squared_zero(const Complex& p) {
  for (const auto& b : p.blocks()) {
    if (b.is_zero()) continue;
    for (int n = b.lo() + 2; n <= b.hi(); ++n)
      if (!is_zero(b.ring(), multiply(b.ring(), b.differential(n - 1), b.differential(n)))) return false;
  }
  return true;
}

Scalar random_scalar(const Component& c, std::mt19937_64& rng) {
  const BaseRing& b = c.base_ring();
  std::uniform_int_distribution<int> v(-6, 6), bit(0, static_cast<int>(std::max(1u, b.characteristic())) - 1);
  BaseElem num = b.is_integers() ? BaseElem(mpz_class(v(rng))) : b.poly({bit(rng), bit(rng), bit(rng)});
  if (c.kind() == ComponentKind::localization && (rng() & 1)) return c.fraction(num, c.parameter());
  return c.from_base(num);
}

Matrix random_matrix(const Component& c, std::size_t rows, std::size_t cols, std::mt19937_64& rng) {
  Matrix m = Matrix::zero(c, rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = random_scalar(c, rng);
  return m;
}

/// Two-term complex with random ranks 1..2 in every component.
Complex random_two_term(const Ring& r, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> size(1, 2);
  std::vector<ComponentComplex> blocks;
  for (const auto& c : r.components()) {
    const std::size_t a = size(rng), b = size(rng);
    blocks.emplace_back(c, 0, std::vector<std::size_t>{b, a}, std::vector<Matrix>{random_matrix(c, b, a, rng)});
  }
  return Complex(r, std::move(blocks));
}

ChainMap random_chain_map(const Complex& p, const Complex& q, std::mt19937_64& rng) {
  ChainMap f = ChainMap::zero(p, q);
  for (const auto& g : chain_map_generators(p, q)) {
    Element s;
    for (const auto& c : p.ring().components()) s.parts.push_back(random_scalar(c, rng));
    f = add(f, scale(s, g));
  }
  return f;
}

std::vector<Complex> witness_objects(const Ring& r, unsigned bound) {
  std::vector<Complex> out;
  for (auto& [label, c] : canonical_witnesses(r, bound)) out.push_back(std::move(c));
  return out;
}

std::vector<Support> supports_of(const Ring& r, unsigned bound) { return all_supports(r, enumerate_points(r, bound)); }

Element random_element(const Ring& r, std::mt19937_64& rng) {
  Element e;
  for (const auto& c : r.components()) e.parts.push_back(random_scalar(c, rng));
  return e;
}

/// Multipliers to test: every element of a finite ring, samples otherwise.
std::vector<Element> multipliers(const Ring& r, std::mt19937_64& rng, std::size_t samples) {
  if (r.cardinality() && *r.cardinality() <= 4096) return r.elements();
  std::vector<Element> out{r.zero(), r.one()};
  while (out.size() < samples) out.push_back(random_element(r, rng));
  return out;
}

// ---------------------------------------------------------------- thomason

void kernel_checks(Checker& ck, const Ring& r, unsigned bound, std::mt19937_64& rng) {
  const std::string subj = subject_of(r, bound);
  ck.run("kernel.snf", subj, [&] {
    Tally t;
    for (const auto& comp : r.components()) {
      const Component c = Component::base(comp.base_ring());
      for (int k = 0; k < 10; ++k) {
        const Matrix m = random_matrix(c, 3, 3, rng);
        const SmithForm s = smith_normal_form(c, m);
        const bool product = multiply(c, multiply(c, s.U, m), s.V) == s.D;
        const bool inverse = multiply(c, s.U, s.U_inv) == Matrix::identity(c, 3);
        const bool v_invertible = solve(c, s.V, Matrix::identity(c, 3)).has_value();
        const auto d = s.diagonal();
        bool chain = true;
        for (std::size_t i = 0; i + 1 < d.size(); ++i)
          if (!c.is_zero(d[i + 1]) && !c.divide(d[i + 1], d[i])) chain = false;
        t.expect(product && inverse && v_invertible && chain, [&] { return "SNF fails over " + c.name(); });
      }
    }
    return t.done("matrices");
  });
  ck.run("kernel.factor", subj, [&] {
    Tally t;
    for (const auto& comp : r.components()) {
      const BaseRing& b = comp.base_ring();
      for (int k = 0; k < 20; ++k) {
        const BaseElem x = random_scalar(Component::base(b), rng).num;
        if (b.is_zero(x)) continue;
        const Factorization f = factor_element(b, x);
        BaseElem back = f.unit;
        for (const auto& pp : f.factors) back = b.mul(back, b.pow(pp.prime, pp.multiplicity));
        t.expect(back == x, [&] { return "factorization of " + b.to_string(x) + " does not recompose"; });
      }
    }
    return t.done("elements");
  });
  ck.run("kernel.nilradical", subj, [&] {
    Tally t;
    const NilradicalQuotient nq(r);
    if (r.cardinality() && *r.cardinality() <= 4096) {
      for (const auto& x : r.elements()) {
        const Element y = nq.project(x);
        t.expect(r.is_nilpotent(x) == nq.reduced().is_zero(y), [&] { return "kernel mismatch at " + r.to_string(x); });
        t.expect(!nq.reduced().is_nilpotent(y) || nq.reduced().is_zero(y),
                 [&] { return "R_red has a nilpotent " + nq.reduced().to_string(y); });
      }
    } else {
      for (std::size_t c = 0; c < r.size(); ++c)
        t.expect(r.component(c).kind() == ComponentKind::quotient || nq.reduced().component(c) == r.component(c),
                 [&] { return "domain component changed by reduction"; });
    }
    return t.done("elements");
  });
  ck.run("kernel.points", subj, [&] {
    Tally t;
    const PointEnumeration e = enumerate_points(r, bound);
    for (const auto& x : e.points)
      if (!x.is_generic()) {
        const BaseRing& b = r.component(x.component).base_ring();
        t.expect(is_prime_element(b, *x.prime), [&] { return point_label(r, x) + " is not prime"; });
      }
    if (r.cardinality() && *r.cardinality() <= 4096) {
      for (const auto& a : r.elements()) {
        if (r.is_unit(a)) continue;
        bool covered = false;
        for (const auto& x : e.points) {
          const Component& c = r.component(x.component);
          covered = covered || c.base_ring().divides(*x.prime, c.lift(a.parts[x.component]));
        }
        t.expect(covered, [&] { return "nonunit " + r.to_string(a) + " lies in no listed point"; });
      }
    }
    return t.done("points and nonunits");
  });
  ck.run("kernel.localize", subj, [&] {
    Tally t;
    const PointEnumeration e = enumerate_points(r, bound);
    for (const auto& x : e.points) {
      if (x.is_generic()) continue;
      const Element f = r.embed(x.component, r.component(x.component).from_base(*x.prime));
      Element g = f;
      for (std::size_t c = 0; c < r.size(); ++c)
        if (c != x.component) g.parts[c] = r.component(c).one();
      const RingMap l = localization_map(r, g);
      std::vector<PointDescriptor> expected, got;
      for (const auto& y : e.points)
        if (!(y.component == x.component && y.prime && r.component(y.component).base_ring().divides(*y.prime, *x.prime)))
          expected.push_back(y);
      for (const auto& y : enumerate_points(l.target(), bound).points)
        got.push_back({l.assignments()[y.component].source_component, y.prime});
      t.expect(expected == got, [&] { return "points of " + l.target().name() + " differ from the filtered list"; });
    }
    return t.done("localizations");
  });
}

void complex_checks(Checker& ck, const Ring& r, unsigned bound, std::mt19937_64& rng, std::vector<Complex>& made) {
  const std::string subj = subject_of(r, bound);
  const auto objects = witness_objects(r, std::min(bound, 2u));
  ck.run("complex.les", subj, [&] {
    Tally t;
    for (int k = 0; k < 10; ++k) {
      const Complex p = random_two_term(r, rng), q = random_two_term(r, rng);
      const Triangle tri = cone(random_chain_map(p, q, rng));
      made.push_back(tri.cone());
      for (int n = tri.cone().lo() - 1; n <= tri.cone().hi() + 1; ++n) {
        t.expect(homology_exact_at(tri.first, tri.second, n) && homology_exact_at(tri.second, tri.third, n),
                 [&] { return "exactness fails in degree " + std::to_string(n); });
      }
    }
    return t.done("joints");
  });
  ck.run("complex.tensor-swap", subj, [&] {
    Tally t;
    for (std::size_t i = 0; i < objects.size() && i < 6; ++i)
      for (std::size_t j = i; j < objects.size() && j < 6; ++j) {
        const Complex a = tensor(objects[i], objects[j]), b = tensor(objects[j], objects[i]);
        made.push_back(a);
        for (int n = -2; n <= 4; ++n)
          t.expect(homology(a, n) == homology(b, n), [&] { return "swap changes H_" + std::to_string(n); });
      }
    return t.done("degree checks");
  });
  ck.run("complex.hom-unit", subj, [&] {
    Tally t;
    const ModuleClass h = hom_up_to_homotopy(unit(r), unit(r));
    for (std::size_t c = 0; c < r.size(); ++c)
      t.expect(h.components[c].free_rank == 1 && h.components[c].divisors.empty(),
               [&] { return "Hom(1,1) = " + to_string(r, h); });
    return t.done("components");
  });
  ck.run("complex.quasi-iso", subj, [&] {
    Tally t;
    const Complex c0 = cone(ChainMap::identity(unit(r))).cone();
    for (std::size_t i = 0; i < objects.size() && i < 5; ++i) {
      const Complex padded = direct_sum(objects[i], c0);
      made.push_back(padded);
      for (int n = -2; n <= 3; ++n)
        t.expect(homology(padded, n) == homology(objects[i], n), [&] { return "homology changed"; });
      for (std::size_t j = 0; j < objects.size() && j < 5; ++j)
        t.expect(hom_up_to_homotopy(padded, objects[j], HomLimits{400}) ==
                     hom_up_to_homotopy(objects[i], objects[j], HomLimits{400}),
                 [&] { return "Hom changed"; });
    }
    return t.done("comparisons");
  });
  ck.run("complex.cone-id", subj, [&] {
    Tally t;
    for (const auto& p : objects) {
      const Complex c = cone(ChainMap::identity(p)).cone();
      made.push_back(c);
      const ChainMap id = ChainMap::identity(c);
      const auto h = null_homotopy(id, HomLimits{400});
      t.expect(h && verify_homotopy(id, *h), [&] { return "no contraction of cone(id)"; });
    }
    return t.done("cones");
  });
  ck.run("complex.d2", subj, [&] {
    Tally t;
    for (const auto& p : objects) made.push_back(p);
    for (const auto& p : made) t.expect(d_squared_zero(p), [&] { return "d o d != 0"; });
    return t.done("complexes");
  });
}

void thomason_suite(Checker& ck, const Ring& r, const VerifyOptions& o, std::mt19937_64& rng) {
  const std::string subj = subject_of(r, o.bound);
  std::vector<Complex> made;
  kernel_checks(ck, r, o.bound, rng);
  const auto supports = supports_of(r, o.bound);
  ck.run("support.phi-psi", subj, [&] {
    Tally t;
    for (const auto& y : supports) {
      const Complex g = realize(y);
      made.push_back(g);
      t.expect(thomason_phi(r, realize_generators(y)) == y && supph(g) == y,
               [&] { return "realization of " + y.to_string() + " is off"; });
    }
    return t.done("supports");
  });
  ck.run("support.psi-phi", subj, [&] {
    Tally t;
    ThetaOptions opts;
    opts.budget = std::max<std::size_t>(o.budget / std::max<std::size_t>(supports.size(), 1), 12);
    for (const auto& y : supports) {
      const auto gens = realize_generators(y);
      for (const auto& g : gens) t.expect(membership(g, y), [&] { return "generator outside " + y.to_string(); });
      const ThetaSample s = theta_step(r, gens, opts);
      for (const auto& p : s.objects) {
        t.expect(supph(p).is_subset_of(y), [&] { return "theta sample escapes " + y.to_string(); });
        made.push_back(p);
      }
    }
    return t.done("generator and sample checks");
  });
  const auto objects = witness_objects(r, std::min(o.bound, 2u));
  ck.run("support.sum-shift-cone", subj, [&] {
    Tally t;
    for (const auto& p : objects) {
      t.expect(supph(shift(p)) == supph(p), [&] { return "shift changes supph"; });
      for (const auto& q : objects) {
        t.expect(supph(direct_sum(p, q)) == unite(supph(p), supph(q)), [&] { return "supph of a sum"; });
        for (const auto& f : chain_map_generators(p, q, HomLimits{400})) {
          const Complex c = cone(f).cone();
          made.push_back(c);
          t.expect(supph(c).is_subset_of(unite(supph(p), supph(q))), [&] { return "supph of a cone"; });
        }
      }
    }
    return t.done("objects");
  });
  ck.run("support.tensor", subj, [&] {
    Tally t;
    for (const auto& p : objects)
      for (const auto& q : objects)
        t.expect(supph(tensor(p, q)) == intersect(supph(p), supph(q)), [&] { return "supph of a tensor"; });
    return t.done("pairs");
  });
  ck.run("support.monotone", subj, [&] {
    Tally t;
    const std::size_t n = std::min<std::size_t>(supports.size(), 24);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        bool members = true;
        for (const auto& g : realize_generators(supports[i])) members = members && membership(g, supports[j]);
        t.expect(members == supports[i].is_subset_of(supports[j]), [&] { return "monotonicity fails"; });
      }
    return t.done("pairs");
  });
  complex_checks(ck, r, o.bound, rng, made);
}

// ---------------------------------------------------------------- topology

/// Irreducible = nonempty and not the union of two proper subsupports.
bool atomic_by_covers(const Support& y, const std::vector<Support>& all) {
  if (y.is_empty()) return false;
  for (const auto& a : all)
    for (const auto& b : all)
      if (!(a == y) && !(b == y) && a.is_subset_of(y) && b.is_subset_of(y) && unite(a, b) == y) return false;
  return true;
}

void topology_suite(Checker& ck, const Ring& r, const VerifyOptions& o) {
  const std::string subj = subject_of(r, o.bound);
  const SpectrumModel s(r, o.bound);
  const auto& pts = s.points();
  ck.run("spectrum.e-bijective", subj, [&] {
    Tally t;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      const auto back = E_inverse(pts[i].support);
      t.expect(back && *back == pts[i].descriptor, [&] { return "E not invertible at " + point_label(r, pts[i].descriptor); });
      for (std::size_t j = 0; j < pts.size(); ++j) {
        t.expect(i == j || !(pts[i].support == pts[j].support), [&] { return "E not injective"; });
        t.expect(s.specializes(i, j) == specializes(pts[i].descriptor, pts[j].descriptor),
                 [&] { return "order mismatch"; });
      }
    }
    return t.done("point pairs");
  });
  ck.run("spectrum.basis", subj, [&] {
    Tally t;
    for (const auto& b : s.basis())
      t.expect(b.points == s.complement_of_support(b.object), [&] { return "U(" + b.witness + ") != X - Supph"; });
    return t.done("basis opens");
  });
  ck.run("spectrum.meet", subj, [&] {
    Tally t;
    const auto& basis = s.basis();
    for (std::size_t i = 0; i < basis.size(); ++i)
      for (std::size_t j = i; j < basis.size(); ++j) {
        std::vector<std::size_t> meet;
        std::set_intersection(basis[i].points.begin(), basis[i].points.end(), basis[j].points.begin(),
                              basis[j].points.end(), std::back_inserter(meet));
        t.expect(meet == s.U(direct_sum(basis[i].object, basis[j].object)),
                 [&] { return "U(" + basis[i].witness + ") n U(" + basis[j].witness + ") != U(sum)"; });
      }
    return t.done("pairs");
  });
  ck.run("spectrum.closed-down", subj, [&] {
    Tally t;
    for (const auto& b : s.basis()) {
      const auto f = s.F(b.object);
      for (std::size_t i : f)
        for (std::size_t j = 0; j < pts.size(); ++j)
          t.expect(!s.specializes(i, j) || std::binary_search(f.begin(), f.end(), j),
                   [&] { return "F(" + b.witness + ") is not closed"; });
    }
    return t.done("point checks");
  });
  const auto supports = supports_of(r, std::min(o.bound, 3u));
  ck.run("spectrum.atomic", subj, [&] {
    Tally t;
    if (supports.size() > 300) throw BoundExceeded("too many supports for the cover oracle");
    for (const auto& y : supports)
      t.expect(is_atomic(y) == atomic_by_covers(y, supports), [&] { return "is_atomic wrong on " + y.to_string(); });
    return t.done("supports");
  });
  ck.run("spectrum.principal", subj, [&] {
    Tally t;
    for (const auto& y : supports)
      if (is_atomic(y)) t.expect(supph(realize(y)) == y, [&] { return y.to_string() + " is not principal"; });
    return t.done("atomic supports");
  });
}

// ---------------------------------------------------------------- geometric

struct MapCase {
  RingMap f;
  unsigned bound;
};

std::vector<MapCase> default_maps() {
  const Ring z = Ring::integers(), f2 = Ring::polynomials(2);
  const Ring f4 = poly_quotient(2, {1, 1, 1});
  const BaseRing& b2 = f2.component(0).base_ring();
  std::vector<MapCase> out;
  for (long n : {4, 6, 12}) out.push_back({RingMap::canonical(z, Zn(n)), 7});
  for (long p : {2, 3, 5}) out.push_back({RingMap::canonical(z, Zn(p)), 7});
  out.push_back({RingMap::polynomial(f2, f4, f4.from_base(b2.poly({0, 1}))), 2});
  out.push_back({RingMap::polynomial(f2, f4, f4.from_base(b2.poly({1, 1}))), 2});
  out.push_back({localization_map(z, z.from_int(2)), 7});
  out.push_back({localization_map(z, z.from_int(6)), 7});
  out.push_back({localization_map(f2, f2.from_base(b2.poly({0, 1}))), 2});
  return out;
}

/// Maps out of r: identity, quotients at enumerated closed points, localizations at them.
std::vector<MapCase> maps_out_of(const Ring& r, unsigned bound) {
  std::vector<MapCase> out{{RingMap::identity(r), bound}};
  if (r.size() != 1) {
    for (std::size_t c = 0; c < r.size(); ++c) {
      const Component& comp = r.component(c);
      std::optional<Scalar> t;
      if (!comp.base_ring().is_integers()) t = comp.from_base(comp.base_ring().variable());
      out.push_back({RingMap(r, Ring::from_component(comp), {{c, t}}), bound});
    }
    return out;
  }
  const Component& comp = r.component(0);
  for (const auto& x : enumerate_points(r, bound).points) {
    if (x.is_generic()) continue;
    const Element p = r.from_base(*x.prime);
    if (!r.is_zero(p) && !r.is_unit(p)) {
      const Ring q = Ring::quotient(r, p);
      out.push_back({comp.base_ring().is_integers() ? RingMap::canonical(r, q)
                                                    : RingMap::polynomial(r, q, q.from_base(comp.base_ring().variable())),
                     bound});
    }
    if (!r.is_zero(p)) out.push_back({localization_map(r, p), bound});
  }
  return out;
}

void geometric_suite(Checker& ck, const std::vector<MapCase>& maps) {
  for (const auto& [f, bound] : maps) {
    const std::string subj = f.to_string();
    const auto sources = witness_objects(f.source(), std::min(bound, 3u));
    ck.run("geometric.pullback-support", subj, [&] {
      Tally t;
      for (const auto& p : sources)
        t.expect(supph(pullback(f, p)) == preimage_support(f, supph(p)), [&] { return "support formula fails"; });
      return t.done("complexes");
    });
    ck.run("geometric.diagram", subj, [&] {
      Tally t;
      for (const auto& y : enumerate_points(f.target(), bound).points) {
        const SpectrumPoint e = E_map(f.target(), y);
        const SpectrumPoint x = spc_map(f, e);
        t.expect(x.support == E_map(f.source(), contraction(f, y)).support &&
                     x.support == spc_map_by_intersection(f, y, f.source().component(0).base_ring().is_integers() ? std::max(bound, 13u) : bound),
                 [&] { return "diagram fails at " + point_label(f.target(), y); });
      }
      return t.done("points");
    });
    ck.run("geometric.continuity", subj, [&] {
      Tally t;
      const SpectrumModel target(f.target(), bound);
      for (const auto& [label, a] : canonical_witnesses(f.source(), std::min(bound, 3u))) {
        const Support sa = supph(a);
        std::vector<std::size_t> pre;
        for (std::size_t j = 0; j < target.points().size(); ++j) {
          const PointDescriptor x = contraction(f, target.points()[j].descriptor);
          if (Support::closure(f.source(), x).is_subset_of(sa)) pre.push_back(j);
        }
        t.expect(pre == target.F(pullback(f, a)), [&] { return "continuity fails for " + label; });
      }
      return t.done("witnesses");
    });
    ck.run("geometric.meet-dense", subj, [&] {
      auto family = supports_of(f.source(), std::min(bound, 3u));
      if (family.size() > 40) family.resize(40, Support(f.source()));
      const GeometricReport g = verify_geometric(f, family);
      if (!g.ok()) return Outcome{false, g.failures.empty() ? "not dense" : g.failures.front()};
      return Outcome{true, std::to_string(g.checks.size()) + " identities"};
    });
  }
  ck.run("geometric.functorial", "composable pairs", [&] {
    Tally t;
    for (const auto& [f, bf] : maps)
      for (const auto& [g, bg] : maps) {
        if (!(f.target() == g.source())) continue;
        const RingMap gf = compose(g, f);
        for (const auto& y : enumerate_points(gf.target(), std::max(bf, bg)).points) {
          const SpectrumPoint e = E_map(gf.target(), y);
          t.expect(spc_map(gf, e).descriptor == spc_map(f, spc_map(g, e)).descriptor,
                   [&] { return "composition law fails for " + gf.to_string(); });
        }
      }
    return t.done("points");
  });
  ck.run("geometric.faithful", "ring map pairs", [&] {
    Tally t;
    for (const auto& [f, bf] : maps)
      for (const auto& [g, bg] : maps) {
        if (!(f.source() == g.source()) || !(f.target() == g.target())) continue;
        t.expect(maps_equal_via_derived(f, g) == (f == g), [&] { return "detector wrong on " + f.to_string(); });
      }
    return t.done("pairs");
  });
}

// ---------------------------------------------------------------- presheaf

Complex fractional_koszul(const Ring& rv, long a) {
  Element x;
  for (const auto& c : rv.components()) {
    const BaseElem n = c.base_ring().is_integers() ? BaseElem(mpz_class(a)) : c.base_ring().poly({a & 1, 1});
    x.parts.push_back(c.kind() == ComponentKind::localization ? c.fraction(n, c.parameter()) : c.from_base(n));
  }
  return koszul(rv, x);
}

void presheaf_suite(Checker& ck, const Ring& r, const VerifyOptions& o) {
  const std::string subj = subject_of(r, o.bound);
  const unsigned bound = std::min(o.bound, 3u);
  const auto supports = supports_of(r, bound);
  std::vector<OpenSet> opens;
  for (const auto& y : supports) opens.emplace_back(y);
  const auto objects = witness_objects(r, std::min(bound, 2u));
  ck.run("presheaf.restriction", subj, [&] {
    Tally t;
    for (const auto& v3 : opens)
      for (const auto& v2 : opens) {
        if (!v2.is_subset_of(v3)) continue;
        for (const auto& v1 : opens) {
          if (!v1.is_subset_of(v2) || t.n() >= 4000) continue;
          t.expect(compose(restriction(v2, v1), restriction(v3, v2)) == restriction(v3, v1),
                   [&] { return "restrictions do not compose"; });
        }
      }
    return t.done("triples");
  });
  ck.run("presheaf.localize-support", subj, [&] {
    Tally t;
    for (const auto& v : opens)
      for (const auto& p : objects)
        t.expect(supph(localize_object(p, v)) == preimage_support(section_map(v), supph(p)),
                 [&] { return "supph(q_V P) wrong over " + v.to_string(); });
    return t.done("pairs");
  });
  ck.run("presheaf.clear", subj, [&] {
    Tally t;
    for (const auto& v : opens) {
      const RingMap loc = section_map(v);
      std::vector<Complex> ps;
      for (const auto& p : objects) ps.push_back(pullback(loc, p));
      for (long a : {3, 5}) ps.push_back(fractional_koszul(loc.target(), a));
      ps.push_back(tensor(fractional_koszul(loc.target(), 3), fractional_koszul(loc.target(), 7)));
      for (const auto& p : ps) {
        const ClearedComplex c = clear_denominators(loc, p);
        t.expect(verify_cleared(loc, p, c), [&] { return "no verified inverse over " + v.to_string(); });
      }
    }
    return t.done("objects");
  });
  ck.run("presheaf.J-monotone", subj, [&] {
    Tally t;
    for (const auto& v2 : opens) {
      t.expect(J_by_points(v2, bound) == J_of_open(v2), [&] { return "J(V) not generated by points"; });
      for (const auto& v1 : opens)
        if (v1.is_subset_of(v2))
          t.expect(J_of_open(v2).is_subset_of(J_of_open(v1)), [&] { return "J not monotone"; });
    }
    return t.done("opens and pairs");
  });
  ck.run("presheaf.hom", subj, [&] {
    Tally t;
    for (const auto& v : opens) {
      if (t.n() >= 60) break;
      for (std::size_t i = 0; i < objects.size() && i < 4; ++i)
        for (std::size_t j = 0; j < objects.size() && j < 4; ++j) {
          const FractionReport fr = fraction_spotcheck(objects[i], objects[j], v, 8, HomLimits{400});
          t.expect(fr.ok(), [&] { return fr.notes.empty() ? "fraction check failed" : fr.notes.front(); });
        }
    }
    return t.done("pairs");
  });
  ck.run("presheaf.molecular", subj, [&] { return Outcome{true, std::to_string(molecular_check(r, bound)) + " supports"}; });
  ck.run("presheaf.morphism", subj, [&] {
    Tally t;
    for (const auto& [f, b] : maps_out_of(r, bound)) {
      (void)b;
      for (const auto& v : opens) {
        const auto rep = presheaf_morphism_check(f, v, objects);
        t.expect(rep.ok(), [&] { return rep.failures.empty() ? "check failed" : rep.failures.front(); });
      }
    }
    return t.done("(map, open) pairs");
  });
}

// ---------------------------------------------------------------- endo

void endo_suite(Checker& ck, const Ring& r, const VerifyOptions& o, std::mt19937_64& rng) {
  const std::string subj = subject_of(r, o.bound);
  const auto elems = multipliers(r, rng, 100);
  const std::vector<Complex> gens{unit(r)};
  ck.run("endo.split", subj, [&] {
    Tally t;
    for (const auto& a : elems) t.expect(sigma(lambda(a, r)) == a, [&] { return "sigma(lambda(" + r.to_string(a) + "))"; });
    return t.done("elements");
  });
  ck.run("endo.pnil", subj, [&] {
    Tally t;
    for (const auto& a : elems) {
      const NilpotenceCheck n = is_pointwise_nilpotent(lambda(a, r), gens);
      if (!n.value) throw BoundExceeded(n.reason);
      bool witnessed = true;
      if (*n.value) {
        const ChainMap power = ChainMap::multiplication(gens[0], r.pow(a, n.exponent));
        witnessed = verify_homotopy(power, n.witnesses[0]);
      }
      t.expect(*n.value == r.is_nilpotent(a) && witnessed, [&] { return "PNil wrong at " + r.to_string(a); });
    }
    return t.done("multipliers");
  });
  ck.run("endo.commutative", subj, [&] {
    Tally t;
    const Complex u = unit(r);
    const auto g = chain_map_generators(u, u);
    for (const auto& a : g)
      for (const auto& b : g) t.expect(maps_equal(compose(a, b), compose(b, a)), [&] { return "End(1) not commutative"; });
    return t.done("pairs");
  });
  const auto supports = supports_of(r, std::min(o.bound, 3u));
  ck.run("endo.surjective", subj, [&] {
    Tally t;
    for (const auto& y : supports) {
      const Ring rv = section_ring(OpenSet(y));
      const NilradicalQuotient nq(rv);
      if (rv.cardinality() && *rv.cardinality() <= 4096) {
        std::vector<Element> image;
        for (const auto& a : rv.elements()) image.push_back(nq.project(a));
        for (const auto& b : nq.reduced().elements())
          t.expect(std::find(image.begin(), image.end(), b) != image.end(), [&] { return "not onto over " + rv.name(); });
      } else {
        for (std::size_t c = 0; c < rv.size(); ++c)
          t.expect(rv.component(c).kind() == ComponentKind::quotient || rv.component(c) == nq.reduced().component(c),
                   [&] { return "domain component changed"; });
      }
    }
    return t.done("elements");
  });
  ck.run("endo.descend", subj, [&] {
    Tally t;
    for (const auto& y : supports) {
      const OpenSet v(y);
      const RingMap rho = restriction(OpenSet::whole(r), v);
      for (std::size_t k = 0; k < elems.size() && k < 40; ++k) {
        const IdentityEndo d = rho_descend(lambda(elems[k], r), v);
        t.expect(d.multiplier() == rho.apply(elems[k]), [&] { return "descent is not the localization"; });
        if (r.is_nilpotent(elems[k])) {
          const auto n = is_pointwise_nilpotent(d, {unit(d.ring())});
          t.expect(n.value && *n.value, [&] { return "descent loses pointwise nilpotence"; });
        }
      }
    }
    return t.done("descents");
  });
}

// ---------------------------------------------------------------- reconstruct

bool has_prefix(const std::string& s, const std::string& p) { return s.rfind(p, 0) == 0; }

void reconstruct_suite(Checker& ck, const Ring& r, const VerifyOptions& o) {
  const std::string subj = subject_of(r, o.bound);
  std::optional<RingedSpaceModel> m;
  auto model = [&]() -> const RingedSpaceModel& {
    if (!m) m = reconstruct_ringed_space(r, o.bound);
    return *m;
  };
  ck.run("reconstruct.space", subj, [&] {
    const auto& mm = model();
    return Outcome{mm.homeomorphic(), std::to_string(mm.space.size()) + " points, " +
                                          std::to_string(mm.covering.size()) + " covering relations"};
  });
  ck.run("reconstruct.sections", subj, [&] {
    Tally t;
    for (const auto& s : model().sections)
      t.expect(s.match, [&] { return s.reduced.name() + " vs " + s.expected.name(); });
    return t.done("basic opens; global sections " + model().global_sections().name());
  });
  ck.run("reconstruct.stalks", subj, [&] {
    Tally t;
    for (const auto& s : model().stalks) t.expect(s.match, [&] { return "stalk at " + s.label; });
    return t.done("stalks");
  });
  ck.run("reconstruct.sheaf", subj, [&] {
    const auto& mm = model();
    for (const auto& f : mm.failures)
      if (has_prefix(f, "restrictions") || has_prefix(f, "gluing")) return Outcome{false, f};
    return Outcome{true, std::to_string(mm.restrictions_checked) + " restriction triples, " +
                             std::to_string(mm.sheaf_conditions_checked) + " covers" +
                             (mm.sheaf_exhaustive ? "" : " (gluing not checked: infinite ring)")};
  });
  ck.run("reconstruct.fixed-point", subj, [&] {
    const auto& mm = model();
    if (mm.ring == mm.reduced_ring) return Outcome{mm.fixed_point(), "reduced input"};
    const RingedSpaceModel red = reconstruct_ringed_space(mm.reduced_ring, o.bound);
    bool same = red.fixed_point() && red.sections.size() == mm.sections.size();
    for (std::size_t i = 0; same && i < red.sections.size(); ++i) same = red.sections[i].reduced == mm.sections[i].reduced;
    return Outcome{same, "R and R_red reconstruct to the same sections"};
  });
}

std::vector<Ring> default_rings(const std::string& suite) {
  const Ring z = Ring::integers(), f2 = Ring::polynomials(2);
  if (suite == "thomason") return {z, Zn(12), f2, Ring::product({Zn(4), Zn(3)})};
  if (suite == "topology") return {z, Zn(12), f2, Ring::product({Zn(4), Zn(3)}), localize_ring(z, z.from_int(2))};
  if (suite == "presheaf") return {z, Zn(12), f2};
  if (suite == "endo") return {Zn(12), Zn(4), poly_quotient(2, {0, 0, 1}), z};
  return {Zn(12), z, Zn(6), f2, Ring::product({Zn(4), Zn(3)})};
}

void run_one(const std::string& suite, const VerifyOptions& o, VerificationReport& report) {
  Checker ck(report);
  std::mt19937_64 rng(o.seed);
  report.suites.push_back(suite);
  if (suite == "geometric") {
    geometric_suite(ck, o.ring ? maps_out_of(*o.ring, o.bound) : default_maps());
    return;
  }
  const std::vector<Ring> rings = o.ring ? std::vector<Ring>{*o.ring} : default_rings(suite);
  for (const auto& r : rings) {
    VerifyOptions local = o;
    if (!o.ring && suite == "reconstruct" && !r.cardinality() && r.component(0).base_ring().is_integers()) {
      local.bound = std::max(o.bound, 7u);
    }
    if (suite == "thomason") thomason_suite(ck, r, local, rng);
    if (suite == "topology") topology_suite(ck, r, local);
    if (suite == "presheaf") presheaf_suite(ck, r, local);
    if (suite == "endo") endo_suite(ck, r, local, rng);
    if (suite == "reconstruct") reconstruct_suite(ck, r, local);
  }
}

}  // namespace

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass:
      return "pass";
    case CheckStatus::fail:
      return "fail";
    case CheckStatus::indeterminate:
      return "indeterminate";
  }
  return "fail";
}

bool VerificationReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.status == CheckStatus::pass; });
}

std::size_t VerificationReport::count(CheckStatus s) const {
  return static_cast<std::size_t>(
      std::count_if(checks.begin(), checks.end(), [s](const CheckResult& c) { return c.status == s; }));
}

const std::vector<std::pair<std::string, std::string>>& invariant_catalog() { return kCatalog; }

const std::vector<std::string>& suite_names() { return kSuites; }

VerificationReport run_suite(const std::string& suite, const VerifyOptions& options) {
  VerificationReport report;
  if (suite == "all") {
    for (const auto& s : kSuites) run_one(s, options, report);
  } else if (std::find(kSuites.begin(), kSuites.end(), suite) != kSuites.end()) {
    run_one(suite, options, report);
  } else {
    throw InvalidArgument("unknown suite '" + suite + "'");
  }
  return report;
}

}  // namespace ttg
