#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ttg/linalg.hpp"
#include "ttg/ring.hpp"

namespace ttg {

/// Matrix with entries in a whole Ring (one Element per entry).
struct RingMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Element> entries;  // row-major

  const Element& at(std::size_t i, std::size_t j) const { return entries.at(i * cols + j); }
  friend bool operator==(const RingMatrix&, const RingMatrix&) = default;
};

/// The part of a RingMatrix living in component `c`.
Matrix component_matrix(const Ring& ring, const RingMatrix& m, std::size_t c);

/// Bounded complex of finite free modules over a single component, with
/// homological grading: d_n maps C_n to C_{n-1}.
///
/// Ranks are trimmed so that the lowest and highest stored degrees are
/// nonzero; the zero complex stores no degrees. d o d == 0 and all matrix
/// shapes are checked on construction.
class ComponentComplex {
 public:
  explicit ComponentComplex(Component ring);
  /// differentials[k] is d_{lo+k+1}: C_{lo+k+1} -> C_{lo+k}.
  ComponentComplex(Component ring, int lo, std::vector<std::size_t> ranks, std::vector<Matrix> differentials);

  const Component& ring() const { return ring_; }
  bool is_zero() const { return ranks_.empty(); }
  int lo() const { return lo_; }
  int hi() const { return lo_ + static_cast<int>(ranks_.size()) - 1; }
  std::size_t rank(int n) const;
  std::size_t total_rank() const;
  /// d_n as a rank(n-1) x rank(n) matrix (zero outside the stored range).
  Matrix differential(int n) const;

  friend bool operator==(const ComponentComplex&, const ComponentComplex&) = default;

 private:
  void trim_and_check();

  Component ring_;
  int lo_ = 0;
  std::vector<std::size_t> ranks_;
  std::vector<Matrix> diffs_;  // diffs_[k] = d_{lo+k+1}
};

/// Object of D^perf(R): one ComponentComplex per component of R.
class Complex {
 public:
  explicit Complex(Ring ring);
  Complex(Ring ring, std::vector<ComponentComplex> blocks);
  /// Same ranks in every component; differentials[k] is d_{lo+k+1}.
  static Complex from_ring_matrices(const Ring& ring, int lo, const std::vector<std::size_t>& ranks,
                                    const std::vector<RingMatrix>& differentials);

  const Ring& ring() const { return ring_; }
  const std::vector<ComponentComplex>& blocks() const { return blocks_; }
  const ComponentComplex& block(std::size_t c) const { return blocks_.at(c); }
  bool is_zero() const;
  int lo() const;
  int hi() const;
  std::size_t total_rank() const;
  /// Ranks agree across components (always true for a single component).
  bool has_uniform_ranks() const;
  std::size_t rank(int n) const;  // requires uniform ranks
  RingMatrix differential(int n) const;

  friend bool operator==(const Complex&, const Complex&) = default;

 private:
  Ring ring_;
  std::vector<ComponentComplex> blocks_;
};

/// Isomorphism class of a module over a Ring, component by component.
struct ModuleClass {
  std::vector<ComponentModule> components;

  bool is_zero() const;
  friend bool operator==(const ModuleClass&, const ModuleClass&) = default;
};

std::string to_string(const Ring& ring, const ModuleClass& m);

using DegreeMatrices = std::map<int, Matrix>;

/// Degreewise map of complexes commuting with the differentials.
class ChainMap {
 public:
  ChainMap(Complex source, Complex target, std::vector<DegreeMatrices> components);

  static ChainMap identity(const Complex& p);
  static ChainMap zero(const Complex& source, const Complex& target);
  /// Multiplication by r on every degree of p.
  static ChainMap multiplication(const Complex& p, const Element& r);

  const Complex& source() const { return source_; }
  const Complex& target() const { return target_; }
  const std::vector<DegreeMatrices>& components() const { return components_; }
  /// f_n in component c; a zero matrix of the right shape when not stored.
  Matrix at(std::size_t c, int n) const;

 private:
  Complex source_;
  Complex target_;
  std::vector<DegreeMatrices> components_;
};

ChainMap compose(const ChainMap& g, const ChainMap& f);  // g o f
ChainMap add(const ChainMap& f, const ChainMap& g);
ChainMap subtract(const ChainMap& f, const ChainMap& g);
ChainMap scale(const Element& r, const ChainMap& f);
ChainMap power(const ChainMap& f, unsigned e);
bool maps_equal(const ChainMap& f, const ChainMap& g);

/// h_n : P_n -> Q_{n+1} per component, with f == d h + h d.
struct Homotopy {
  std::vector<DegreeMatrices> components;
};

/// The unit: R in degree 0.
Complex unit(const Ring& ring);
Complex zero_complex(const Ring& ring);
/// R --r--> R in degrees 1, 0: the cone of multiplication by r on the unit.
Complex koszul(const Ring& ring, const Element& r);
/// Koszul complex of a closed point: R_c --p--> R_c on component c, zero elsewhere.
Complex koszul_at(const Ring& ring, const PointDescriptor& x);
/// The unit of component c only (R_c in degree 0, zero elsewhere).
Complex component_unit(const Ring& ring, std::size_t c);

/// T^k(P): degrees shifted up by k, differentials multiplied by (-1)^k.
Complex shift(const Complex& p, int k = 1);
/// T^k(f), with (T^k f)_n = f_{n-k}.
ChainMap shift(const ChainMap& f, int k = 1);
Complex direct_sum(const Complex& p, const Complex& q);
Complex direct_sum(const std::vector<Complex>& objects, const Ring& ring);

/// The distinguished triangle P -> Q -> cone(f) -> T(P).
struct Triangle {
  ChainMap first;   // f : P -> Q
  ChainMap second;  // Q -> cone(f)
  ChainMap third;   // cone(f) -> T(P)
  const Complex& cone() const { return second.target(); }
};

/// cone(f)_n = Q_n (+) P_{n-1} with d = [[d_Q, f], [0, -d_P]].
Triangle cone(const ChainMap& f);

/// Total complex with Koszul signs d(x (x) y) = dx (x) y + (-1)^|x| x (x) dy.
/// Summands of degree n are ordered by the degree of the left factor.
Complex tensor(const Complex& p, const Complex& q);

ModuleClass homology(const Complex& p, int n);
ComponentModule homology(const ComponentComplex& p, int n);
/// True iff every homology module vanishes.
bool is_acyclic(const Complex& p);

struct HomLimits {
  std::size_t max_rank_product = 64;  // total_rank(P) * total_rank(Q) per component
};

/// The Hom complex in degrees -1, 0, 1 (per component); its H_0 is Hom in
/// the homotopy category.
ComponentComplex hom_complex(const ComponentComplex& p, const ComponentComplex& q, const HomLimits& limits = {});

/// Chain maps P -> Q modulo null-homotopic ones.
ModuleClass hom_up_to_homotopy(const Complex& p, const Complex& q, const HomLimits& limits = {});

/// Chain maps generating Hom_K(P, Q) (cycles of the Hom complex).
std::vector<ChainMap> chain_map_generators(const Complex& p, const Complex& q, const HomLimits& limits = {});

/// A homotopy h with f == d h + h d, or nullopt when f is not null-homotopic.
std::optional<Homotopy> null_homotopy(const ChainMap& f, const HomLimits& limits = {});
inline bool is_null_homotopic(const ChainMap& f, const HomLimits& limits = {}) {
  return null_homotopy(f, limits).has_value();
}
/// Whether h is a valid null-homotopy of f.
bool verify_homotopy(const ChainMap& f, const Homotopy& h);

/// Formal summand (P, p) of the idempotent completion: p o p is homotopic to p.
class IdempotentPair {
 public:
  IdempotentPair(ChainMap idempotent, Homotopy witness);
  /// Finds the witness itself; throws InvalidArgument when p o p - p is not null-homotopic.
  static IdempotentPair from_map(const ChainMap& idempotent);

  const Complex& object() const { return idempotent_.source(); }
  const ChainMap& idempotent() const { return idempotent_; }
  const Homotopy& witness() const { return witness_; }

 private:
  ChainMap idempotent_;
  Homotopy witness_;
};

/// Exactness of H_n(A) -> H_n(B) -> H_n(C) at H_n(B) for chain maps
/// alpha : A -> B and beta : B -> C whose composite is null-homotopic.
bool homology_exact_at(const ChainMap& alpha, const ChainMap& beta, int n);

}  // namespace ttg
