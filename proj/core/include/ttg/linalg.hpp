#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ttg/matrix.hpp"

namespace ttg {

/// U * M * V == D with U, V invertible and D diagonal, d1 | d2 | ... .
struct SmithForm {
  Matrix U;
  Matrix U_inv;
  Matrix D;
  Matrix V;
  std::size_t rank = 0;

  std::vector<Scalar> diagonal() const;
};

/// Smith normal form over a Euclidean component (a base or a localization of
/// one). Pivot: smallest Euclidean norm, ties broken row-major. Diagonal
/// entries are canonical associates (positive, monic, free of inverted primes).
/// Throws UnsupportedRing for quotient components.
SmithForm smith_normal_form(const Component& ring, const Matrix& m);

/// Isomorphism class of a finitely generated module over one component:
/// free_rank copies of the component plus cyclic torsion B/(e) for each
/// divisor e, where the divisors are canonical base elements forming a
/// divisibility chain. Over B/(d) a summand B/(d) is counted as free.
struct ComponentModule {
  std::size_t free_rank = 0;
  std::vector<BaseElem> divisors;

  bool is_zero() const { return free_rank == 0 && divisors.empty(); }
  friend bool operator==(const ComponentModule&, const ComponentModule&) = default;
};

std::string to_string(const Component& ring, const ComponentModule& m);

/// Some x with a * x == b, or nullopt. Works on every component kind;
/// quotients are lifted to the base with d*I adjoined.
std::optional<Matrix> solve(const Component& ring, const Matrix& a, const Matrix& b);

/// Columns generating {x : a * x == 0}.
Matrix kernel_generators(const Component& ring, const Matrix& a);

/// Module class of span(sub) / span(quot); requires span(quot) within span(sub).
/// Both are given by generator columns in the same ambient free module.
ComponentModule subquotient(const Component& ring, const Matrix& sub, const Matrix& quot);

/// Cokernel of a : R^cols -> R^rows.
ComponentModule cokernel(const Component& ring, const Matrix& a);

/// Whether every column of b lies in the span of the columns of a.
bool spans_contain(const Component& ring, const Matrix& a, const Matrix& b);

/// M localized at the component's own inverted element, taken from a class
/// computed over `from` and re-expressed over `to` (a localization of it).
ComponentModule localize_module(const Component& from, const Component& to, const ComponentModule& m);

}  // namespace ttg
