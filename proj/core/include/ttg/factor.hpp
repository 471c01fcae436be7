#pragma once

#include <vector>

#include "ttg/base_ring.hpp"

namespace ttg {

/// Hard limits for exhaustive factorization. Exceeding either raises BoundExceeded.
struct FactorBounds {
  mpz_class max_integer{"1000000000000"};  // |r| for Z
  int max_degree = 12;                      // deg r for F_p[t]
};

struct PrimePower {
  BaseElem prime;  // canonical: positive / monic
  unsigned multiplicity = 0;
};

struct Factorization {
  BaseElem unit;
  std::vector<PrimePower> factors;  // ascending canonical order
};

/// Trial division over Z, exhaustive monic divisor search over F_p[t].
/// unit * prod(prime^multiplicity) == r exactly.
Factorization factor_element(const BaseRing& ring, const BaseElem& r, const FactorBounds& bounds = {});

/// Distinct canonical prime divisors of r, ascending.
std::vector<BaseElem> prime_divisors(const BaseRing& ring, const BaseElem& r, const FactorBounds& bounds = {});

/// Product of the distinct prime divisors (1 for units).
BaseElem radical(const BaseRing& ring, const BaseElem& r, const FactorBounds& bounds = {});

bool is_prime_element(const BaseRing& ring, const BaseElem& r, const FactorBounds& bounds = {});

/// Primes <= bound over Z; monic irreducibles of degree <= bound over F_p[t].
std::vector<BaseElem> enumerate_primes(const BaseRing& ring, unsigned bound);

/// The part of a coprime to every prime dividing f: strips all common factors.
BaseElem coprime_part(const BaseRing& ring, BaseElem a, const BaseElem& f);

}  // namespace ttg
