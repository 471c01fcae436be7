#include "ttg/factor.hpp"

#include <algorithm>
#include <cmath>

#include "ttg/error.hpp"

namespace ttg {

namespace {

void push_power(std::vector<PrimePower>& out, BaseElem prime, unsigned mult) {
  if (mult > 0) out.push_back({std::move(prime), mult});
}

Factorization factor_integer(const BaseRing& ring, const mpz_class& r, const FactorBounds& bounds) {
  if (abs(r) > bounds.max_integer) {
    throw BoundExceeded("integer " + r.get_str() + " exceeds factorization bound " + bounds.max_integer.get_str());
  }
  Factorization f{ring.from_int(r < 0 ? -1 : 1), {}};
  mpz_class n = abs(r);
  for (mpz_class d = 2; d * d <= n; ++d) {
    unsigned mult = 0;
    while (n % d == 0) {
      n /= d;
      ++mult;
    }
    push_power(f.factors, BaseElem(d), mult);
  }
  if (n > 1) push_power(f.factors, BaseElem(n), 1);
  return f;
}

/// Next monic polynomial of the same degree in counting order; false on wraparound.
bool next_monic(Poly& q, std::uint32_t p) {
  for (std::size_t i = 0; i + 1 < q.coeffs.size(); ++i) {
    if (++q.coeffs[i] < p) return true;
    q.coeffs[i] = 0;
  }
  return false;
}

Poly first_monic(int degree) {
  Poly q;
  q.coeffs.assign(static_cast<std::size_t>(degree) + 1, 0);
  q.coeffs.back() = 1;
  return q;
}

Factorization factor_poly(const BaseRing& ring, const BaseElem& r, const FactorBounds& bounds) {
  const Poly& a = std::get<Poly>(r);
  if (a.degree() > bounds.max_degree) {
    throw BoundExceeded("polynomial of degree " + std::to_string(a.degree()) + " exceeds factorization bound " +
                        std::to_string(bounds.max_degree));
  }
  Factorization f{ring.unit_inverse(ring.normalizing_unit(r)), {}};
  BaseElem n = ring.canonical(r);
  const std::uint32_t p = ring.characteristic();
  for (int k = 1; 2 * k <= std::get<Poly>(n).degree(); ++k) {
    Poly q = first_monic(k);
    do {
      unsigned mult = 0;
      while (ring.divides(BaseElem(q), n)) {
        n = ring.exact_div(n, BaseElem(q));
        ++mult;
      }
      push_power(f.factors, BaseElem(q), mult);
    } while (2 * k <= std::get<Poly>(n).degree() && next_monic(q, p));
  }
  if (std::get<Poly>(n).degree() > 0) push_power(f.factors, n, 1);
  std::sort(f.factors.begin(), f.factors.end(),
            [&](const PrimePower& x, const PrimePower& y) { return ring.less(x.prime, y.prime); });
  return f;
}

}  // namespace

Factorization factor_element(const BaseRing& ring, const BaseElem& r, const FactorBounds& bounds) {
  if (ring.is_zero(r)) throw InvalidArgument("cannot factor zero");
  if (ring.is_integers()) return factor_integer(ring, std::get<mpz_class>(r), bounds);
  return factor_poly(ring, r, bounds);
}

std::vector<BaseElem> prime_divisors(const BaseRing& ring, const BaseElem& r, const FactorBounds& bounds) {
  std::vector<BaseElem> out;
  for (auto& pp : factor_element(ring, r, bounds).factors) out.push_back(std::move(pp.prime));
  return out;
}

BaseElem radical(const BaseRing& ring, const BaseElem& r, const FactorBounds& bounds) {
  BaseElem acc = ring.one();
  for (const auto& q : prime_divisors(ring, r, bounds)) acc = ring.mul(acc, q);
  return acc;
}

bool is_prime_element(const BaseRing& ring, const BaseElem& r, const FactorBounds& bounds) {
  if (ring.is_zero(r) || ring.is_unit(r)) return false;
  const auto f = factor_element(ring, r, bounds);
  return f.factors.size() == 1 && f.factors[0].multiplicity == 1;
}

std::vector<BaseElem> enumerate_primes(const BaseRing& ring, unsigned bound) {
  std::vector<BaseElem> out;
  if (ring.is_integers()) {
    std::vector<bool> composite(bound + 1, false);
    for (unsigned n = 2; n <= bound; ++n) {
      if (composite[n]) continue;
      out.emplace_back(mpz_class(n));
      for (unsigned long m = 2UL * n; m <= bound; m += n) composite[m] = true;
    }
    return out;
  }
  const std::uint32_t p = ring.characteristic();
  if (std::pow(static_cast<double>(p), static_cast<double>(bound)) > 2.0e6) {
    throw BoundExceeded("enumerating irreducibles of degree <= " + std::to_string(bound) + " over F" +
                        std::to_string(p) + " is too large");
  }
  // Sieve by the irreducibles already found (degree <= half).
  for (int k = 1; k <= static_cast<int>(bound); ++k) {
    Poly q = first_monic(k);
    do {
      bool irreducible = true;
      for (const auto& r : out) {
        if (2 * std::get<Poly>(r).degree() > k) break;
        if (ring.divides(r, BaseElem(q))) {
          irreducible = false;
          break;
        }
      }
      if (irreducible) out.emplace_back(q);
    } while (next_monic(q, p));
  }
  std::sort(out.begin(), out.end(), [&](const BaseElem& x, const BaseElem& y) { return ring.less(x, y); });
  return out;
}

BaseElem coprime_part(const BaseRing& ring, BaseElem a, const BaseElem& f) {
  if (ring.is_zero(a)) return a;
  for (;;) {
    BaseElem g = ring.gcd(a, f);
    if (ring.is_unit(g)) return a;
    a = ring.exact_div(a, g);
  }
}

}  // namespace ttg
