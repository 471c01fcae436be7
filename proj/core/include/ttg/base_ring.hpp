#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace ttg {

/// Polynomial over F_p, coefficients low-to-high, no trailing zeros.
/// The zero polynomial has an empty coefficient vector.
struct Poly {
  std::vector<std::uint32_t> coeffs;

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  bool is_zero() const { return coeffs.empty(); }
  friend bool operator==(const Poly&, const Poly&) = default;
};

/// An element of Z or of F_p[t].
using BaseElem = std::variant<mpz_class, Poly>;

enum class BaseKind { integers, polynomials };

/// One of the two Euclidean bases: Z or F_p[t].
///
/// All values are canonicalized by the functions here: polynomial coefficients
/// are reduced mod p and trimmed. Canonical associates are positive integers and
/// monic polynomials.
class BaseRing {
 public:
  static BaseRing integers() { return BaseRing(BaseKind::integers, 0); }
  static BaseRing polynomials(std::uint32_t p);

  BaseKind kind() const { return kind_; }
  bool is_integers() const { return kind_ == BaseKind::integers; }
  /// p for F_p[t], 0 for Z.
  std::uint32_t characteristic() const { return p_; }

  BaseElem zero() const;
  BaseElem one() const;
  BaseElem from_int(long v) const;
  BaseElem variable() const;  // t; throws for Z
  BaseElem poly(std::vector<std::int64_t> low_to_high) const;

  BaseElem add(const BaseElem& a, const BaseElem& b) const;
  BaseElem sub(const BaseElem& a, const BaseElem& b) const;
  BaseElem mul(const BaseElem& a, const BaseElem& b) const;
  BaseElem neg(const BaseElem& a) const;
  BaseElem pow(const BaseElem& a, unsigned e) const;

  bool is_zero(const BaseElem& a) const;
  bool is_one(const BaseElem& a) const;
  bool is_unit(const BaseElem& a) const;
  BaseElem unit_inverse(const BaseElem& a) const;

  /// Euclidean division: a = q*b + r with norm(r) < norm(b).
  std::pair<BaseElem, BaseElem> divmod(const BaseElem& a, const BaseElem& b) const;
  BaseElem mod(const BaseElem& a, const BaseElem& b) const { return divmod(a, b).second; }
  bool divides(const BaseElem& b, const BaseElem& a) const;
  /// a / b, which must be exact.
  BaseElem exact_div(const BaseElem& a, const BaseElem& b) const;

  /// |a| for Z, deg(a)+1 for polynomials, 0 for zero.
  mpz_class norm(const BaseElem& a) const;
  /// The unit u with u*a canonical (1 for a == 0).
  BaseElem normalizing_unit(const BaseElem& a) const;
  BaseElem canonical(const BaseElem& a) const;
  BaseElem gcd(const BaseElem& a, const BaseElem& b) const;

  struct Bezout {
    BaseElem g, x, y;  // a*x + b*y == g, g canonical
  };
  Bezout ext_gcd(const BaseElem& a, const BaseElem& b) const;

  /// Canonical order: integers ascending; polynomials by degree, then
  /// coefficients from the leading term down.
  std::strong_ordering compare(const BaseElem& a, const BaseElem& b) const;
  bool less(const BaseElem& a, const BaseElem& b) const { return compare(a, b) < 0; }

  /// Evaluate a polynomial at a residue x in F_p (polynomial base only).
  std::uint32_t evaluate(const BaseElem& a, std::uint32_t x) const;

  std::string to_string(const BaseElem& a) const;
  std::string name() const;

  friend bool operator==(const BaseRing&, const BaseRing&) = default;

 private:
  BaseRing(BaseKind k, std::uint32_t p) : kind_(k), p_(p) {}

  const mpz_class& z(const BaseElem& a) const;
  const Poly& pl(const BaseElem& a) const;

  BaseKind kind_;
  std::uint32_t p_;
};

bool is_small_prime(std::uint32_t p);

}  // namespace ttg
