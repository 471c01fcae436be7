#include "ttg/base_ring.hpp"

#include <algorithm>
#include <sstream>

#include "ttg/error.hpp"

namespace ttg {

namespace {

using Coeffs = std::vector<std::uint32_t>;

void trim(Coeffs& c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  // p is prime and small; Fermat.
  std::uint64_t result = 1, base = a % p;
  std::uint32_t e = p - 2;
  while (e > 0) {
    if (e & 1U) result = result * base % p;
    base = base * base % p;
    e >>= 1U;
  }
  return static_cast<std::uint32_t>(result);
}

Poly poly_add(const Poly& a, const Poly& b, std::uint32_t p) {
  Poly r;
  r.coeffs.resize(std::max(a.coeffs.size(), b.coeffs.size()), 0);
  for (std::size_t i = 0; i < r.coeffs.size(); ++i) {
    std::uint64_t s = 0;
    if (i < a.coeffs.size()) s += a.coeffs[i];
    if (i < b.coeffs.size()) s += b.coeffs[i];
    r.coeffs[i] = static_cast<std::uint32_t>(s % p);
  }
  trim(r.coeffs);
  return r;
}

Poly poly_neg(const Poly& a, std::uint32_t p) {
  Poly r = a;
  for (auto& c : r.coeffs) c = c == 0 ? 0 : p - c;
  return r;
}

Poly poly_mul(const Poly& a, const Poly& b, std::uint32_t p) {
  if (a.is_zero() || b.is_zero()) return {};
  Poly r;
  r.coeffs.assign(a.coeffs.size() + b.coeffs.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
    if (a.coeffs[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs.size(); ++j) {
      std::uint64_t v = r.coeffs[i + j] + std::uint64_t{a.coeffs[i]} * b.coeffs[j];
      r.coeffs[i + j] = static_cast<std::uint32_t>(v % p);
    }
  }
  trim(r.coeffs);
  return r;
}

std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b, std::uint32_t p) {
  if (b.is_zero()) throw InvalidArgument("polynomial division by zero");
  Poly rem = a;
  Poly quo;
  const int db = b.degree();
  if (rem.degree() < db) return {quo, rem};
  quo.coeffs.assign(static_cast<std::size_t>(rem.degree() - db + 1), 0);
  const std::uint64_t lead_inv = inv_mod(b.coeffs.back(), p);
  while (!rem.is_zero() && rem.degree() >= db) {
    const int shift = rem.degree() - db;
    const auto factor = static_cast<std::uint32_t>(rem.coeffs.back() * lead_inv % p);
    quo.coeffs[static_cast<std::size_t>(shift)] = factor;
    for (int j = 0; j <= db; ++j) {
      auto& slot = rem.coeffs[static_cast<std::size_t>(shift + j)];
      const std::uint64_t sub = std::uint64_t{factor} * b.coeffs[static_cast<std::size_t>(j)] % p;
      slot = static_cast<std::uint32_t>((slot + p - sub) % p);
    }
    trim(rem.coeffs);
  }
  trim(quo.coeffs);
  return {quo, rem};
}

Poly poly_scale(const Poly& a, std::uint32_t s, std::uint32_t p) {
  Poly r = a;
  for (auto& c : r.coeffs) c = static_cast<std::uint32_t>(std::uint64_t{c} * s % p);
  trim(r.coeffs);
  return r;
}

}  // namespace

bool is_small_prime(std::uint32_t p) {
  if (p < 2 || p > 65521) return false;
  for (std::uint32_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

BaseRing BaseRing::polynomials(std::uint32_t p) {
  if (!is_small_prime(p)) throw InvalidArgument("F_p[t] requires a prime p < 2^16, got " + std::to_string(p));
  return BaseRing(BaseKind::polynomials, p);
}

const mpz_class& BaseRing::z(const BaseElem& a) const {
  if (const auto* v = std::get_if<mpz_class>(&a); v != nullptr && is_integers()) return *v;
  throw InvalidArgument("expected an integer element of " + name());
}

const Poly& BaseRing::pl(const BaseElem& a) const {
  if (const auto* v = std::get_if<Poly>(&a); v != nullptr && !is_integers()) return *v;
  throw InvalidArgument("expected a polynomial element of " + name());
}

BaseElem BaseRing::zero() const {
  if (is_integers()) return mpz_class(0);
  return Poly{};
}

BaseElem BaseRing::one() const { return from_int(1); }

BaseElem BaseRing::from_int(long v) const {
  if (is_integers()) return mpz_class(v);
  long r = v % static_cast<long>(p_);
  if (r < 0) r += p_;
  Poly out;
  if (r != 0) out.coeffs.push_back(static_cast<std::uint32_t>(r));
  return out;
}

BaseElem BaseRing::variable() const {
  if (is_integers()) throw InvalidArgument("Z has no polynomial variable");
  return Poly{{0, 1}};
}

BaseElem BaseRing::poly(std::vector<std::int64_t> low_to_high) const {
  if (is_integers()) throw InvalidArgument("poly() called on Z");
  Poly out;
  for (auto c : low_to_high) {
    std::int64_t r = c % static_cast<std::int64_t>(p_);
    if (r < 0) r += p_;
    out.coeffs.push_back(static_cast<std::uint32_t>(r));
  }
  trim(out.coeffs);
  return out;
}

BaseElem BaseRing::add(const BaseElem& a, const BaseElem& b) const {
  if (is_integers()) return mpz_class(z(a) + z(b));
  return poly_add(pl(a), pl(b), p_);
}

BaseElem BaseRing::sub(const BaseElem& a, const BaseElem& b) const { return add(a, neg(b)); }

BaseElem BaseRing::mul(const BaseElem& a, const BaseElem& b) const {
  if (is_integers()) return mpz_class(z(a) * z(b));
  return poly_mul(pl(a), pl(b), p_);
}

BaseElem BaseRing::neg(const BaseElem& a) const {
  if (is_integers()) return mpz_class(-z(a));
  return poly_neg(pl(a), p_);
}

BaseElem BaseRing::pow(const BaseElem& a, unsigned e) const {
  BaseElem result = one();
  BaseElem base = a;
  while (e > 0) {
    if (e & 1U) result = mul(result, base);
    base = mul(base, base);
    e >>= 1U;
  }
  return result;
}

bool BaseRing::is_zero(const BaseElem& a) const {
  if (is_integers()) return z(a) == 0;
  return pl(a).is_zero();
}

bool BaseRing::is_one(const BaseElem& a) const {
  if (is_integers()) return z(a) == 1;
  const auto& c = pl(a).coeffs;
  return c.size() == 1 && c[0] == 1;
}

bool BaseRing::is_unit(const BaseElem& a) const {
  if (is_integers()) return abs(z(a)) == 1;
  return pl(a).degree() == 0;
}

BaseElem BaseRing::unit_inverse(const BaseElem& a) const {
  if (!is_unit(a)) throw InvalidArgument(to_string(a) + " is not a unit of " + name());
  if (is_integers()) return a;
  return Poly{{inv_mod(pl(a).coeffs[0], p_)}};
}

std::pair<BaseElem, BaseElem> BaseRing::divmod(const BaseElem& a, const BaseElem& b) const {
  if (is_integers()) {
    if (z(b) == 0) throw InvalidArgument("integer division by zero");
    mpz_class q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), z(a).get_mpz_t(), z(b).get_mpz_t());
    return {BaseElem(q), BaseElem(r)};
  }
  auto [q, r] = poly_divmod(pl(a), pl(b), p_);
  return {BaseElem(std::move(q)), BaseElem(std::move(r))};
}

bool BaseRing::divides(const BaseElem& b, const BaseElem& a) const {
  if (is_zero(b)) return is_zero(a);
  return is_zero(mod(a, b));
}

BaseElem BaseRing::exact_div(const BaseElem& a, const BaseElem& b) const {
  auto [q, r] = divmod(a, b);
  if (!is_zero(r)) throw InvalidArgument(to_string(b) + " does not divide " + to_string(a));
  return q;
}

mpz_class BaseRing::norm(const BaseElem& a) const {
  if (is_integers()) return abs(z(a));
  return mpz_class(static_cast<unsigned long>(pl(a).coeffs.size()));
}

BaseElem BaseRing::normalizing_unit(const BaseElem& a) const {
  if (is_integers()) return mpz_class(z(a) < 0 ? -1 : 1);
  const auto& c = pl(a).coeffs;
  if (c.empty()) return one();
  return Poly{{inv_mod(c.back(), p_)}};
}

BaseElem BaseRing::canonical(const BaseElem& a) const {
  if (is_integers()) return mpz_class(abs(z(a)));
  const auto& c = pl(a).coeffs;
  if (c.empty()) return a;
  return poly_scale(pl(a), inv_mod(c.back(), p_), p_);
}

BaseElem BaseRing::gcd(const BaseElem& a, const BaseElem& b) const { return ext_gcd(a, b).g; }

BaseRing::Bezout BaseRing::ext_gcd(const BaseElem& a, const BaseElem& b) const {
  BaseElem r0 = a, r1 = b;
  BaseElem s0 = one(), s1 = zero();
  BaseElem t0 = zero(), t1 = one();
  while (!is_zero(r1)) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::exchange(r1, r);
    s0 = std::exchange(s1, sub(s0, mul(q, s1)));
    t0 = std::exchange(t1, sub(t0, mul(q, t1)));
  }
  const BaseElem u = normalizing_unit(r0);
  return {mul(u, r0), mul(u, s0), mul(u, t0)};
}

std::strong_ordering BaseRing::compare(const BaseElem& a, const BaseElem& b) const {
  if (is_integers()) {
    const int c = cmp(z(a), z(b));
    return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
  }
  const auto& x = pl(a).coeffs;
  const auto& y = pl(b).coeffs;
  if (x.size() != y.size()) return x.size() <=> y.size();
  for (std::size_t i = x.size(); i-- > 0;) {
    if (x[i] != y[i]) return x[i] <=> y[i];
  }
  return std::strong_ordering::equal;
}

std::uint32_t BaseRing::evaluate(const BaseElem& a, std::uint32_t x) const {
  const auto& c = pl(a).coeffs;
  std::uint64_t acc = 0;
  for (std::size_t i = c.size(); i-- > 0;) acc = (acc * x + c[i]) % p_;
  return static_cast<std::uint32_t>(acc);
}

std::string BaseRing::to_string(const BaseElem& a) const {
  if (is_integers()) return z(a).get_str();
  const auto& c = pl(a).coeffs;
  if (c.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = c.size(); i-- > 0;) {
    if (c[i] == 0) continue;
    if (!first) out << '+';
    first = false;
    if (i == 0) {
      out << c[i];
      continue;
    }
    if (c[i] != 1) out << c[i];
    out << 't';
    if (i > 1) out << '^' << i;
  }
  return out.str();
}

std::string BaseRing::name() const {
  if (is_integers()) return "Z";
  return "F" + std::to_string(p_) + "[t]";
}

}  // namespace ttg
