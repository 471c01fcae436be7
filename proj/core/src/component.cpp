#include "ttg/component.hpp"

#include "ttg/error.hpp"

namespace ttg {

Component Component::base(const BaseRing& b) { return Component(b, ComponentKind::base, b.one()); }

Component Component::quotient(const BaseRing& b, const BaseElem& d) {
  if (b.is_zero(d) || b.is_unit(d)) {
    throw InvalidArgument("quotient generator must be a nonzero nonunit, got " + b.to_string(d));
  }
  return Component(b, ComponentKind::quotient, b.canonical(d));
}

Component Component::localization(const BaseRing& b, const BaseElem& f) {
  if (b.is_zero(f)) throw InvalidArgument("cannot invert zero");
  if (b.is_unit(f)) throw InvalidArgument("localization at a unit is the base ring itself");
  return Component(b, ComponentKind::localization, radical(b, f));
}

bool Component::contains_prime(const BaseElem& q) const {
  switch (kind_) {
    case ComponentKind::base:
      return true;
    case ComponentKind::quotient:
      return base_.divides(q, param_);
    case ComponentKind::localization:
      return !base_.divides(q, param_);
  }
  return false;
}

Scalar Component::reduce(BaseElem num, BaseElem den) const {
  switch (kind_) {
    case ComponentKind::base:
      if (!base_.is_one(den)) num = base_.exact_div(num, den);
      return {std::move(num), base_.one()};
    case ComponentKind::quotient: {
      if (!base_.is_one(den)) {
        const auto bz = base_.ext_gcd(den, param_);
        if (!base_.is_unit(bz.g)) {
          throw InvalidArgument(base_.to_string(den) + " is not invertible in " + name());
        }
        num = base_.mul(num, bz.x);
      }
      return {base_.mod(num, param_), base_.one()};
    }
    case ComponentKind::localization: {
      if (base_.is_zero(den)) throw InvalidArgument("zero denominator");
      if (base_.is_zero(num)) return zero();
      if (!base_.is_unit(coprime_part(base_, den, param_))) {
        throw InvalidArgument("denominator " + base_.to_string(den) + " is not invertible in " + name());
      }
      const BaseElem g = base_.gcd(num, den);
      num = base_.exact_div(num, g);
      den = base_.exact_div(den, g);
      const BaseElem u = base_.normalizing_unit(den);
      return {base_.mul(num, u), base_.mul(den, u)};
    }
  }
  throw InvalidArgument("unknown component kind");
}

Scalar Component::zero() const { return {base_.zero(), base_.one()}; }
Scalar Component::one() const { return reduce(base_.one(), base_.one()); }
Scalar Component::from_int(long v) const { return reduce(base_.from_int(v), base_.one()); }
Scalar Component::from_base(const BaseElem& a) const { return reduce(a, base_.one()); }
Scalar Component::fraction(const BaseElem& num, const BaseElem& den) const { return reduce(num, den); }

Scalar Component::add(const Scalar& a, const Scalar& b) const {
  if (kind_ != ComponentKind::localization) return reduce(base_.add(a.num, b.num), base_.one());
  if (a.den == b.den) return reduce(base_.add(a.num, b.num), a.den);
  return reduce(base_.add(base_.mul(a.num, b.den), base_.mul(b.num, a.den)), base_.mul(a.den, b.den));
}

Scalar Component::sub(const Scalar& a, const Scalar& b) const { return add(a, neg(b)); }

Scalar Component::mul(const Scalar& a, const Scalar& b) const {
  if (kind_ != ComponentKind::localization) return reduce(base_.mul(a.num, b.num), base_.one());
  return reduce(base_.mul(a.num, b.num), base_.mul(a.den, b.den));
}

Scalar Component::neg(const Scalar& a) const { return reduce(base_.neg(a.num), a.den); }

Scalar Component::pow(const Scalar& a, unsigned e) const {
  Scalar result = one();
  Scalar b = a;
  while (e > 0) {
    if (e & 1U) result = mul(result, b);
    b = mul(b, b);
    e >>= 1U;
  }
  return result;
}

bool Component::is_unit(const Scalar& a) const {
  switch (kind_) {
    case ComponentKind::base:
      return base_.is_unit(a.num);
    case ComponentKind::quotient:
      return base_.is_unit(base_.gcd(a.num, param_));
    case ComponentKind::localization:
      return !base_.is_zero(a.num) && base_.is_unit(coprime_part(base_, a.num, param_));
  }
  return false;
}

Scalar Component::inverse(const Scalar& a) const {
  if (!is_unit(a)) throw InvalidArgument(to_string(a) + " is not a unit of " + name());
  switch (kind_) {
    case ComponentKind::base:
      return {base_.unit_inverse(a.num), base_.one()};
    case ComponentKind::quotient:
      return reduce(base_.one(), a.num);
    case ComponentKind::localization:
      return reduce(a.den, a.num);
  }
  throw InvalidArgument("unknown component kind");
}

bool Component::is_nilpotent(const Scalar& a) const {
  if (kind_ != ComponentKind::quotient) return is_zero(a);
  return base_.divides(radical(base_, param_), a.num);
}

std::optional<unsigned> Component::nilpotency_index(const Scalar& a) const {
  if (!is_nilpotent(a)) return std::nullopt;
  Scalar power = a;
  for (unsigned n = 1;; ++n) {
    if (is_zero(power)) return n;
    power = mul(power, a);
  }
}

void Component::require_euclidean(const char* op) const {
  if (!is_euclidean()) {
    throw UnsupportedRing(std::string(op) + " needs a Euclidean component; " + name() +
                          " must be lifted to its base first");
  }
}

mpz_class Component::norm(const Scalar& a) const {
  require_euclidean("norm");
  if (kind_ == ComponentKind::base) return base_.norm(a.num);
  return base_.norm(coprime_part(base_, a.num, param_));
}

std::pair<Scalar, Scalar> Component::divmod(const Scalar& a, const Scalar& b) const {
  require_euclidean("divmod");
  if (is_zero(b)) throw InvalidArgument("division by zero in " + name());
  if (kind_ == ComponentKind::base) {
    auto [q, r] = base_.divmod(a.num, b.num);
    return {Scalar{q, base_.one()}, Scalar{r, base_.one()}};
  }
  // b = unit * b0 with b0 free of inverted primes; divide numerators by b0.
  const BaseElem b0 = coprime_part(base_, b.num, param_);
  const BaseElem ub = base_.exact_div(b.num, b0);
  auto [q0, r0] = base_.divmod(a.num, b0);
  Scalar q = reduce(base_.mul(q0, b.den), base_.mul(a.den, ub));
  Scalar r = reduce(r0, a.den);
  return {q, r};
}

std::optional<Scalar> Component::divide(const Scalar& a, const Scalar& b) const {
  require_euclidean("divide");
  if (is_zero(b)) {
    if (is_zero(a)) return zero();
    return std::nullopt;
  }
  auto [q, r] = divmod(a, b);
  if (!is_zero(r)) return std::nullopt;
  return q;
}

Scalar Component::normalizing_unit(const Scalar& a) const {
  require_euclidean("normalizing_unit");
  if (is_zero(a)) return one();
  if (kind_ == ComponentKind::base) return {base_.normalizing_unit(a.num), base_.one()};
  return divide(canonical(a), a).value();
}

Scalar Component::canonical(const Scalar& a) const {
  require_euclidean("canonical");
  if (kind_ == ComponentKind::base) return {base_.canonical(a.num), base_.one()};
  if (is_zero(a)) return a;
  return {base_.canonical(coprime_part(base_, a.num, param_)), base_.one()};
}

BaseElem Component::lift(const Scalar& a) const {
  if (!base_.is_one(a.den)) {
    throw UnsupportedRing(to_string(a) + " has a denominator and has no lift to " + base_.name());
  }
  return a.num;
}

std::string Component::to_string(const Scalar& a) const {
  std::string s = base_.to_string(a.num);
  if (!base_.is_one(a.den)) s = "(" + s + ")/(" + base_.to_string(a.den) + ")";
  return s;
}

std::string Component::name() const {
  switch (kind_) {
    case ComponentKind::base:
      return base_.name();
    case ComponentKind::quotient:
      return base_.name() + "/(" + base_.to_string(param_) + ")";
    case ComponentKind::localization:
      return base_.name() + "[1/" + base_.to_string(param_) + "]";
  }
  return "?";
}

}  // namespace ttg
