#include "ttg/linalg.hpp"

#include <algorithm>

#include "ttg/error.hpp"
#include "ttg/factor.hpp"

namespace ttg {

namespace {

struct Pivot {
  std::size_t row;
  std::size_t col;
};

/// Elementary operations applied to D while recording U, U^-1 and V.
class SmithWork {
 public:
  SmithWork(const Component& ring, const Matrix& m)
      : ring_(ring),
        d_(m),
        u_(Matrix::identity(ring, m.rows())),
        u_inv_(Matrix::identity(ring, m.rows())),
        v_(Matrix::identity(ring, m.cols())) {}

  // row_i += c * row_t
  void add_row(std::size_t i, std::size_t t, const Scalar& c) {
    for (std::size_t j = 0; j < d_.cols(); ++j) d_(i, j) = ring_.add(d_(i, j), ring_.mul(c, d_(t, j)));
    for (std::size_t j = 0; j < u_.cols(); ++j) u_(i, j) = ring_.add(u_(i, j), ring_.mul(c, u_(t, j)));
    for (std::size_t k = 0; k < u_inv_.rows(); ++k)
      u_inv_(k, t) = ring_.sub(u_inv_(k, t), ring_.mul(c, u_inv_(k, i)));
  }

  // col_j += c * col_t
  void add_col(std::size_t j, std::size_t t, const Scalar& c) {
    for (std::size_t i = 0; i < d_.rows(); ++i) d_(i, j) = ring_.add(d_(i, j), ring_.mul(c, d_(i, t)));
    for (std::size_t i = 0; i < v_.rows(); ++i) v_(i, j) = ring_.add(v_(i, j), ring_.mul(c, v_(i, t)));
  }

  void swap_rows(std::size_t a, std::size_t b) {
    d_.swap_rows(a, b);
    u_.swap_rows(a, b);
    u_inv_.swap_cols(a, b);
  }

  void swap_cols(std::size_t a, std::size_t b) {
    d_.swap_cols(a, b);
    v_.swap_cols(a, b);
  }

  void scale_row(std::size_t t, const Scalar& unit) {
    const Scalar inv = ring_.inverse(unit);
    for (std::size_t j = 0; j < d_.cols(); ++j) d_(t, j) = ring_.mul(unit, d_(t, j));
    for (std::size_t j = 0; j < u_.cols(); ++j) u_(t, j) = ring_.mul(unit, u_(t, j));
    for (std::size_t k = 0; k < u_inv_.rows(); ++k) u_inv_(k, t) = ring_.mul(u_inv_(k, t), inv);
  }

  std::optional<Pivot> smallest_in_block(std::size_t t) const {
    std::optional<Pivot> best;
    mpz_class best_norm;
    for (std::size_t i = t; i < d_.rows(); ++i)
      for (std::size_t j = t; j < d_.cols(); ++j) {
        if (ring_.is_zero(d_(i, j))) continue;
        mpz_class n = ring_.norm(d_(i, j));
        if (!best || n < best_norm) {
          best = Pivot{i, j};
          best_norm = n;
        }
      }
    return best;
  }

  /// Smallest nonzero entry in column t below the pivot or row t right of it.
  std::optional<Pivot> smallest_in_cross(std::size_t t) const {
    std::optional<Pivot> best;
    mpz_class best_norm;
    auto consider = [&](std::size_t i, std::size_t j) {
      if (ring_.is_zero(d_(i, j))) return;
      mpz_class n = ring_.norm(d_(i, j));
      if (!best || n < best_norm) {
        best = Pivot{i, j};
        best_norm = n;
      }
    };
    for (std::size_t j = t + 1; j < d_.cols(); ++j) consider(t, j);
    for (std::size_t i = t + 1; i < d_.rows(); ++i) consider(i, t);
    return best;
  }

  void reduce_cross(std::size_t t) {
    const Scalar pivot = d_(t, t);
    for (std::size_t i = t + 1; i < d_.rows(); ++i) {
      if (ring_.is_zero(d_(i, t))) continue;
      add_row(i, t, ring_.neg(ring_.divmod(d_(i, t), pivot).first));
    }
    for (std::size_t j = t + 1; j < d_.cols(); ++j) {
      if (ring_.is_zero(d_(t, j))) continue;
      add_col(j, t, ring_.neg(ring_.divmod(d_(t, j), pivot).first));
    }
  }

  std::optional<std::size_t> non_divisible_row(std::size_t t) const {
    for (std::size_t i = t + 1; i < d_.rows(); ++i)
      for (std::size_t j = t + 1; j < d_.cols(); ++j)
        if (!ring_.divide(d_(i, j), d_(t, t))) return i;
    return std::nullopt;
  }

  SmithForm run() {
    const std::size_t steps = std::min(d_.rows(), d_.cols());
    std::size_t t = 0;
    for (; t < steps; ++t) {
      auto pivot = smallest_in_block(t);
      if (!pivot) break;
      swap_rows(t, pivot->row);
      swap_cols(t, pivot->col);
      for (;;) {
        reduce_cross(t);
        if (auto smaller = smallest_in_cross(t)) {
          if (smaller->row != t) swap_rows(t, smaller->row);
          if (smaller->col != t) swap_cols(t, smaller->col);
          continue;
        }
        if (auto row = non_divisible_row(t)) {
          add_row(t, *row, ring_.one());
          continue;
        }
        break;
      }
      scale_row(t, ring_.normalizing_unit(d_(t, t)));
    }
    return SmithForm{std::move(u_), std::move(u_inv_), std::move(d_), std::move(v_), t};
  }

 private:
  const Component& ring_;
  Matrix d_;
  Matrix u_;
  Matrix u_inv_;
  Matrix v_;
};

Matrix lift_matrix(const Component& ring, const Matrix& m) {
  const Component base = Component::base(ring.base_ring());
  return transform(m, [&](const Scalar& x) { return base.from_base(ring.lift(x)); });
}

Matrix reduce_matrix(const Component& ring, const Matrix& m) {
  return transform(m, [&](const Scalar& x) { return ring.from_base(x.num); });
}

/// [m | d*I] over the base: the lifted generators plus the relations of B/(d).
Matrix lift_with_modulus(const Component& ring, const Matrix& m, std::size_t rows) {
  const Component base = Component::base(ring.base_ring());
  Matrix lifted = m.cols() == 0 ? Matrix(rows, 0, base.zero()) : lift_matrix(ring, m);
  return hstack(lifted, Matrix::scalar(base, rows, base.from_base(ring.parameter())));
}

std::vector<BaseElem> nonunit_diagonal(const Component& ring, const SmithForm& s) {
  std::vector<BaseElem> out;
  for (std::size_t i = 0; i < s.rank; ++i) {
    const Scalar& e = s.D(i, i);
    if (!ring.is_unit(e)) out.push_back(e.num);
  }
  return out;
}

ComponentModule subquotient_euclidean(const Component& ring, const Matrix& sub, const Matrix& quot) {
  const std::size_t n = sub.rows();
  if (quot.rows() != n) throw InvalidArgument("subquotient ambient mismatch");
  const SmithForm s = smith_normal_form(ring, sub);
  if (s.rank == 0) return {};
  // The columns U^-1 * D restricted to the first rank columns are a basis of span(sub).
  Matrix coords = Matrix::zero(ring, s.rank, quot.cols());
  if (quot.cols() > 0) {
    const Matrix w = multiply(ring, s.U, quot);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < quot.cols(); ++j) {
        if (i >= s.rank) {
          if (!ring.is_zero(w(i, j))) throw InvalidArgument("subquotient: quotient not contained in submodule");
          continue;
        }
        auto q = ring.divide(w(i, j), s.D(i, i));
        if (!q) throw InvalidArgument("subquotient: quotient not contained in submodule");
        coords(i, j) = *q;
      }
    }
  }
  const SmithForm rel = smith_normal_form(ring, coords);
  return ComponentModule{s.rank - rel.rank, nonunit_diagonal(ring, rel)};
}

}  // namespace

std::vector<Scalar> SmithForm::diagonal() const {
  std::vector<Scalar> out;
  for (std::size_t i = 0; i < std::min(D.rows(), D.cols()); ++i) out.push_back(D(i, i));
  return out;
}

SmithForm smith_normal_form(const Component& ring, const Matrix& m) {
  if (!ring.is_euclidean()) {
    throw UnsupportedRing("smith_normal_form: " + ring.name() + " is a quotient; lift to the base first");
  }
  return SmithWork(ring, m).run();
}

std::string to_string(const Component& ring, const ComponentModule& m) {
  std::string s;
  if (m.free_rank > 0) s += ring.name() + (m.free_rank > 1 ? "^" + std::to_string(m.free_rank) : "");
  for (const auto& e : m.divisors) {
    if (!s.empty()) s += " + ";
    s += ring.base_ring().name() + "/(" + ring.base_ring().to_string(e) + ")";
  }
  return s.empty() ? "0" : s;
}

std::optional<Matrix> solve(const Component& ring, const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw InvalidArgument("solve: row mismatch");
  if (ring.kind() == ComponentKind::quotient) {
    const Component base = Component::base(ring.base_ring());
    const Matrix lifted = lift_with_modulus(ring, a, a.rows());
    auto x = solve(base, lifted, b.cols() == 0 ? Matrix(b.rows(), 0, base.zero()) : lift_matrix(ring, b));
    if (!x) return std::nullopt;
    if (a.cols() == 0) return Matrix(0, b.cols(), ring.zero());
    return reduce_matrix(ring, submatrix(*x, 0, a.cols(), 0, b.cols()));
  }
  const SmithForm s = smith_normal_form(ring, a);
  Matrix y = Matrix::zero(ring, a.cols(), b.cols());
  if (b.cols() > 0 && b.rows() > 0) {
    const Matrix w = multiply(ring, s.U, b);
    for (std::size_t i = 0; i < w.rows(); ++i) {
      for (std::size_t j = 0; j < w.cols(); ++j) {
        if (i >= s.rank) {
          if (!ring.is_zero(w(i, j))) return std::nullopt;
          continue;
        }
        auto q = ring.divide(w(i, j), s.D(i, i));
        if (!q) return std::nullopt;
        y(i, j) = *q;
      }
    }
  }
  if (a.cols() == 0) return y;
  return multiply(ring, s.V, y);
}

Matrix kernel_generators(const Component& ring, const Matrix& a) {
  const std::size_t n = a.cols();
  if (ring.kind() == ComponentKind::quotient) {
    const Component base = Component::base(ring.base_ring());
    const Matrix lifted = lift_with_modulus(ring, a, a.rows());
    const Matrix k = kernel_generators(base, lifted);
    if (n == 0) return Matrix(0, 0, ring.zero());
    return reduce_matrix(ring, submatrix(k, 0, n, 0, k.cols()));
  }
  if (a.rows() == 0) return Matrix::identity(ring, n);
  const SmithForm s = smith_normal_form(ring, a);
  return submatrix(s.V, 0, n, s.rank, n - s.rank);
}

ComponentModule subquotient(const Component& ring, const Matrix& sub, const Matrix& quot) {
  if (ring.is_euclidean()) return subquotient_euclidean(ring, sub, quot);
  const Component base = Component::base(ring.base_ring());
  const std::size_t n = sub.rows();
  const ComponentModule over_base =
      subquotient_euclidean(base, lift_with_modulus(ring, sub, n), lift_with_modulus(ring, quot, n));
  if (over_base.free_rank != 0) throw InvalidArgument("subquotient over a quotient ring has a free base part");
  ComponentModule out;
  for (const auto& e : over_base.divisors) {
    if (e == ring.parameter()) {
      ++out.free_rank;
    } else {
      out.divisors.push_back(e);
    }
  }
  return out;
}

ComponentModule cokernel(const Component& ring, const Matrix& a) {
  return subquotient(ring, Matrix::identity(ring, a.rows()), a);
}

bool spans_contain(const Component& ring, const Matrix& a, const Matrix& b) {
  if (b.cols() == 0) return true;
  if (a.cols() == 0) return is_zero(ring, b);
  return solve(ring, a, b).has_value();
}

ComponentModule localize_module(const Component& from, const Component& to, const ComponentModule& m) {
  if (from == to) return m;
  const BaseRing& b = from.base_ring();
  if (!(b == to.base_ring())) throw InvalidArgument("localize_module: base mismatch");
  ComponentModule out;
  if (from.kind() != ComponentKind::quotient) {
    if (to.kind() != ComponentKind::localization) throw InvalidArgument("localize_module: target is not a localization");
    out.free_rank = m.free_rank;
    for (const auto& e : m.divisors) {
      BaseElem kept = b.canonical(coprime_part(b, e, to.parameter()));
      if (!b.is_unit(kept)) out.divisors.push_back(std::move(kept));
    }
    return out;
  }
  if (to.kind() != ComponentKind::quotient || !b.divides(to.parameter(), from.parameter())) {
    throw InvalidArgument("localize_module: " + to.name() + " is not a localization of " + from.name());
  }
  std::vector<BaseElem> all(m.free_rank, from.parameter());
  all.insert(all.end(), m.divisors.begin(), m.divisors.end());
  for (const auto& e : all) {
    // keep only the primes of the surviving modulus
    BaseElem kept = b.canonical(b.exact_div(e, coprime_part(b, e, to.parameter())));
    if (b.is_unit(kept)) continue;
    if (kept == to.parameter()) {
      ++out.free_rank;
    } else {
      out.divisors.push_back(std::move(kept));
    }
  }
  return out;
}

}  // namespace ttg
