#pragma once

#include <gmpxx.h>

#include "ttg/complex.hpp"
#include "ttg/ring.hpp"

namespace fixtures {

inline ttg::Ring Z() { return ttg::Ring::integers(); }
inline ttg::Ring Fpt(std::uint32_t p) { return ttg::Ring::polynomials(p); }
inline ttg::Ring Zn(long n) { return ttg::Ring::quotient(Z(), Z().from_int(n)); }

/// Element of F_p[t] (or a ring built from it) from low-to-high coefficients.
inline ttg::Element poly(const ttg::Ring& r, std::vector<std::int64_t> c) {
  return r.from_base(r.component(0).base_ring().poly(std::move(c)));
}

inline ttg::BaseElem zb(long v) { return ttg::BaseElem(mpz_class(v)); }

/// Single-component 1x1 matrix.
inline ttg::Matrix m1(const ttg::Ring& r, const ttg::Element& e) { return ttg::Matrix(1, 1, e.parts.at(0)); }

/// Matrix over a single-component ring from integer entries.
inline ttg::Matrix int_matrix(const ttg::Ring& r, const std::vector<std::vector<long>>& rows) {
  const auto& c = r.component(0);
  ttg::Matrix m = ttg::Matrix::zero(c, rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = c.from_int(rows[i][j]);
  return m;
}

/// cone of multiplication by r on the unit, built through cone().
inline ttg::Complex cone_of(const ttg::Ring& r, const ttg::Element& x) {
  return ttg::cone(ttg::ChainMap::multiplication(ttg::unit(r), x)).cone();
}

}  // namespace fixtures
