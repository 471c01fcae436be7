#include "ttg/complex.hpp"

#include <algorithm>

#include "ttg/error.hpp"

namespace ttg {

namespace {

Scalar sign(const Component& ring, int k) { return (k % 2 == 0) ? ring.one() : ring.from_int(-1); }

void require_same_ring(const Ring& a, const Ring& b, const char* op) {
  if (!(a == b)) throw InvalidArgument(std::string(op) + ": ring mismatch (" + a.name() + " vs " + b.name() + ")");
}

}  // namespace

Matrix component_matrix(const Ring& ring, const RingMatrix& m, std::size_t c) {
  if (m.entries.size() != m.rows * m.cols) throw InvalidArgument("ring matrix has wrong entry count");
  const Component& comp = ring.component(c);
  Matrix out = Matrix::zero(comp, m.rows, m.cols);
  for (std::size_t i = 0; i < m.rows; ++i)
    for (std::size_t j = 0; j < m.cols; ++j) {
      ring.check(m.at(i, j));
      out(i, j) = m.at(i, j).parts[c];
    }
  return out;
}

// ---------------------------------------------------------------------------
// ComponentComplex

ComponentComplex::ComponentComplex(Component ring) : ring_(std::move(ring)) {}

ComponentComplex::ComponentComplex(Component ring, int lo, std::vector<std::size_t> ranks,
                                   std::vector<Matrix> differentials)
    : ring_(std::move(ring)), lo_(lo), ranks_(std::move(ranks)), diffs_(std::move(differentials)) {
  trim_and_check();
}

void ComponentComplex::trim_and_check() {
  const std::size_t expected = ranks_.empty() ? 0 : ranks_.size() - 1;
  if (diffs_.size() != expected) {
    throw InvalidArgument("complex with " + std::to_string(ranks_.size()) + " degrees needs " +
                          std::to_string(expected) + " differentials, got " + std::to_string(diffs_.size()));
  }
  for (std::size_t k = 0; k < diffs_.size(); ++k) {
    if (diffs_[k].rows() != ranks_[k] || diffs_[k].cols() != ranks_[k + 1]) {
      throw InvalidArgument("differential d_" + std::to_string(lo_ + static_cast<int>(k) + 1) + " has shape " +
                            std::to_string(diffs_[k].rows()) + "x" + std::to_string(diffs_[k].cols()) +
                            ", expected " + std::to_string(ranks_[k]) + "x" + std::to_string(ranks_[k + 1]));
    }
  }
  for (std::size_t k = 0; k + 1 < diffs_.size(); ++k) {
    if (diffs_[k].rows() == 0 || diffs_[k + 1].cols() == 0) continue;
    if (!ttg::is_zero(ring_, multiply(ring_, diffs_[k], diffs_[k + 1]))) {
      throw InvalidArgument("d o d != 0 at degree " + std::to_string(lo_ + static_cast<int>(k) + 2));
    }
  }
  while (!ranks_.empty() && ranks_.back() == 0) {
    ranks_.pop_back();
    if (!diffs_.empty()) diffs_.pop_back();
  }
  std::size_t lead = 0;
  while (lead < ranks_.size() && ranks_[lead] == 0) ++lead;
  if (lead > 0) {
    ranks_.erase(ranks_.begin(), ranks_.begin() + static_cast<std::ptrdiff_t>(lead));
    diffs_.erase(diffs_.begin(), diffs_.begin() + static_cast<std::ptrdiff_t>(std::min(lead, diffs_.size())));
    lo_ += static_cast<int>(lead);
  }
  if (ranks_.empty()) {
    lo_ = 0;
    diffs_.clear();
  }
}

std::size_t ComponentComplex::rank(int n) const {
  if (ranks_.empty() || n < lo_ || n > hi()) return 0;
  return ranks_[static_cast<std::size_t>(n - lo_)];
}

std::size_t ComponentComplex::total_rank() const {
  std::size_t total = 0;
  for (auto r : ranks_) total += r;
  return total;
}

Matrix ComponentComplex::differential(int n) const {
  if (!ranks_.empty() && n > lo_ && n <= hi()) return diffs_[static_cast<std::size_t>(n - lo_ - 1)];
  return Matrix::zero(ring_, rank(n - 1), rank(n));
}

// ---------------------------------------------------------------------------
// Complex

Complex::Complex(Ring ring) : ring_(std::move(ring)) {
  for (const auto& c : ring_.components()) blocks_.emplace_back(c);
}

Complex::Complex(Ring ring, std::vector<ComponentComplex> blocks) : ring_(std::move(ring)), blocks_(std::move(blocks)) {
  if (blocks_.size() != ring_.size()) throw InvalidArgument("complex needs one block per ring component");
  for (std::size_t c = 0; c < blocks_.size(); ++c) {
    if (!(blocks_[c].ring() == ring_.component(c))) throw InvalidArgument("complex block over the wrong component");
  }
}

Complex Complex::from_ring_matrices(const Ring& ring, int lo, const std::vector<std::size_t>& ranks,
                                    const std::vector<RingMatrix>& differentials) {
  std::vector<ComponentComplex> blocks;
  for (std::size_t c = 0; c < ring.size(); ++c) {
    std::vector<Matrix> diffs;
    for (const auto& m : differentials) diffs.push_back(component_matrix(ring, m, c));
    blocks.emplace_back(ring.component(c), lo, ranks, std::move(diffs));
  }
  return Complex(ring, std::move(blocks));
}

bool Complex::is_zero() const {
  return std::all_of(blocks_.begin(), blocks_.end(), [](const auto& b) { return b.is_zero(); });
}

int Complex::lo() const {
  std::optional<int> lo;
  for (const auto& b : blocks_)
    if (!b.is_zero()) lo = lo ? std::min(*lo, b.lo()) : b.lo();
  return lo.value_or(0);
}

int Complex::hi() const {
  std::optional<int> hi;
  for (const auto& b : blocks_)
    if (!b.is_zero()) hi = hi ? std::max(*hi, b.hi()) : b.hi();
  return hi.value_or(-1);
}

std::size_t Complex::total_rank() const {
  std::size_t total = 0;
  for (const auto& b : blocks_) total += b.total_rank();
  return total;
}

bool Complex::has_uniform_ranks() const {
  for (std::size_t c = 1; c < blocks_.size(); ++c) {
    for (int n = lo(); n <= hi(); ++n)
      if (blocks_[c].rank(n) != blocks_[0].rank(n)) return false;
  }
  return true;
}

std::size_t Complex::rank(int n) const {
  if (!has_uniform_ranks()) throw InvalidArgument("complex has different ranks on different components");
  return blocks_.empty() ? 0 : blocks_[0].rank(n);
}

RingMatrix Complex::differential(int n) const {
  RingMatrix m{rank(n - 1), rank(n), {}};
  std::vector<Matrix> parts;
  for (const auto& b : blocks_) parts.push_back(b.differential(n));
  for (std::size_t i = 0; i < m.rows; ++i)
    for (std::size_t j = 0; j < m.cols; ++j) {
      Element e;
      for (const auto& part : parts) e.parts.push_back(part(i, j));
      m.entries.push_back(std::move(e));
    }
  return m;
}

bool ModuleClass::is_zero() const {
  return std::all_of(components.begin(), components.end(), [](const auto& m) { return m.is_zero(); });
}

std::string to_string(const Ring& ring, const ModuleClass& m) {
  if (ring.size() == 1) return to_string(ring.component(0), m.components.at(0));
  std::string s = "(";
  for (std::size_t c = 0; c < m.components.size(); ++c) {
    if (c > 0) s += ", ";
    s += to_string(ring.component(c), m.components[c]);
  }
  return s + ")";
}

// ---------------------------------------------------------------------------
// ChainMap

ChainMap::ChainMap(Complex source, Complex target, std::vector<DegreeMatrices> components)
    : source_(std::move(source)), target_(std::move(target)), components_(std::move(components)) {
  require_same_ring(source_.ring(), target_.ring(), "chain map");
  if (components_.size() != source_.ring().size()) throw InvalidArgument("chain map needs one entry per component");
  for (std::size_t c = 0; c < components_.size(); ++c) {
    const auto& p = source_.block(c);
    const auto& q = target_.block(c);
    const Component& ring = p.ring();
    for (auto it = components_[c].begin(); it != components_[c].end();) {
      const int n = it->first;
      if (it->second.rows() != q.rank(n) || it->second.cols() != p.rank(n)) {
        throw InvalidArgument("chain map component in degree " + std::to_string(n) + " has the wrong shape");
      }
      if (it->second.empty() || ttg::is_zero(ring, it->second)) {
        it = components_[c].erase(it);
      } else {
        ++it;
      }
    }
    const int lo = std::min(p.lo(), q.lo());
    const int hi = std::max(p.hi(), q.hi()) + 1;
    for (int n = lo; n <= hi; ++n) {
      const Matrix lhs = multiply(ring, q.differential(n), at(c, n));
      const Matrix rhs = multiply(ring, at(c, n - 1), p.differential(n));
      if (!(lhs.empty() || ttg::is_zero(ring, subtract(ring, lhs, rhs)))) {
        throw InvalidArgument("chain map does not commute with the differentials in degree " + std::to_string(n));
      }
    }
  }
}

ChainMap ChainMap::identity(const Complex& p) { return multiplication(p, p.ring().one()); }

ChainMap ChainMap::zero(const Complex& source, const Complex& target) {
  return ChainMap(source, target, std::vector<DegreeMatrices>(source.ring().size()));
}

ChainMap ChainMap::multiplication(const Complex& p, const Element& r) {
  p.ring().check(r);
  std::vector<DegreeMatrices> comps(p.ring().size());
  for (std::size_t c = 0; c < comps.size(); ++c) {
    const auto& b = p.block(c);
    for (int n = b.lo(); n <= b.hi(); ++n) comps[c][n] = Matrix::scalar(b.ring(), b.rank(n), r.parts[c]);
  }
  return ChainMap(p, p, std::move(comps));
}

Matrix ChainMap::at(std::size_t c, int n) const {
  if (auto it = components_.at(c).find(n); it != components_[c].end()) return it->second;
  return Matrix::zero(source_.block(c).ring(), target_.block(c).rank(n), source_.block(c).rank(n));
}

ChainMap compose(const ChainMap& g, const ChainMap& f) {
  if (!(f.target() == g.source())) throw InvalidArgument("compose: target of f is not the source of g");
  std::vector<DegreeMatrices> comps(f.source().ring().size());
  for (std::size_t c = 0; c < comps.size(); ++c) {
    const Component& ring = f.source().block(c).ring();
    for (const auto& [n, fm] : f.components()[c]) comps[c][n] = multiply(ring, g.at(c, n), fm);
  }
  return ChainMap(f.source(), g.target(), std::move(comps));
}

ChainMap add(const ChainMap& f, const ChainMap& g) {
  if (!(f.source() == g.source()) || !(f.target() == g.target())) throw InvalidArgument("add: maps not parallel");
  std::vector<DegreeMatrices> comps(f.source().ring().size());
  for (std::size_t c = 0; c < comps.size(); ++c) {
    const Component& ring = f.source().block(c).ring();
    for (const auto& [n, m] : f.components()[c]) comps[c][n] = m;
    for (const auto& [n, m] : g.components()[c]) comps[c][n] = add(ring, f.at(c, n), m);
  }
  return ChainMap(f.source(), f.target(), std::move(comps));
}

ChainMap scale(const Element& r, const ChainMap& f) {
  f.source().ring().check(r);
  std::vector<DegreeMatrices> comps(f.source().ring().size());
  for (std::size_t c = 0; c < comps.size(); ++c) {
    const Component& ring = f.source().block(c).ring();
    for (const auto& [n, m] : f.components()[c]) comps[c][n] = scale(ring, r.parts[c], m);
  }
  return ChainMap(f.source(), f.target(), std::move(comps));
}

ChainMap subtract(const ChainMap& f, const ChainMap& g) { return add(f, scale(f.source().ring().from_int(-1), g)); }

ChainMap power(const ChainMap& f, unsigned e) {
  ChainMap out = ChainMap::identity(f.source());
  for (unsigned i = 0; i < e; ++i) out = compose(f, out);
  return out;
}

bool maps_equal(const ChainMap& f, const ChainMap& g) {
  if (!(f.source() == g.source()) || !(f.target() == g.target())) return false;
  const ChainMap diff = subtract(f, g);
  return std::all_of(diff.components().begin(), diff.components().end(), [](const auto& m) { return m.empty(); });
}

// ---------------------------------------------------------------------------
// Constructors

Complex zero_complex(const Ring& ring) { return Complex(ring); }

Complex unit(const Ring& ring) {
  std::vector<ComponentComplex> blocks;
  for (const auto& c : ring.components()) blocks.emplace_back(c, 0, std::vector<std::size_t>{1}, std::vector<Matrix>{});
  return Complex(ring, std::move(blocks));
}

Complex component_unit(const Ring& ring, std::size_t c) {
  std::vector<ComponentComplex> blocks;
  for (std::size_t i = 0; i < ring.size(); ++i) {
    if (i == c) {
      blocks.emplace_back(ring.component(i), 0, std::vector<std::size_t>{1}, std::vector<Matrix>{});
    } else {
      blocks.emplace_back(ring.component(i));
    }
  }
  return Complex(ring, std::move(blocks));
}

Complex koszul(const Ring& ring, const Element& r) {
  ring.check(r);
  std::vector<ComponentComplex> blocks;
  for (std::size_t c = 0; c < ring.size(); ++c) {
    const Component& comp = ring.component(c);
    blocks.emplace_back(comp, 0, std::vector<std::size_t>{1, 1}, std::vector<Matrix>{Matrix(1, 1, r.parts[c])});
  }
  return Complex(ring, std::move(blocks));
}

Complex koszul_at(const Ring& ring, const PointDescriptor& x) {
  if (x.is_generic()) throw InvalidArgument("koszul_at needs a closed point");
  std::vector<ComponentComplex> blocks;
  for (std::size_t c = 0; c < ring.size(); ++c) {
    const Component& comp = ring.component(c);
    if (c == x.component) {
      blocks.emplace_back(comp, 0, std::vector<std::size_t>{1, 1},
                          std::vector<Matrix>{Matrix(1, 1, comp.from_base(*x.prime))});
    } else {
      blocks.emplace_back(comp);
    }
  }
  return Complex(ring, std::move(blocks));
}

namespace {

ComponentComplex shift_block(const ComponentComplex& p, int k) {
  if (p.is_zero()) return p;
  std::vector<std::size_t> ranks;
  std::vector<Matrix> diffs;
  const Scalar s = sign(p.ring(), k);
  for (int n = p.lo(); n <= p.hi(); ++n) {
    ranks.push_back(p.rank(n));
    if (n > p.lo()) diffs.push_back(scale(p.ring(), s, p.differential(n)));
  }
  return ComponentComplex(p.ring(), p.lo() + k, std::move(ranks), std::move(diffs));
}

ComponentComplex sum_block(const ComponentComplex& p, const ComponentComplex& q) {
  if (p.is_zero()) return q;
  if (q.is_zero()) return p;
  const int lo = std::min(p.lo(), q.lo());
  const int hi = std::max(p.hi(), q.hi());
  std::vector<std::size_t> ranks;
  std::vector<Matrix> diffs;
  for (int n = lo; n <= hi; ++n) {
    ranks.push_back(p.rank(n) + q.rank(n));
    if (n > lo) diffs.push_back(block_diagonal(p.ring(), p.differential(n), q.differential(n)));
  }
  return ComponentComplex(p.ring(), lo, std::move(ranks), std::move(diffs));
}

ComponentComplex tensor_block(const ComponentComplex& p, const ComponentComplex& q) {
  const Component& ring = p.ring();
  if (p.is_zero() || q.is_zero()) return ComponentComplex(ring);
  const int lo = p.lo() + q.lo();
  const int hi = p.hi() + q.hi();
  // offset[n][i] = position of the P_i (x) Q_{n-i} summand inside degree n
  std::map<int, std::map<int, std::size_t>> offset;
  std::vector<std::size_t> ranks;
  for (int n = lo; n <= hi; ++n) {
    std::size_t total = 0;
    for (int i = p.lo(); i <= p.hi(); ++i) {
      offset[n][i] = total;
      total += p.rank(i) * q.rank(n - i);
    }
    ranks.push_back(total);
  }
  std::vector<Matrix> diffs;
  for (int n = lo + 1; n <= hi; ++n) {
    Matrix d = Matrix::zero(ring, ranks[static_cast<std::size_t>(n - 1 - lo)], ranks[static_cast<std::size_t>(n - lo)]);
    for (int i = p.lo(); i <= p.hi(); ++i) {
      const int j = n - i;
      const std::size_t pi = p.rank(i), qj = q.rank(j);
      if (pi == 0 || qj == 0) continue;
      const std::size_t col0 = offset[n][i];
      // dx (x) y lands in P_{i-1} (x) Q_j
      if (p.rank(i - 1) > 0) {
        const Matrix part = kronecker(ring, p.differential(i), Matrix::identity(ring, qj));
        const std::size_t row0 = offset[n - 1][i - 1];
        for (std::size_t r = 0; r < part.rows(); ++r)
          for (std::size_t c = 0; c < part.cols(); ++c) d(row0 + r, col0 + c) = ring.add(d(row0 + r, col0 + c), part(r, c));
      }
      // (-1)^i x (x) dy lands in P_i (x) Q_{j-1}
      if (q.rank(j - 1) > 0) {
        const Matrix part = scale(ring, sign(ring, i), kronecker(ring, Matrix::identity(ring, pi), q.differential(j)));
        const std::size_t row0 = offset[n - 1][i];
        for (std::size_t r = 0; r < part.rows(); ++r)
          for (std::size_t c = 0; c < part.cols(); ++c) d(row0 + r, col0 + c) = ring.add(d(row0 + r, col0 + c), part(r, c));
      }
    }
    diffs.push_back(std::move(d));
  }
  return ComponentComplex(ring, lo, std::move(ranks), std::move(diffs));
}

}  // namespace

Complex shift(const Complex& p, int k) {
  std::vector<ComponentComplex> blocks;
  for (const auto& b : p.blocks()) blocks.push_back(shift_block(b, k));
  return Complex(p.ring(), std::move(blocks));
}

ChainMap shift(const ChainMap& f, int k) {
  std::vector<DegreeMatrices> comps(f.components().size());
  for (std::size_t c = 0; c < comps.size(); ++c)
    for (const auto& [n, m] : f.components()[c]) comps[c][n + k] = m;
  return ChainMap(shift(f.source(), k), shift(f.target(), k), std::move(comps));
}

Complex direct_sum(const Complex& p, const Complex& q) {
  require_same_ring(p.ring(), q.ring(), "direct_sum");
  std::vector<ComponentComplex> blocks;
  for (std::size_t c = 0; c < p.blocks().size(); ++c) blocks.push_back(sum_block(p.block(c), q.block(c)));
  return Complex(p.ring(), std::move(blocks));
}

Complex direct_sum(const std::vector<Complex>& objects, const Ring& ring) {
  Complex out = zero_complex(ring);
  for (const auto& o : objects) out = direct_sum(out, o);
  return out;
}

Triangle cone(const ChainMap& f) {
  const Complex& p = f.source();
  const Complex& q = f.target();
  std::vector<ComponentComplex> blocks;
  std::vector<DegreeMatrices> incl(p.ring().size()), proj(p.ring().size());
  for (std::size_t c = 0; c < p.blocks().size(); ++c) {
    const auto& pb = p.block(c);
    const auto& qb = q.block(c);
    const Component& ring = pb.ring();
    if (pb.is_zero() && qb.is_zero()) {
      blocks.emplace_back(ring);
      continue;
    }
    const int lo = pb.is_zero() ? qb.lo() : qb.is_zero() ? pb.lo() + 1 : std::min(qb.lo(), pb.lo() + 1);
    const int hi = pb.is_zero() ? qb.hi() : qb.is_zero() ? pb.hi() + 1 : std::max(qb.hi(), pb.hi() + 1);
    std::vector<std::size_t> ranks;
    std::vector<Matrix> diffs;
    for (int n = lo; n <= hi; ++n) {
      ranks.push_back(qb.rank(n) + pb.rank(n - 1));
      if (n > lo) {
        const Matrix top = hstack(qb.differential(n), f.at(c, n - 1));
        const Matrix bottom = hstack(Matrix::zero(ring, pb.rank(n - 2), qb.rank(n)), negate(ring, pb.differential(n - 1)));
        diffs.push_back(vstack(top, bottom));
      }
    }
    blocks.emplace_back(ring, lo, std::move(ranks), std::move(diffs));
    for (int n = lo - 1; n <= hi + 1; ++n) {
      const std::size_t qn = qb.rank(n), pn1 = pb.rank(n - 1);
      if (qn > 0) incl[c][n] = vstack(Matrix::identity(ring, qn), Matrix::zero(ring, pn1, qn));
      if (pn1 > 0) proj[c][n] = hstack(Matrix::zero(ring, pn1, qn), Matrix::identity(ring, pn1));
    }
  }
  Complex c(p.ring(), std::move(blocks));
  ChainMap second(q, c, std::move(incl));
  ChainMap third(c, shift(p), std::move(proj));
  return Triangle{f, std::move(second), std::move(third)};
}

Complex tensor(const Complex& p, const Complex& q) {
  require_same_ring(p.ring(), q.ring(), "tensor");
  std::vector<ComponentComplex> blocks;
  for (std::size_t c = 0; c < p.blocks().size(); ++c) blocks.push_back(tensor_block(p.block(c), q.block(c)));
  return Complex(p.ring(), std::move(blocks));
}

// ---------------------------------------------------------------------------
// Homology and Hom

ComponentModule homology(const ComponentComplex& p, int n) {
  if (p.rank(n) == 0) return {};
  const Component& ring = p.ring();
  const Matrix cycles = kernel_generators(ring, p.differential(n));
  const Matrix boundaries = p.differential(n + 1);
  return subquotient(ring, cycles, boundaries);
}

ModuleClass homology(const Complex& p, int n) {
  ModuleClass out;
  for (const auto& b : p.blocks()) out.components.push_back(homology(b, n));
  return out;
}

bool is_acyclic(const Complex& p) {
  for (const auto& b : p.blocks())
    for (int n = b.lo(); n <= b.hi(); ++n)
      if (!homology(b, n).is_zero()) return false;
  return true;
}

namespace {

/// Coordinates of Hom_k(P, Q) = prod_i Hom(P_i, Q_{i+k}); blocks row-major.
struct HomLayout {
  std::map<int, std::size_t> offset;
  std::size_t dim = 0;

  HomLayout(const ComponentComplex& p, const ComponentComplex& q, int k) {
    for (int i = p.lo(); i <= p.hi(); ++i) {
      offset[i] = dim;
      dim += q.rank(i + k) * p.rank(i);
    }
  }
};

void check_hom_size(const ComponentComplex& p, const ComponentComplex& q, const HomLimits& limits) {
  if (p.total_rank() * q.total_rank() > limits.max_rank_product) {
    throw BoundExceeded("Hom computation of size " + std::to_string(p.total_rank()) + "x" +
                        std::to_string(q.total_rank()) + " exceeds limit " + std::to_string(limits.max_rank_product));
  }
}

/// D_k : Hom_k -> Hom_{k-1}, D(phi)_i = d_Q phi_i - (-1)^k phi_{i-1} d_P.
Matrix hom_differential(const ComponentComplex& p, const ComponentComplex& q, int k) {
  const Component& ring = p.ring();
  const HomLayout src(p, q, k), dst(p, q, k - 1);
  Matrix d = Matrix::zero(ring, dst.dim, src.dim);
  const Scalar s = ring.neg(sign(ring, k));
  if (p.is_zero()) return d;
  for (int i = p.lo(); i <= p.hi(); ++i) {
    const std::size_t rows = q.rank(i + k), cols = p.rank(i);
    if (rows == 0 || cols == 0) continue;
    const Matrix dq = q.differential(i + k);      // Q_{i+k} -> Q_{i+k-1}
    const Matrix dp = p.differential(i + 1);      // P_{i+1} -> P_i
    for (std::size_t a = 0; a < rows; ++a) {
      for (std::size_t b = 0; b < cols; ++b) {
        const std::size_t col = src.offset.at(i) + a * cols + b;
        // d_Q E_ab: column a of d_Q placed in column b of block i
        for (std::size_t r = 0; r < dq.rows(); ++r) {
          if (ring.is_zero(dq(r, a))) continue;
          const std::size_t row = dst.offset.at(i) + r * cols + b;
          d(row, col) = ring.add(d(row, col), dq(r, a));
        }
        // -(-1)^k E_ab d_P lands in block i+1: row a is row b of d_P
        if (p.rank(i + 1) == 0) continue;
        const std::size_t next_cols = p.rank(i + 1);
        for (std::size_t c = 0; c < next_cols; ++c) {
          if (ring.is_zero(dp(b, c))) continue;
          const std::size_t row = dst.offset.at(i + 1) + a * next_cols + c;
          d(row, col) = ring.add(d(row, col), ring.mul(s, dp(b, c)));
        }
      }
    }
  }
  return d;
}

Matrix vectorize(const ComponentComplex& p, const ComponentComplex& q, const DegreeMatrices& f, int k) {
  const Component& ring = p.ring();
  const HomLayout layout(p, q, k);
  Matrix v = Matrix::zero(ring, layout.dim, 1);
  for (const auto& [i, m] : f) {
    if (!layout.offset.count(i)) continue;
    for (std::size_t a = 0; a < m.rows(); ++a)
      for (std::size_t b = 0; b < m.cols(); ++b) v(layout.offset.at(i) + a * m.cols() + b, 0) = m(a, b);
  }
  return v;
}

DegreeMatrices unvectorize(const ComponentComplex& p, const ComponentComplex& q, const Matrix& v, std::size_t col,
                           int k) {
  const Component& ring = p.ring();
  const HomLayout layout(p, q, k);
  DegreeMatrices out;
  if (p.is_zero()) return out;
  for (int i = p.lo(); i <= p.hi(); ++i) {
    const std::size_t rows = q.rank(i + k), cols = p.rank(i);
    if (rows == 0 || cols == 0) continue;
    Matrix m = Matrix::zero(ring, rows, cols);
    for (std::size_t a = 0; a < rows; ++a)
      for (std::size_t b = 0; b < cols; ++b) m(a, b) = v(layout.offset.at(i) + a * cols + b, col);
    out[i] = std::move(m);
  }
  return out;
}

}  // namespace

ComponentComplex hom_complex(const ComponentComplex& p, const ComponentComplex& q, const HomLimits& limits) {
  check_hom_size(p, q, limits);
  const HomLayout minus(p, q, -1), zero(p, q, 0), plus(p, q, 1);
  return ComponentComplex(p.ring(), -1, {minus.dim, zero.dim, plus.dim},
                          {hom_differential(p, q, 0), hom_differential(p, q, 1)});
}

ModuleClass hom_up_to_homotopy(const Complex& p, const Complex& q, const HomLimits& limits) {
  require_same_ring(p.ring(), q.ring(), "hom_up_to_homotopy");
  ModuleClass out;
  for (std::size_t c = 0; c < p.blocks().size(); ++c) {
    out.components.push_back(homology(hom_complex(p.block(c), q.block(c), limits), 0));
  }
  return out;
}

std::vector<ChainMap> chain_map_generators(const Complex& p, const Complex& q, const HomLimits& limits) {
  require_same_ring(p.ring(), q.ring(), "chain_map_generators");
  std::vector<ChainMap> out;
  for (std::size_t c = 0; c < p.blocks().size(); ++c) {
    const auto& pb = p.block(c);
    const auto& qb = q.block(c);
    check_hom_size(pb, qb, limits);
    const Matrix d0 = hom_differential(pb, qb, 0);
    if (d0.cols() == 0) continue;
    const Matrix gens = kernel_generators(pb.ring(), d0);
    for (std::size_t j = 0; j < gens.cols(); ++j) {
      std::vector<DegreeMatrices> comps(p.ring().size());
      comps[c] = unvectorize(pb, qb, gens, j, 0);
      out.emplace_back(p, q, std::move(comps));
    }
  }
  return out;
}

std::optional<Homotopy> null_homotopy(const ChainMap& f, const HomLimits& limits) {
  Homotopy h;
  for (std::size_t c = 0; c < f.components().size(); ++c) {
    const auto& pb = f.source().block(c);
    const auto& qb = f.target().block(c);
    check_hom_size(pb, qb, limits);
    const Matrix target = vectorize(pb, qb, f.components()[c], 0);
    if (target.rows() == 0) {
      h.components.emplace_back();
      continue;
    }
    const Matrix d1 = hom_differential(pb, qb, 1);
    auto x = solve(pb.ring(), d1, target);
    if (!x) return std::nullopt;
    h.components.push_back(unvectorize(pb, qb, *x, 0, 1));
  }
  return h;
}

bool verify_homotopy(const ChainMap& f, const Homotopy& h) {
  if (h.components.size() != f.components().size()) return false;
  for (std::size_t c = 0; c < f.components().size(); ++c) {
    const auto& pb = f.source().block(c);
    const auto& qb = f.target().block(c);
    const Component& ring = pb.ring();
    auto hm = [&](int n) {
      if (auto it = h.components[c].find(n); it != h.components[c].end()) return it->second;
      return Matrix::zero(ring, qb.rank(n + 1), pb.rank(n));
    };
    for (const auto& [n, m] : h.components[c]) {
      if (m.rows() != qb.rank(n + 1) || m.cols() != pb.rank(n)) return false;
    }
    const int lo = std::min(pb.lo(), qb.lo()) - 1;
    const int hi = std::max(pb.hi(), qb.hi()) + 1;
    for (int n = lo; n <= hi; ++n) {
      const std::size_t rows = qb.rank(n), cols = pb.rank(n);
      if (rows == 0 || cols == 0) continue;
      Matrix sum = multiply(ring, qb.differential(n + 1), hm(n));
      sum = add(ring, sum, multiply(ring, hm(n - 1), pb.differential(n)));
      if (!(sum == f.at(c, n)) && !ttg::is_zero(ring, subtract(ring, sum, f.at(c, n)))) return false;
    }
  }
  return true;
}

IdempotentPair::IdempotentPair(ChainMap idempotent, Homotopy witness)
    : idempotent_(std::move(idempotent)), witness_(std::move(witness)) {
  if (!(idempotent_.source() == idempotent_.target())) throw InvalidArgument("idempotent must be an endomorphism");
  if (!verify_homotopy(subtract(compose(idempotent_, idempotent_), idempotent_), witness_)) {
    throw InvalidArgument("witness is not a homotopy p o p ~ p");
  }
}

IdempotentPair IdempotentPair::from_map(const ChainMap& idempotent) {
  if (!(idempotent.source() == idempotent.target())) throw InvalidArgument("idempotent must be an endomorphism");
  auto h = null_homotopy(subtract(compose(idempotent, idempotent), idempotent));
  if (!h) throw InvalidArgument("p o p is not homotopic to p");
  return IdempotentPair(idempotent, std::move(*h));
}

bool homology_exact_at(const ChainMap& alpha, const ChainMap& beta, int n) {
  if (!(alpha.target() == beta.source())) throw InvalidArgument("homology_exact_at: maps are not composable");
  for (std::size_t c = 0; c < alpha.components().size(); ++c) {
    const auto& a = alpha.source().block(c);
    const auto& b = beta.source().block(c);
    const auto& cc = beta.target().block(c);
    const Component& ring = b.ring();
    if (b.rank(n) == 0) continue;
    const Matrix zb = kernel_generators(ring, b.differential(n));
    // {z in Z_n(B) : beta(z) in B_n(C)}
    Matrix lhs = Matrix::zero(ring, b.rank(n), 0);
    if (zb.cols() > 0) {
      const Matrix bz = multiply(ring, beta.at(c, n), zb);
      const Matrix system = hstack(bz, negate(ring, cc.differential(n + 1)));
      const Matrix k = kernel_generators(ring, system);
      if (k.cols() > 0) lhs = multiply(ring, zb, submatrix(k, 0, zb.cols(), 0, k.cols()));
    }
    // alpha(Z_n(A)) + B_n(B)
    Matrix rhs = b.differential(n + 1);
    if (a.rank(n) > 0) {
      const Matrix za = kernel_generators(ring, a.differential(n));
      if (za.cols() > 0) rhs = hstack(multiply(ring, alpha.at(c, n), za), rhs);
    }
    if (!spans_contain(ring, lhs, rhs) || !spans_contain(ring, rhs, lhs)) return false;
  }
  return true;
}

}  // namespace ttg
