#include "ttg/spectrum.hpp"

#include <algorithm>

#include "ttg/error.hpp"

namespace ttg {

bool is_atomic(const Support& y) {
  std::size_t wholes = 0, closed = 0;
  for (const auto& part : y.components()) {
    wholes += part.whole ? 1 : 0;
    closed += part.points.size();
  }
  return (wholes == 1 && closed == 0) || (wholes == 0 && closed == 1);
}

SpectrumPoint E_map(const Ring& ring, const PointDescriptor& x) {
  if (!is_point_of(ring, x)) throw InvalidArgument("not a point of " + ring.name());
  return SpectrumPoint{x, Support::closure(ring, x)};
}

std::optional<PointDescriptor> E_inverse(const Support& y) {
  if (!is_atomic(y)) return std::nullopt;
  return y.maximal_points().front();
}

std::vector<std::pair<std::string, Complex>> canonical_witnesses(const Ring& ring, unsigned bound) {
  std::vector<std::pair<std::string, Complex>> out;
  out.emplace_back("0", zero_complex(ring));
  out.emplace_back("1", unit(ring));
  if (ring.is_product()) {
    for (std::size_t c = 0; c < ring.size(); ++c) out.emplace_back("1@" + std::to_string(c), component_unit(ring, c));
  }
  std::vector<std::pair<std::string, Complex>> koszuls;
  for (const auto& x : enumerate_points(ring, bound).points) {
    if (x.is_generic()) continue;
    koszuls.emplace_back("K" + point_label(ring, x), koszul_at(ring, x));
  }
  out.insert(out.end(), koszuls.begin(), koszuls.end());
  for (std::size_t i = 0; i < koszuls.size(); ++i)
    for (std::size_t j = i + 1; j < koszuls.size(); ++j)
      out.emplace_back(koszuls[i].first + "+" + koszuls[j].first, direct_sum(koszuls[i].second, koszuls[j].second));
  return out;
}

SpectrumModel::SpectrumModel(Ring ring, unsigned bound, std::vector<std::pair<std::string, Complex>> extra)
    : ring_(std::move(ring)), bound_(bound) {
  const PointEnumeration e = enumerate_points(ring_, bound);
  complete_ = e.complete;
  for (const auto& x : e.points) points_.push_back(E_map(ring_, x));
  auto witnesses = canonical_witnesses(ring_, bound);
  for (auto& w : extra) {
    if (!(w.second.ring() == ring_)) throw InvalidArgument("witness over the wrong ring");
    witnesses.push_back(std::move(w));
  }
  for (auto& [label, object] : witnesses) {
    BasisOpen b{label, object, supph(object), {}};
    b.points = U(object);
    basis_.push_back(std::move(b));
  }
}

std::optional<std::size_t> SpectrumModel::index_of(const PointDescriptor& x) const {
  for (std::size_t i = 0; i < points_.size(); ++i)
    if (points_[i].descriptor == x) return i;
  return std::nullopt;
}

bool SpectrumModel::specializes(std::size_t i, std::size_t j) const {
  return points_.at(j).support.is_subset_of(points_.at(i).support);
}

std::vector<std::pair<std::size_t, std::size_t>> SpectrumModel::covering_relations() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < points_.size(); ++i)
    for (std::size_t j = 0; j < points_.size(); ++j) {
      if (i == j || !specializes(i, j)) continue;
      bool between = false;
      for (std::size_t k = 0; k < points_.size() && !between; ++k)
        between = k != i && k != j && specializes(i, k) && specializes(k, j) && !specializes(k, i) && !specializes(j, k);
      if (!between) out.emplace_back(i, j);
    }
  return out;
}

std::vector<std::size_t> SpectrumModel::U(const Complex& a) const {
  const Support s = supph(a);
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < points_.size(); ++i)
    if (!points_[i].support.is_subset_of(s)) out.push_back(i);
  return out;
}

std::vector<std::size_t> SpectrumModel::F(const Complex& a) const {
  const Support s = supph(a);
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < points_.size(); ++i)
    if (points_[i].support.is_subset_of(s)) out.push_back(i);
  return out;
}

std::vector<std::size_t> SpectrumModel::complement_of_support(const Complex& a) const {
  const Support s = supph(a);
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < points_.size(); ++i)
    if (!s.contains(points_[i].descriptor)) out.push_back(i);
  return out;
}

SpectrumModel build_spectrum(const Ring& ring, unsigned bound) { return SpectrumModel(ring, bound); }

TopologyReport check_topology_axioms(const SpectrumModel& s, std::size_t max_pairs) {
  TopologyReport r;
  const auto& pts = s.points();
  const Ring& ring = s.ring();

  // E is a bijection onto the atomic supports and reflects the order
  r.e_bijective = true;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const auto back = E_inverse(pts[i].support);
    if (!is_atomic(pts[i].support) || !back || !(*back == pts[i].descriptor)) {
      r.e_bijective = false;
      r.failures.push_back("E is not invertible at " + point_label(ring, pts[i].descriptor));
    }
    for (std::size_t j = 0; j < pts.size(); ++j) {
      if (i != j && pts[i].support == pts[j].support) {
        r.e_bijective = false;
        r.failures.push_back("E identifies " + point_label(ring, pts[i].descriptor) + " and " +
                             point_label(ring, pts[j].descriptor));
      }
      if (s.specializes(i, j) != ttg::specializes(pts[i].descriptor, pts[j].descriptor)) {
        r.failures.push_back("order mismatch between " + point_label(ring, pts[i].descriptor) + " and " +
                             point_label(ring, pts[j].descriptor));
      }
    }
  }

  std::vector<std::size_t> all(pts.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  if (s.U(zero_complex(ring)) != all) r.failures.push_back("U(0) is not the whole space");

  for (const auto& b : s.basis()) {
    ++r.opens_checked;
    if (b.points != s.complement_of_support(b.object)) r.failures.push_back("U(" + b.witness + ") != X - Supph");
    const auto f = s.F(b.object);
    for (std::size_t i : f)
      for (std::size_t j = 0; j < pts.size(); ++j)
        if (s.specializes(i, j) && !std::binary_search(f.begin(), f.end(), j)) {
          r.failures.push_back("F(" + b.witness + ") not closed under specialization at " +
                               point_label(ring, pts[j].descriptor));
        }
  }

  const auto& basis = s.basis();
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i; j < basis.size(); ++j) {
      if (r.pairs_checked >= max_pairs) return r;
      ++r.pairs_checked;
      std::vector<std::size_t> meet;
      std::set_intersection(basis[i].points.begin(), basis[i].points.end(), basis[j].points.begin(),
                            basis[j].points.end(), std::back_inserter(meet));
      if (meet != s.U(direct_sum(basis[i].object, basis[j].object))) {
        r.failures.push_back("U(" + basis[i].witness + ") n U(" + basis[j].witness + ") != U(sum)");
      }
    }
  return r;
}

}  // namespace ttg
