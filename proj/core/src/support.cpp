#include "ttg/support.hpp"

#include <algorithm>
#include <stdexcept>

#include "ttg/error.hpp"
#include "ttg/factor.hpp"

namespace ttg {

namespace {

void sort_unique(const BaseRing& b, std::vector<BaseElem>& xs) {
  std::sort(xs.begin(), xs.end(), [&](const BaseElem& x, const BaseElem& y) { return b.less(x, y); });
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
}

bool has_point(const BaseRing& b, const std::vector<BaseElem>& xs, const BaseElem& q) {
  return std::binary_search(xs.begin(), xs.end(), q, [&](const BaseElem& x, const BaseElem& y) { return b.less(x, y); });
}

void require_same(const Support& a, const Support& b) {
  if (!(a.ring() == b.ring())) throw InvalidArgument("supports over different rings");
}

/// Closed points of V(a) inside the component, for a nonzero base element a.
std::vector<BaseElem> zero_locus(const Component& c, const BaseElem& a) {
  const BaseRing& b = c.base_ring();
  std::vector<BaseElem> out;
  for (auto& q : prime_divisors(b, a))
    if (c.contains_prime(q)) out.push_back(std::move(q));
  return out;
}

}  // namespace

Support::Support(Ring ring) : ring_(std::move(ring)), components_(ring_.size()) {}

Support::Support(Ring ring, std::vector<ComponentSupport> components)
    : ring_(std::move(ring)), components_(std::move(components)) {
  if (components_.size() != ring_.size()) throw InvalidArgument("support needs one entry per ring component");
  for (std::size_t c = 0; c < components_.size(); ++c) {
    const Component& comp = ring_.component(c);
    for (const auto& q : components_[c].points) {
      if (!is_point_of(ring_, {c, q})) {
        throw InvalidArgument(comp.base_ring().to_string(q) + " is not a point of " + comp.name());
      }
    }
  }
  normalize();
}

void Support::normalize() {
  for (std::size_t c = 0; c < components_.size(); ++c) {
    const Component& comp = ring_.component(c);
    auto& part = components_[c];
    if (part.whole && comp.kind() == ComponentKind::quotient) {
      part.whole = false;
      part.points = prime_divisors(comp.base_ring(), comp.parameter());
    }
    if (part.whole) part.points.clear();
    sort_unique(comp.base_ring(), part.points);
  }
}

Support Support::whole(const Ring& ring) {
  std::vector<ComponentSupport> parts(ring.size(), ComponentSupport{true, {}});
  return Support(ring, std::move(parts));
}

Support Support::closure(const Ring& ring, const PointDescriptor& x) { return of_points(ring, {x}); }

Support Support::of_points(const Ring& ring, const std::vector<PointDescriptor>& xs) {
  std::vector<ComponentSupport> parts(ring.size());
  for (const auto& x : xs) {
    if (!is_point_of(ring, x)) throw InvalidArgument("not a point of " + ring.name());
    if (x.is_generic()) {
      parts[x.component].whole = true;
    } else {
      parts[x.component].points.push_back(*x.prime);
    }
  }
  return Support(ring, std::move(parts));
}

bool Support::is_empty() const {
  return std::all_of(components_.begin(), components_.end(),
                     [](const auto& p) { return !p.whole && p.points.empty(); });
}

bool Support::contains(const PointDescriptor& x) const {
  if (x.component >= components_.size()) return false;
  const auto& part = components_[x.component];
  if (part.whole) return is_point_of(ring_, x);
  if (x.is_generic()) return false;
  return has_point(ring_.component(x.component).base_ring(), part.points, *x.prime);
}

bool Support::is_subset_of(const Support& other) const {
  require_same(*this, other);
  for (std::size_t c = 0; c < components_.size(); ++c) {
    const auto& mine = components_[c];
    const auto& theirs = other.components_[c];
    if (theirs.whole) continue;
    if (mine.whole) return false;
    const BaseRing& b = ring_.component(c).base_ring();
    for (const auto& q : mine.points)
      if (!has_point(b, theirs.points, q)) return false;
  }
  return true;
}

std::vector<PointDescriptor> Support::maximal_points() const {
  std::vector<PointDescriptor> out;
  for (std::size_t c = 0; c < components_.size(); ++c) {
    if (components_[c].whole) {
      out.push_back({c, std::nullopt});
    } else {
      for (const auto& q : components_[c].points) out.push_back({c, q});
    }
  }
  return out;
}

std::vector<PointDescriptor> Support::points_in(const PointEnumeration& e) const {
  std::vector<PointDescriptor> out;
  for (const auto& x : e.points)
    if (contains(x)) out.push_back(x);
  return out;
}

std::string Support::to_string() const {
  std::string s = "{";
  bool first = true;
  for (std::size_t c = 0; c < components_.size(); ++c) {
    const auto& part = components_[c];
    const std::string tag = ring_.is_product() ? "@" + std::to_string(c) : "";
    auto emit = [&](const std::string& item) {
      if (!first) s += ", ";
      s += item + tag;
      first = false;
    };
    if (part.whole) emit("Spec");
    for (const auto& q : part.points) emit("(" + ring_.component(c).base_ring().to_string(q) + ")");
  }
  return s + "}";
}

Support unite(const Support& a, const Support& b) {
  require_same(a, b);
  std::vector<ComponentSupport> parts;
  for (std::size_t c = 0; c < a.components().size(); ++c) {
    ComponentSupport p;
    p.whole = a.component(c).whole || b.component(c).whole;
    if (!p.whole) {
      p.points = a.component(c).points;
      p.points.insert(p.points.end(), b.component(c).points.begin(), b.component(c).points.end());
    }
    parts.push_back(std::move(p));
  }
  return Support(a.ring(), std::move(parts));
}

Support intersect(const Support& a, const Support& b) {
  require_same(a, b);
  std::vector<ComponentSupport> parts;
  for (std::size_t c = 0; c < a.components().size(); ++c) {
    const auto& x = a.component(c);
    const auto& y = b.component(c);
    ComponentSupport p;
    if (x.whole && y.whole) {
      p.whole = true;
    } else if (x.whole) {
      p.points = y.points;
    } else if (y.whole) {
      p.points = x.points;
    } else {
      const BaseRing& base = a.ring().component(c).base_ring();
      for (const auto& q : x.points)
        if (has_point(base, y.points, q)) p.points.push_back(q);
    }
    parts.push_back(std::move(p));
  }
  return Support(a.ring(), std::move(parts));
}

Support supph(const Complex& p) {
  const Ring& ring = p.ring();
  std::vector<ComponentSupport> parts(ring.size());
  for (std::size_t c = 0; c < ring.size(); ++c) {
    const auto& block = p.block(c);
    const Component& comp = ring.component(c);
    auto& part = parts[c];
    for (int n = block.lo(); n <= block.hi() && !part.whole; ++n) {
      const ComponentModule h = homology(block, n);
      if (h.free_rank > 0) {
        if (comp.has_generic_point()) {
          part.whole = true;
          break;
        }
        for (auto& q : zero_locus(comp, comp.parameter())) part.points.push_back(std::move(q));
      }
      for (const auto& e : h.divisors)
        for (auto& q : zero_locus(comp, e)) part.points.push_back(std::move(q));
    }
  }
  return Support(ring, std::move(parts));
}

Support thomason_phi(const Ring& ring, const std::vector<Complex>& generators) {
  Support out(ring);
  for (const auto& g : generators) out = unite(out, supph(g));
  return out;
}

bool membership(const Complex& p, const Support& y) { return supph(p).is_subset_of(y); }

std::vector<Complex> realize_generators(const Support& y) {
  const Ring& ring = y.ring();
  std::vector<Complex> out;
  for (std::size_t c = 0; c < ring.size(); ++c) {
    const auto& part = y.component(c);
    if (part.whole) {
      out.push_back(component_unit(ring, c));
      continue;
    }
    for (const auto& q : part.points) out.push_back(koszul_at(ring, {c, q}));
  }
  return out;
}

Complex realize(const Support& y) { return direct_sum(realize_generators(y), y.ring()); }

namespace {

std::vector<Complex> default_probes(const Ring& ring, unsigned bound) {
  std::vector<Complex> probes{unit(ring)};
  for (const auto& x : enumerate_points(ring, bound).points)
    if (!x.is_generic()) probes.push_back(koszul_at(ring, x));
  return probes;
}

class ThetaBuilder {
 public:
  ThetaBuilder(const Support& bound, std::size_t budget) : bound_(bound), budget_(budget) {}

  bool full() const { return sample_.budget_exhausted; }

  void push(Complex c) {
    if (sample_.objects.size() >= budget_) {
      sample_.budget_exhausted = true;
      return;
    }
    if (!membership(c, bound_)) {
      throw std::logic_error("theta step produced an object outside " + bound_.to_string());
    }
    sample_.objects.push_back(std::move(c));
  }

  ThetaSample& sample() { return sample_; }

 private:
  const Support& bound_;
  std::size_t budget_;
  ThetaSample sample_;
};

void theta_into(ThetaBuilder& out, const Ring& ring, const std::vector<Complex>& d, const ThetaOptions& options) {
  const std::vector<Complex> probes =
      options.probes.empty() ? default_probes(ring, options.probe_bound) : options.probes;
  out.push(zero_complex(ring));
  for (const auto& a : d) out.push(a);
  for (const auto& a : d) {
    out.push(shift(a));
    out.push(shift(a, -1));
  }
  // summands of the per-component decomposition
  for (const auto& a : d) {
    if (ring.size() < 2) break;
    for (std::size_t c = 0; c < ring.size() && !out.full(); ++c) out.push(tensor(a, component_unit(ring, c)));
  }
  for (std::size_t i = 0; i < d.size() && !out.full(); ++i) {
    for (std::size_t j = 0; j < d.size() && !out.full(); ++j) {
      const Complex sum = direct_sum(d[i], d[j]);
      out.push(sum);
      std::vector<ChainMap> maps;
      try {
        maps = chain_map_generators(d[i], d[j], options.hom_limits);
      } catch (const BoundExceeded&) {
        ++out.sample().skipped_pairs;
        continue;
      }
      out.push(cone(ChainMap::zero(d[i], d[j])).cone());
      ChainMap total = ChainMap::zero(d[i], d[j]);
      for (const auto& f : maps) {
        if (out.full()) break;
        out.push(cone(f).cone());
        total = add(total, f);
      }
      if (maps.size() > 1) out.push(cone(total).cone());
    }
  }
  for (const auto& a : d)
    for (const auto& p : probes) {
      if (out.full()) return;
      out.push(tensor(a, p));
    }
}

}  // namespace

ThetaSample theta_step(const Ring& ring, const std::vector<Complex>& d, const ThetaOptions& options) {
  const Support bound = thomason_phi(ring, d);
  ThetaBuilder out(bound, options.budget);
  theta_into(out, ring, d, options);
  return std::move(out.sample());
}

ThetaSample theta_saturate(const Ring& ring, const std::vector<Complex>& d, unsigned steps,
                           const ThetaOptions& options) {
  ThetaSample current{d, false, 0};
  for (unsigned s = 0; s < steps; ++s) {
    ThetaSample next = theta_step(ring, current.objects, options);
    next.skipped_pairs += current.skipped_pairs;
    current = std::move(next);
    if (current.budget_exhausted) break;
  }
  return current;
}

std::vector<Support> all_supports(const Ring& ring, const PointEnumeration& e, std::size_t limit) {
  std::vector<std::vector<ComponentSupport>> per_component(ring.size());
  for (std::size_t c = 0; c < ring.size(); ++c) {
    std::vector<BaseElem> closed;
    for (const auto& x : e.points)
      if (x.component == c && !x.is_generic()) closed.push_back(*x.prime);
    if (closed.size() > 20) throw BoundExceeded("too many points to enumerate supports");
    const std::size_t n = std::size_t{1} << closed.size();
    for (std::size_t mask = 0; mask < n; ++mask) {
      ComponentSupport p;
      for (std::size_t i = 0; i < closed.size(); ++i)
        if (mask & (std::size_t{1} << i)) p.points.push_back(closed[i]);
      per_component[c].push_back(std::move(p));
    }
    if (ring.component(c).has_generic_point()) per_component[c].push_back(ComponentSupport{true, {}});
  }
  std::size_t total = 1;
  for (const auto& v : per_component) {
    total *= v.size();
    if (total > limit) throw BoundExceeded("support enumeration exceeds " + std::to_string(limit));
  }
  std::vector<Support> out;
  std::vector<std::size_t> index(ring.size(), 0);
  for (std::size_t k = 0; k < total; ++k) {
    std::vector<ComponentSupport> parts;
    for (std::size_t c = 0; c < ring.size(); ++c) parts.push_back(per_component[c][index[c]]);
    out.emplace_back(ring, std::move(parts));
    for (std::size_t c = ring.size(); c-- > 0;) {
      if (++index[c] < per_component[c].size()) break;
      index[c] = 0;
    }
  }
  return out;
}

}  // namespace ttg
