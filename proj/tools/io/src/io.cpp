#include "ttg/io.hpp"

#include <filesystem>
#include <fstream>
#include <map>
#include <regex>
#include <sstream>

namespace ttg::io {

namespace {

const json& field(const json& j, const char* key, const std::string& what) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(what + ": missing field \"" + key + "\"");
  return j.at(key);
}

long long integer_field(const json& j, const char* key, const std::string& what) {
  const json& v = field(j, key, what);
  if (!v.is_number_integer()) throw ParseError(what + ": field \"" + key + "\" must be an integer");
  return v.get<long long>();
}

std::size_t index_value(const json& v, const std::string& what) {
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0))
    throw ParseError(what + ": expected a nonnegative integer");
  return v.get<std::size_t>();
}

const std::regex& decimal() {
  static const std::regex re("[+-]?[0-9]+");
  return re;
}

/// Array standing for a tuple of product parts rather than a coefficient list.
bool is_tuple(const json& j) {
  if (!j.is_array() || j.empty()) return false;
  for (const auto& x : j)
    if (!x.is_number()) return true;
  return false;
}

void flatten(const json& j, std::vector<const json*>& leaves) {
  for (const auto& x : j) {
    if (is_tuple(x)) {
      flatten(x, leaves);
    } else {
      leaves.push_back(&x);
    }
  }
}

json component_to_json(const Component& c) {
  const BaseRing& b = c.base_ring();
  json base = b.is_integers() ? json{{"kind", "Z"}} : json{{"kind", "Fpt"}, {"p", b.characteristic()}};
  switch (c.kind()) {
    case ComponentKind::base:
      return base;
    case ComponentKind::quotient:
      return json{{"kind", "quotient"}, {"base", base}, {"d", base_to_json(b, c.parameter())}};
    case ComponentKind::localization:
      return json{{"kind", "localization"}, {"base", base}, {"f", base_to_json(b, c.parameter())}};
  }
  throw std::logic_error("unknown component kind");
}

json matrix_to_json(const Component& c, const Matrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(scalar_to_json(c, m(i, k)));
    rows.push_back(std::move(row));
  }
  return rows;
}

void check_shape(const json& m, std::size_t rows, std::size_t cols, const std::string& what) {
  if (!m.is_array() || m.size() != rows) throw ParseError(what + ": expected " + std::to_string(rows) + " rows");
  for (const auto& row : m)
    if (!row.is_array() || row.size() != cols)
      throw ParseError(what + ": expected rows of length " + std::to_string(cols));
}

struct Shape {
  int lo = 0;
  std::vector<std::size_t> ranks;
};

Shape shape_from_json(const json& j, const std::string& what) {
  Shape s;
  s.lo = static_cast<int>(integer_field(j, "lo", what));
  const long long hi = integer_field(j, "hi", what);
  const json& ranks = field(j, "ranks", what);
  if (!ranks.is_array()) throw ParseError(what + ": ranks must be an array");
  for (const auto& r : ranks) s.ranks.push_back(index_value(r, what + " ranks"));
  const long long degrees = hi < s.lo ? 0 : hi - s.lo + 1;
  if (static_cast<long long>(s.ranks.size()) != degrees)
    throw ParseError(what + ": ranks must list one entry per degree from lo to hi");
  const json& d = field(j, "differentials", what);
  const std::size_t expected = s.ranks.empty() ? 0 : s.ranks.size() - 1;
  if (!d.is_array() || d.size() != expected)
    throw ParseError(what + ": expected " + std::to_string(expected) + " differentials");
  for (std::size_t k = 0; k < expected; ++k)
    check_shape(d[k], s.ranks[k], s.ranks[k + 1], what + " differential " + std::to_string(k));
  return s;
}

json shape_to_json(const ComponentComplex& b) {
  json ranks = json::array();
  json diffs = json::array();
  if (!b.is_zero()) {
    for (int n = b.lo(); n <= b.hi(); ++n) ranks.push_back(b.rank(n));
    for (int n = b.lo() + 1; n <= b.hi(); ++n) diffs.push_back(matrix_to_json(b.ring(), b.differential(n)));
  }
  return json{{"lo", b.is_zero() ? 0 : b.lo()}, {"hi", b.is_zero() ? -1 : b.hi()}, {"ranks", ranks},
              {"differentials", diffs}};
}

json indices(const std::vector<std::size_t>& xs) {
  json a = json::array();
  for (auto x : xs) a.push_back(x);
  return a;
}

json strings(const std::vector<std::string>& xs) {
  json a = json::array();
  for (const auto& x : xs) a.push_back(x);
  return a;
}

}  // namespace

json parse(const std::string& text, const std::string& what) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(what + ": " + e.what());
  }
}

json load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse(ss.str(), path);
}

BaseElem base_from_json(const BaseRing& b, const json& j) {
  if (b.is_integers()) {
    if (j.is_number_integer()) return BaseElem{mpz_class(j.dump())};
    if (j.is_string()) {
      const auto& s = j.get_ref<const std::string&>();
      if (!std::regex_match(s, decimal())) throw ParseError("not a decimal integer: \"" + s + "\"");
      return BaseElem{mpz_class(s[0] == '+' ? s.substr(1) : s)};
    }
    throw ParseError("integer expected, got " + j.dump());
  }
  if (j.is_number_integer()) return b.from_int(j.get<long>());
  if (j.is_array()) {
    std::vector<std::int64_t> coeffs;
    for (const auto& c : j) {
      if (!c.is_number_integer()) throw ParseError("polynomial coefficients must be integers: " + j.dump());
      coeffs.push_back(c.get<std::int64_t>());
    }
    return b.poly(std::move(coeffs));
  }
  throw ParseError("coefficient array expected, got " + j.dump());
}

json base_to_json(const BaseRing& b, const BaseElem& a) {
  if (b.is_integers()) return std::get<mpz_class>(a).get_str();
  json coeffs = json::array();
  for (auto c : std::get<Poly>(a).coeffs) coeffs.push_back(c);
  return coeffs;
}

Scalar scalar_from_json(const Component& c, const json& j) {
  if (j.is_object()) {
    const BaseElem num = base_from_json(c.base_ring(), field(j, "num", "fraction"));
    const BaseElem den = j.contains("den") ? base_from_json(c.base_ring(), j.at("den")) : c.base_ring().one();
    return c.fraction(num, den);
  }
  return c.from_base(base_from_json(c.base_ring(), j));
}

json scalar_to_json(const Component& c, const Scalar& s) {
  const BaseRing& b = c.base_ring();
  if (b.is_one(s.den)) return base_to_json(b, s.num);
  return json{{"num", base_to_json(b, s.num)}, {"den", base_to_json(b, s.den)}};
}

Element element_from_json(const Ring& r, const json& j) {
  if (r.size() == 1) return Element{{scalar_from_json(r.component(0), j)}};
  if (!j.is_array()) throw ParseError("element of " + r.name() + " must be an array of parts");
  std::vector<const json*> leaves;
  flatten(j, leaves);
  if (leaves.size() != r.size())
    throw ParseError("element of " + r.name() + " needs " + std::to_string(r.size()) + " parts, got " +
                     std::to_string(leaves.size()));
  Element a;
  for (std::size_t c = 0; c < r.size(); ++c) a.parts.push_back(scalar_from_json(r.component(c), *leaves[c]));
  return a;
}

json element_to_json(const Ring& r, const Element& a) {
  if (r.size() == 1) return scalar_to_json(r.component(0), a.parts.at(0));
  json parts = json::array();
  for (std::size_t c = 0; c < r.size(); ++c) parts.push_back(scalar_to_json(r.component(c), a.parts.at(c)));
  return parts;
}

Ring ring_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("ring descriptor must be an object, got " + j.dump());
  const json& kind = field(j, "kind", "ring");
  if (!kind.is_string()) throw ParseError("ring kind must be a string");
  const std::string k = kind.get<std::string>();
  if (k == "Z") return Ring::integers();
  if (k == "Fpt") {
    const long long p = integer_field(j, "p", "Fpt ring");
    if (p < 2 || p > 1000) throw ParseError("Fpt ring: unsupported characteristic " + std::to_string(p));
    return Ring::polynomials(static_cast<std::uint32_t>(p));
  }
  if (k == "quotient") {
    const Ring base = ring_from_json(field(j, "base", "quotient ring"));
    return Ring::quotient(base, element_from_json(base, field(j, "d", "quotient ring")));
  }
  if (k == "localization") {
    const Ring base = ring_from_json(field(j, "base", "localization ring"));
    return Ring::localization(base, element_from_json(base, field(j, "f", "localization ring")));
  }
  if (k == "product") {
    const json& fs = field(j, "factors", "product ring");
    if (!fs.is_array()) throw ParseError("product ring: factors must be an array");
    std::vector<Ring> factors;
    for (const auto& f : fs) factors.push_back(ring_from_json(f));
    return Ring::product(factors);
  }
  if (k == "zero") return Ring::zero_ring();
  throw ParseError("unknown ring kind \"" + k + "\"");
}

json ring_to_json(const Ring& r) {
  if (r.is_zero_ring()) return json{{"kind", "zero"}};
  if (r.size() == 1) return component_to_json(r.component(0));
  json factors = json::array();
  for (std::size_t c = 0; c < r.size(); ++c) factors.push_back(component_to_json(r.component(c)));
  return json{{"kind", "product"}, {"factors", factors}};
}

Ring ring_from_argument(const std::string& arg) {
  if (!arg.empty() && (arg.front() == '{')) return ring_from_json(parse(arg, "--ring"));
  if (std::filesystem::is_regular_file(arg)) return ring_from_json(load(arg));
  static const std::regex zn("Z/?\\(?([0-9]+)\\)?");
  static const std::regex zf("Z\\[1/([0-9]+)\\]");
  static const std::regex fpt("F([0-9]+)\\[t\\]");
  std::smatch m;
  const Ring z = Ring::integers();
  if (arg == "Z") return z;
  if (std::regex_match(arg, m, zn)) return Ring::quotient(z, z.from_base(BaseElem{mpz_class(m[1].str())}));
  if (std::regex_match(arg, m, zf)) return Ring::localization(z, z.from_base(BaseElem{mpz_class(m[1].str())}));
  if (std::regex_match(arg, m, fpt)) {
    const unsigned long p = std::stoul(m[1].str());
    if (p < 2 || p > 1000) throw ParseError("unsupported characteristic in " + arg);
    return Ring::polynomials(static_cast<std::uint32_t>(p));
  }
  throw ParseError("cannot read ring \"" + arg + "\": not a file, JSON descriptor or ring name");
}

Complex complex_from_json(const json& j) {
  const Ring r = ring_from_json(field(j, "ring", "complex"));
  if (j.contains("blocks")) {
    const json& bs = j.at("blocks");
    if (!bs.is_array() || bs.size() != r.size())
      throw ParseError("complex: expected one block per component of " + r.name());
    std::vector<ComponentComplex> blocks;
    for (std::size_t c = 0; c < r.size(); ++c) {
      const Shape s = shape_from_json(bs[c], "complex block " + std::to_string(c));
      std::vector<Matrix> diffs;
      for (std::size_t k = 0; k + 1 < s.ranks.size(); ++k) {
        Matrix m = Matrix::zero(r.component(c), s.ranks[k], s.ranks[k + 1]);
        for (std::size_t a = 0; a < m.rows(); ++a)
          for (std::size_t b = 0; b < m.cols(); ++b)
            m(a, b) = scalar_from_json(r.component(c), bs[c].at("differentials")[k][a][b]);
        diffs.push_back(std::move(m));
      }
      blocks.emplace_back(r.component(c), s.lo, s.ranks, std::move(diffs));
    }
    return Complex(r, std::move(blocks));
  }
  const Shape s = shape_from_json(j, "complex");
  std::vector<RingMatrix> diffs;
  for (std::size_t k = 0; k + 1 < s.ranks.size(); ++k) {
    RingMatrix m{s.ranks[k], s.ranks[k + 1], {}};
    for (const auto& row : j.at("differentials")[k])
      for (const auto& e : row) m.entries.push_back(element_from_json(r, e));
    diffs.push_back(std::move(m));
  }
  return Complex::from_ring_matrices(r, s.lo, s.ranks, diffs);
}

json complex_to_json(const Complex& p) {
  const Ring& r = p.ring();
  json out{{"ring", ring_to_json(r)}};
  if (!p.has_uniform_ranks()) {
    json blocks = json::array();
    for (const auto& b : p.blocks()) blocks.push_back(shape_to_json(b));
    out["blocks"] = blocks;
    return out;
  }
  json ranks = json::array();
  json diffs = json::array();
  const bool zero = p.is_zero();
  const int lo = zero ? 0 : p.lo();
  const int hi = zero ? -1 : p.hi();
  for (int n = lo; n <= hi; ++n) ranks.push_back(p.rank(n));
  for (int n = lo + 1; n <= hi; ++n) {
    const RingMatrix m = p.differential(n);
    json rows = json::array();
    for (std::size_t a = 0; a < m.rows; ++a) {
      json row = json::array();
      for (std::size_t b = 0; b < m.cols; ++b) row.push_back(element_to_json(r, m.at(a, b)));
      rows.push_back(std::move(row));
    }
    diffs.push_back(std::move(rows));
  }
  out["lo"] = lo;
  out["hi"] = hi;
  out["ranks"] = ranks;
  out["differentials"] = diffs;
  return out;
}

Support support_from_json(const Ring& r, const json& j) {
  const json& cs = field(j, "components", "support");
  if (!cs.is_array() || cs.size() != r.size())
    throw ParseError("support: expected " + std::to_string(r.size()) + " components for " + r.name());
  std::vector<ComponentSupport> parts;
  for (std::size_t c = 0; c < r.size(); ++c) {
    ComponentSupport s;
    if (cs[c].contains("whole")) {
      if (!cs[c].at("whole").is_boolean()) throw ParseError("support: whole must be a boolean");
      s.whole = cs[c].at("whole").get<bool>();
    }
    if (cs[c].contains("points")) {
      if (!cs[c].at("points").is_array()) throw ParseError("support: points must be an array");
      for (const auto& q : cs[c].at("points")) s.points.push_back(base_from_json(r.component(c).base_ring(), q));
    }
    parts.push_back(std::move(s));
  }
  return Support(r, std::move(parts));
}

json support_to_json(const Support& y) {
  json cs = json::array();
  for (std::size_t c = 0; c < y.components().size(); ++c) {
    const BaseRing& b = y.ring().component(c).base_ring();
    json pts = json::array();
    for (const auto& q : y.component(c).points) pts.push_back(base_to_json(b, q));
    cs.push_back(json{{"whole", y.component(c).whole}, {"points", pts}});
  }
  return json{{"components", cs}};
}

PointDescriptor point_from_json(const Ring& r, const json& j) {
  const std::size_t c = index_value(field(j, "component", "point"), "point component");
  if (c >= r.size()) throw ParseError("point: component out of range");
  PointDescriptor x{c, std::nullopt};
  if (j.contains("prime") && !j.at("prime").is_null()) x.prime = base_from_json(r.component(c).base_ring(), j.at("prime"));
  if (!is_point_of(r, x)) throw ParseError("point " + j.dump() + " is not a point of Spec " + r.name());
  return x;
}

json point_to_json(const Ring& r, const PointDescriptor& x) {
  return json{{"component", x.component},
              {"prime", x.prime ? base_to_json(r.component(x.component).base_ring(), *x.prime) : json()}};
}

OpenSet open_from_json(const Ring& r, const json& j) { return OpenSet(support_from_json(r, field(j, "complement", "open"))); }

json open_to_json(const OpenSet& v) { return json{{"complement", support_to_json(v.complement())}}; }

RingMap ring_map_from_json(const json& j) {
  const Ring source = ring_from_json(field(j, "source", "ring map"));
  const Ring target = ring_from_json(field(j, "target", "ring map"));
  const json gi = j.contains("gen_images") ? j.at("gen_images") : json::object();
  if (!gi.is_object()) throw ParseError("ring map: gen_images must be an object");
  std::vector<std::size_t> from(target.size(), 0);
  if (gi.contains("components")) {
    const json& cs = gi.at("components");
    if (!cs.is_array() || cs.size() != target.size())
      throw ParseError("ring map: gen_images.components needs one source index per target component");
    for (std::size_t k = 0; k < cs.size(); ++k) {
      from[k] = index_value(cs[k], "ring map source index");
      if (from[k] >= source.size()) throw ParseError("ring map: source index out of range");
    }
  } else if (source.size() != 1 && !target.is_zero_ring()) {
    throw ParseError("ring map: a product source needs gen_images.components");
  }
  std::optional<Element> t;
  if (gi.contains("t")) t = element_from_json(target, gi.at("t"));
  std::vector<ComponentAssignment> as;
  for (std::size_t k = 0; k < target.size(); ++k) {
    ComponentAssignment a{from[k], std::nullopt};
    if (!source.component(from[k]).base_ring().is_integers()) {
      if (!t) throw ParseError("ring map: gen_images.t is required for a polynomial source");
      a.t_image = t->parts[k];
    }
    as.push_back(std::move(a));
  }
  return RingMap(source, target, std::move(as));
}

json ring_map_to_json(const RingMap& f) {
  const Ring& target = f.target();
  json gi = json::object();
  if (f.source().size() != 1) {
    json cs = json::array();
    for (const auto& a : f.assignments()) cs.push_back(a.source_component);
    gi["components"] = cs;
  }
  bool any_t = false;
  Element t = target.zero();
  for (std::size_t k = 0; k < target.size(); ++k) {
    if (f.assignments()[k].t_image) {
      any_t = true;
      t.parts[k] = *f.assignments()[k].t_image;
    }
  }
  if (any_t) gi["t"] = element_to_json(target, t);
  return json{{"source", ring_to_json(f.source())}, {"target", ring_to_json(target)}, {"gen_images", gi}};
}

json module_to_json(const Ring& r, const ModuleClass& m) {
  json cs = json::array();
  for (std::size_t c = 0; c < m.components.size(); ++c) {
    json ds = json::array();
    for (const auto& d : m.components[c].divisors) ds.push_back(base_to_json(r.component(c).base_ring(), d));
    cs.push_back(json{{"free_rank", m.components[c].free_rank}, {"divisors", ds}});
  }
  return json{{"text", to_string(r, m)}, {"components", cs}};
}

json spectrum_to_json(const SpectrumModel& s) {
  const Ring& r = s.ring();
  json points = json::array();
  for (std::size_t i = 0; i < s.points().size(); ++i) {
    const auto& p = s.points()[i];
    std::vector<std::size_t> closure;
    for (std::size_t k = 0; k < s.points().size(); ++k)
      if (s.specializes(i, k)) closure.push_back(k);
    points.push_back(json{{"index", i},
                          {"label", point_label(r, p.descriptor)},
                          {"point", point_to_json(r, p.descriptor)},
                          {"support", support_to_json(p.support)},
                          {"closure", indices(closure)}});
  }
  json basis = json::array();
  for (const auto& b : s.basis())
    basis.push_back(json{{"witness", b.witness}, {"support", support_to_json(b.support)}, {"points", indices(b.points)}});
  json covering = json::array();
  for (const auto& [i, k] : s.covering_relations()) covering.push_back(json::array({i, k}));
  return json{{"ring", ring_to_json(r)}, {"name", r.name()},     {"bound", s.bound()},   {"complete", s.complete()},
              {"points", points},        {"covering", covering}, {"basis", basis}};
}

json reconstruction_to_json(const RingedSpaceModel& m) {
  json space = json::array();
  for (const auto& row : m.space)
    space.push_back(
        json{{"label", row.label}, {"support", row.support}, {"spec_point", row.spec_point}, {"match", row.match}});
  json covering = json::array();
  for (const auto& [i, k] : m.covering) covering.push_back(json::array({i, k}));
  json sections = json::array();
  for (const auto& row : m.sections)
    sections.push_back(json{{"complement", row.complement.to_string()},
                            {"open", json{{"complement", support_to_json(row.complement)}}},
                            {"sections", row.sections.name()},
                            {"pnil", row.pnil},
                            {"pnil_exhaustive", row.pnil_exhaustive},
                            {"reduced", row.reduced.name()},
                            {"expected", row.expected.name()},
                            {"match", row.match}});
  json stalks = json::array();
  for (const auto& row : m.stalks)
    stalks.push_back(json{{"label", row.label},
                          {"point", point_to_json(m.ring, row.point)},
                          {"stalk", row.stalk},
                          {"reduced_stalk", row.reduced_stalk},
                          {"expected", row.expected},
                          {"finite", row.finite ? json(row.finite->name()) : json()},
                          {"match", row.match}});
  const Ring& global = m.global_sections();
  return json{{"ring", ring_to_json(m.ring)},
              {"name", m.ring.name()},
              {"reduced_ring", m.reduced_ring.name()},
              {"bound", m.bound},
              {"truncated", m.truncated},
              {"ok", m.ok()},
              {"homeomorphic", m.homeomorphic()},
              {"fixed_point", m.fixed_point()},
              {"global_sections", json{{"name", global.name()}, {"ring", ring_to_json(global)}}},
              {"space", space},
              {"covering", covering},
              {"sections", sections},
              {"stalks", stalks},
              {"restrictions_checked", m.restrictions_checked},
              {"sheaf_conditions_checked", m.sheaf_conditions_checked},
              {"sheaf_exhaustive", m.sheaf_exhaustive},
              {"failures", strings(m.failures)}};
}

json report_to_json(const VerificationReport& r) {
  std::map<std::string, std::string> statements;
  for (const auto& [id, text] : invariant_catalog()) statements[id] = text;
  json checks = json::array();
  for (const auto& c : r.checks)
    checks.push_back(json{{"id", c.id},
                          {"invariant", statements.count(c.id) ? statements[c.id] : std::string()},
                          {"subject", c.subject},
                          {"status", to_string(c.status)},
                          {"witness", c.witness}});
  return json{{"suites", strings(r.suites)},
              {"ok", r.ok()},
              {"counts",
               json{{"pass", r.count(CheckStatus::pass)},
                    {"fail", r.count(CheckStatus::fail)},
                    {"indeterminate", r.count(CheckStatus::indeterminate)}}},
              {"checks", checks}};
}

}  // namespace ttg::io
