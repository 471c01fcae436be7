#include "ttg/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <functional>
#include <ostream>

#include "CLI11.hpp"
#include "ttg/dot.hpp"
#include "ttg/io.hpp"

namespace ttg::cli {

namespace {

using io::json;

struct Options {
  std::string ring;
  std::string complex;
  std::string open;
  std::vector<std::string> maps;
  std::string check;
  std::string dot;
  std::string out;
  std::string suite = "all";
  unsigned bound = 3;
  std::size_t budget = 200;
};

struct Outcome {
  bool ok;
  std::string witness;
};

class Checks {
 public:
  void add(const std::string& id, CheckStatus s, const std::string& witness) {
    list_.push_back(json{{"id", id}, {"status", to_string(s)}, {"witness", witness}});
    if (s == CheckStatus::fail) failed_ = true;
    if (s == CheckStatus::indeterminate) indeterminate_ = true;
  }

  void run(const std::string& id, const std::function<Outcome()>& f) {
    try {
      const Outcome o = f();
      add(id, o.ok ? CheckStatus::pass : CheckStatus::fail, o.witness);
    } catch (const BoundExceeded& e) {
      add(id, CheckStatus::indeterminate, e.what());
    } catch (const std::exception& e) {
      add(id, CheckStatus::fail, e.what());
    }
  }

  const json& list() const { return list_; }
  int exit_code() const { return failed_ ? check_failed : indeterminate_ ? bound_exceeded : ok; }

 private:
  json list_ = json::array();
  bool failed_ = false;
  bool indeterminate_ = false;
};

/// Inline JSON when the value starts with '{', otherwise a file path.
json json_argument(const std::string& value, const std::string& flag) {
  if (value.empty()) throw io::ParseError(flag + " is required");
  if (value.front() == '{') return io::parse(value, flag);
  return io::load(value);
}

Ring required_ring(const Options& o) {
  if (o.ring.empty()) throw io::ParseError("--ring is required");
  return io::ring_from_argument(o.ring);
}

std::uint64_t seed_from_env() {
  const char* s = std::getenv("TTG_SEED");
  if (s == nullptr || *s == '\0') return 0;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(s, &end, 10);
  if (*end != '\0') throw io::ParseError(std::string("TTG_SEED is not an integer: ") + s);
  return v;
}

json labels(const Ring& r, const std::vector<PointDescriptor>& xs) {
  json a = json::array();
  for (const auto& x : xs) a.push_back(point_label(r, x));
  return a;
}

int cmd_support(const Options& o, json& report) {
  const Complex p = io::complex_from_json(json_argument(o.complex, "--complex"));
  const Support y = supph(p);
  const PointEnumeration e = enumerate_points(p.ring(), o.bound);
  report["ring"] = p.ring().name();
  report["supph"] = io::support_to_json(y);
  report["text"] = y.to_string();
  report["points"] = labels(p.ring(), y.points_in(e));
  report["complete"] = e.complete;
  return ok;
}

int cmd_homology(const Options& o, json& report) {
  const Complex p = io::complex_from_json(json_argument(o.complex, "--complex"));
  json hs = json::array();
  if (!p.is_zero())
    for (int n = p.lo(); n <= p.hi(); ++n)
      hs.push_back(json{{"degree", n}, {"module", io::module_to_json(p.ring(), homology(p, n))}});
  report["ring"] = p.ring().name();
  report["homology"] = hs;
  report["acyclic"] = is_acyclic(p);
  return ok;
}

int cmd_spc(const Options& o, json& report) {
  const SpectrumModel s(required_ring(o), o.bound);
  const json dump = io::spectrum_to_json(s);
  for (const auto& [k, v] : dump.items()) report[k] = v;
  Checks checks;
  checks.run("spectrum.topology", [&] {
    const TopologyReport t = check_topology_axioms(s);
    if (!t.ok()) return Outcome{false, t.failures.empty() ? "E is not bijective" : t.failures.front()};
    return Outcome{true, std::to_string(t.pairs_checked) + " pairs, " + std::to_string(t.opens_checked) + " opens"};
  });
  if (!o.dot.empty()) {
    std::ofstream f(o.dot, std::ios::binary);
    if (!f) throw io::ParseError("cannot write " + o.dot);
    f << emit_dot(s);
    report["dot"] = o.dot;
  }
  report["checks"] = checks.list();
  return checks.exit_code();
}

int cmd_sections(const Options& o, json& report) {
  const Ring r = required_ring(o);
  const OpenSet v = io::open_from_json(r, json_argument(o.open, "--open"));
  const RingMap loc = section_map(v);
  std::vector<Complex> objects;
  if (!o.complex.empty()) {
    objects.push_back(io::complex_from_json(json_argument(o.complex, "--complex")));
    if (!(objects.front().ring() == r)) throw io::ParseError("--complex is not over " + r.name());
  } else {
    objects.push_back(unit(r));
    for (const auto& [label, a] : canonical_witnesses(r, std::min(o.bound, 2u))) {
      if (objects.size() >= 6) break;
      objects.push_back(a);
    }
  }
  report["ring"] = r.name();
  report["open"] = v.to_string();
  report["complement"] = io::support_to_json(v.complement());
  report["witness"] = io::element_to_json(r, v.witness());
  report["section_ring"] = json{{"name", loc.target().name()}, {"ring", io::ring_to_json(loc.target())}};
  report["J"] = io::support_to_json(J_of_open(v));

  Checks checks;
  checks.run("presheaf.restriction", [&] {
    return Outcome{restriction(OpenSet::whole(r), v) == loc, "R -> R_V"};
  });
  checks.run("presheaf.J-monotone", [&] {
    const PointEnumeration e = enumerate_points(r, o.bound);
    const Support j = J_of_open(v);
    for (std::size_t c = 0; c < r.size(); ++c)
      for (const auto& q : j.component(c).points)
        if (std::find(e.points.begin(), e.points.end(), PointDescriptor{c, q}) == e.points.end())
          throw BoundExceeded("a point outside V lies beyond --bound");
    return Outcome{J_by_points(v, o.bound) == j, "J(V) generated by the points outside V"};
  });
  checks.run("presheaf.localize-support", [&] {
    for (const auto& p : objects)
      if (!(supph(localize_object(p, v)) == preimage_support(loc, supph(p))))
        return Outcome{false, "supph(q_V P) differs for " + supph(p).to_string()};
    return Outcome{true, std::to_string(objects.size()) + " objects"};
  });
  checks.run("presheaf.clear", [&] {
    for (const auto& p : objects) {
      const Complex pv = localize_object(p, v);
      if (!verify_cleared(loc, pv, clear_denominators(loc, pv))) return Outcome{false, "no verified inverse"};
    }
    return Outcome{true, std::to_string(objects.size()) + " objects"};
  });
  checks.run("presheaf.hom", [&] {
    std::size_t pairs = 0;
    const std::size_t n = std::min<std::size_t>(objects.size(), 3);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const FractionReport fr = fraction_spotcheck(objects[i], objects[j], v, std::min<std::size_t>(o.budget, 16),
                                                     HomLimits{400});
        if (!fr.ok()) return Outcome{false, fr.notes.empty() ? "fraction check failed" : fr.notes.front()};
        ++pairs;
      }
    return Outcome{true, std::to_string(pairs) + " pairs"};
  });
  report["checks"] = checks.list();
  return checks.exit_code();
}

int cmd_morphism(const Options& o, json& report) {
  if (o.maps.empty() || o.maps.size() > 2) throw io::ParseError("--map takes one or two ring maps");
  const RingMap f = io::ring_map_from_json(json_argument(o.maps[0], "--map"));
  const RingMap g = o.maps.size() == 2 ? io::ring_map_from_json(json_argument(o.maps[1], "--map")) : f;
  std::vector<std::string> which;
  if (o.check.empty()) {
    which = {"geometric", "spc"};
    if (o.maps.size() == 2) which.push_back("equal");
  } else {
    which = {o.check};
  }
  report["map"] = f.to_string();
  if (o.maps.size() == 2) report["second"] = g.to_string();

  Checks checks;
  for (const auto& w : which) {
    if (w == "geometric") {
      checks.run("geometric.pullback-support", [&] {
        std::size_t n = 0;
        for (const auto& [label, a] : canonical_witnesses(f.source(), std::min(o.bound, 3u))) {
          if (!(supph(pullback(f, a)) == preimage_support(f, supph(a))))
            return Outcome{false, "support formula fails for " + label};
          ++n;
        }
        return Outcome{true, std::to_string(n) + " complexes"};
      });
      checks.run("geometric.meet-dense", [&] {
        auto family = all_supports(f.source(), enumerate_points(f.source(), std::min(o.bound, 3u)));
        if (family.size() > 40) family.resize(40, Support(f.source()));
        const GeometricReport rep = verify_geometric(f, family);
        if (!rep.ok()) return Outcome{false, rep.failures.empty() ? "not dense" : rep.failures.front()};
        return Outcome{true, std::to_string(rep.checks.size()) + " identities"};
      });
    } else if (w == "spc") {
      json images = json::array();
      checks.run("geometric.diagram", [&] {
        for (const auto& y : enumerate_points(f.target(), o.bound).points) {
          const SpectrumPoint x = spc_map(f, E_map(f.target(), y));
          const PointDescriptor c = contraction(f, y);
          images.push_back(json{{"point", point_label(f.target(), y)}, {"image", point_label(f.source(), x.descriptor)}});
          if (!(x.support == E_map(f.source(), c).support))
            return Outcome{false, "spc_map differs from contraction at " + point_label(f.target(), y)};
        }
        return Outcome{true, std::to_string(images.size()) + " points"};
      });
      report["spc_map"] = images;
    } else if (w == "equal") {
      const bool syntactic = f == g;
      const bool derived = maps_equal_via_derived(f, g);
      report["equal"] = derived;
      checks.run("geometric.faithful", [&] {
        return Outcome{derived == syntactic, derived ? "derived functors agree" : "derived functors differ"};
      });
    } else {
      throw io::ParseError("unknown --check \"" + w + "\"");
    }
  }
  report["checks"] = checks.list();
  return checks.exit_code();
}

int cmd_reconstruct(const Options& o, json& report) {
  const RingedSpaceModel m = reconstruct_ringed_space(required_ring(o), o.bound);
  const json dump = io::reconstruction_to_json(m);
  for (const auto& [k, v] : dump.items()) report[k] = v;
  Checks checks;
  checks.run("reconstruct.space", [&] { return Outcome{m.homeomorphic(), "Spc against Spec(R_red)"}; });
  checks.run("reconstruct.sections", [&] {
    for (const auto& row : m.sections)
      if (!row.match) return Outcome{false, "sections differ over " + row.complement.to_string()};
    return Outcome{true, std::to_string(m.sections.size()) + " basic opens"};
  });
  checks.run("reconstruct.stalks", [&] {
    for (const auto& row : m.stalks)
      if (!row.match) return Outcome{false, "stalk differs at " + row.label};
    return Outcome{true, std::to_string(m.stalks.size()) + " points"};
  });
  checks.run("reconstruct.sheaf", [&] {
    if (!m.ok()) return Outcome{false, m.failures.front()};
    return Outcome{true, std::to_string(m.restrictions_checked) + " restrictions, " +
                             std::to_string(m.sheaf_conditions_checked) + " gluings"};
  });
  report["checks"] = checks.list();
  return checks.exit_code();
}

int cmd_verify(const Options& o, json& report) {
  VerifyOptions v;
  if (!o.ring.empty()) v.ring = io::ring_from_argument(o.ring);
  v.bound = o.bound;
  v.budget = o.budget;
  v.seed = seed_from_env();
  const VerificationReport r = run_suite(o.suite, v);
  const json dump = io::report_to_json(r);
  for (const auto& [k, val] : dump.items()) report[k] = val;
  if (r.count(CheckStatus::fail) > 0) return check_failed;
  if (r.count(CheckStatus::indeterminate) > 0) return bound_exceeded;
  return ok;
}

int dispatch(const std::string& command, const Options& o, json& report) {
  if (command == "support") return cmd_support(o, report);
  if (command == "homology") return cmd_homology(o, report);
  if (command == "spc") return cmd_spc(o, report);
  if (command == "sections") return cmd_sections(o, report);
  if (command == "morphism") return cmd_morphism(o, report);
  if (command == "reconstruct") return cmd_reconstruct(o, report);
  if (command == "verify") return cmd_verify(o, report);
  throw io::ParseError("unknown command " + command);
}

int write_report(const json& report, const std::string& path, std::ostream& out, std::ostream& err) {
  const std::string text = report.dump(2) + "\n";
  if (path.empty()) {
    out << text;
    return ok;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f || !(f << text)) {
    err << "ttg: cannot write " << path << "\n";
    return parse_error;
  }
  return ok;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Tensor triangular geometry of perfect complexes over small commutative rings", "ttg"};
  app.require_subcommand(1, 1);

  auto common = [&](CLI::App* c) {
    c->add_option("--bound", o.bound, "enumeration bound for infinite spectra")->check(CLI::PositiveNumber);
    c->add_option("--budget", o.budget, "sampling budget")->check(CLI::PositiveNumber);
    c->add_option("--out", o.out, "write the JSON report here instead of stdout");
  };
  auto ring = [&](CLI::App* c) { c->add_option("--ring", o.ring, "ring descriptor file, inline JSON or name (Z, Z12, F2[t])"); };
  auto complex = [&](CLI::App* c) { c->add_option("--complex", o.complex, "complex file or inline JSON"); };

  CLI::App* support = app.add_subcommand("support", "homological support of a complex");
  complex(support);
  ring(support);
  common(support);
  CLI::App* hom = app.add_subcommand("homology", "homology modules of a complex");
  complex(hom);
  ring(hom);
  common(hom);
  CLI::App* spc = app.add_subcommand("spc", "spectrum of D^perf(R) with its topology");
  ring(spc);
  spc->add_option("--dot", o.dot, "write the specialization graph as DOT");
  common(spc);
  CLI::App* sections = app.add_subcommand("sections", "localized category over a basic open");
  ring(sections);
  complex(sections);
  sections->add_option("--open", o.open, "open set {\"complement\": support}, inline or file");
  common(sections);
  CLI::App* morphism = app.add_subcommand("morphism", "geometric checks for a ring map");
  morphism->add_option("--map", o.maps, "ring map file or inline JSON (twice for --check equal)");
  morphism->add_option("--check", o.check, "geometric, spc or equal")
      ->check(CLI::IsMember({"geometric", "spc", "equal"}));
  common(morphism);
  CLI::App* reconstruct = app.add_subcommand("reconstruct", "ringed space rebuilt from D^perf(R)");
  ring(reconstruct);
  common(reconstruct);
  CLI::App* verify = app.add_subcommand("verify", "run verification suites");
  ring(verify);
  verify->add_option("--suite", o.suite, "suite to run")
      ->check(CLI::IsMember({"thomason", "topology", "geometric", "presheaf", "endo", "reconstruct", "all"}));
  common(verify);

  std::vector<const char*> argv{"ttg"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "ttg: " << e.what() << "\n";
    json report{{"command", nullptr}, {"error", e.what()}, {"exit_code", static_cast<int>(parse_error)}};
    write_report(report, o.out, out, err);
    return parse_error;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  json report{{"command", command}};
  int code = ok;
  try {
    code = dispatch(command, o, report);
  } catch (const BoundExceeded& e) {
    report["error"] = e.what();
    code = bound_exceeded;
  } catch (const Error& e) {
    report["error"] = e.what();
    code = parse_error;
  } catch (const json::exception& e) {
    report["error"] = e.what();
    code = parse_error;
  } catch (const std::exception& e) {
    report["error"] = e.what();
    code = check_failed;
  }
  if (report.contains("error")) err << "ttg: " << report["error"].get<std::string>() << "\n";
  report["exit_code"] = code;
  const int written = write_report(report, o.out, out, err);
  return written != ok ? written : code;
}

}  // namespace ttg::cli
