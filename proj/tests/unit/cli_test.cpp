#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "ttg/cli.hpp"
#include "ttg/io.hpp"

using ttg::io::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
  json report() const { return ttg::io::parse(out, "report"); }
};

Run ttg_run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = ttg::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(TTG_DATA_DIR) + "/" + name; }

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string temp(const std::string& name) { return (std::filesystem::temp_directory_path() / name).string(); }

}  // namespace

TEST_CASE("verify thomason on Z") {
  const Run r = ttg_run({"verify", "--suite", "thomason", "--ring", "Z", "--bound", "7"});
  CHECK(r.code == 0);
  const json j = r.report();
  CHECK(j["ok"] == true);
  CHECK(j["counts"]["fail"] == 0);
  bool phi_psi = false, psi_phi = false;
  for (const auto& c : j["checks"]) {
    CHECK(c["status"] == "pass");
    phi_psi |= c["id"] == "support.phi-psi";
    psi_phi |= c["id"] == "support.psi-phi";
  }
  CHECK(phi_psi);
  CHECK(psi_phi);
}

TEST_CASE("spc of Z/12 is two points without edges") {
  const std::string dot = temp("ttg_cli_z12.dot");
  const Run r = ttg_run({"spc", "--ring", data("Z12.json"), "--dot", dot});
  CHECK(r.code == 0);
  CHECK(slurp(dot) == "digraph spc {\n  p0 [label=\"(2)\"];\n  p1 [label=\"(3)\"];\n}\n");
  const json j = r.report();
  CHECK(j["points"].size() == 2);
  CHECK(j["covering"].empty());
  CHECK(j["checks"][0]["status"] == "pass");
}

TEST_CASE("reconstruct Z/12") {
  const Run r = ttg_run({"reconstruct", "--ring", data("Z12.json")});
  CHECK(r.code == 0);
  const json j = r.report();
  CHECK(j["global_sections"]["name"] == "Z/(6)");
  CHECK(j["space"].size() == 2);
  CHECK(j["stalks"][0]["finite"] == "Z/(2)");
  CHECK(j["stalks"][1]["finite"] == "Z/(3)");
  CHECK(j["fixed_point"] == false);
}

TEST_CASE("morphism checks") {
  const Run both = ttg_run({"morphism", "--map", data("f_omega.json"), "--map", data("f_omega2.json"), "--check", "equal"});
  CHECK(both.code == 0);
  CHECK(both.report()["equal"] == false);
  const Run same = ttg_run({"morphism", "--map", data("f_omega.json"), "--map", data("f_omega.json"), "--check", "equal"});
  CHECK(same.code == 0);
  CHECK(same.report()["equal"] == true);
  for (const char* check : {"geometric", "spc"}) {
    const Run r = ttg_run({"morphism", "--map", data("f_omega.json"), "--check", check});
    CHECK(r.code == 0);
  }
  const Run loc = ttg_run({"morphism", "--map",
                           R"({"source":{"kind":"Z"},"target":{"kind":"localization","base":{"kind":"Z"},"f":"2"}})",
                           "--check", "spc", "--bound", "5"});
  CHECK(loc.code == 0);
  CHECK(loc.report()["spc_map"].size() == 3);
}

TEST_CASE("sections over Spec Z - {(2)}") {
  const Run r = ttg_run({"sections", "--ring", "Z", "--open",
                         R"({"complement":{"components":[{"whole":false,"points":["2"]}]}})"});
  CHECK(r.code == 0);
  const json j = r.report();
  CHECK(j["section_ring"]["name"] == "Z[1/2]");
  CHECK(j["witness"] == "2");
  const Run with = ttg_run({"sections", "--ring", "Z", "--open", R"({"complement":{"components":[{"points":["2"]}]}})",
                            "--complex", data("koszul6.json")});
  CHECK(with.code == 0);
}

TEST_CASE("support and homology") {
  const Run s = ttg_run({"support", "--complex", data("koszul6.json")});
  CHECK(s.code == 0);
  CHECK(s.report()["text"] == "{(2), (3)}");
  const Run h = ttg_run({"homology", "--complex", data("half.json")});
  CHECK(h.code == 0);
  // -3/2 is not a unit of Z[1/2]: H_0 = Z[1/2]/(3)
  CHECK(h.report()["acyclic"] == false);
  CHECK(h.report()["homology"][0]["module"]["components"][0]["divisors"] == json::array({"3"}));
  CHECK(h.report()["homology"][1]["module"]["text"] == "0");
}

TEST_CASE("exit codes") {
  CHECK(ttg_run({}).code == 2);
  CHECK(ttg_run({"frobnicate"}).code == 2);
  CHECK(ttg_run({"verify", "--suite", "nope"}).code == 2);
  CHECK(ttg_run({"spc", "--ring", "Q"}).code == 2);
  CHECK(ttg_run({"spc"}).code == 2);
  CHECK(ttg_run({"spc", "--ring", "Z", "--bound", "0"}).code == 2);
  CHECK(ttg_run({"homology", "--complex", "{not json"}).code == 2);
  CHECK(ttg_run({"support", "--complex", data("missing.json")}).code == 2);
  CHECK(ttg_run({"homology", "--complex",
                 R"({"ring":{"kind":"Z"},"lo":0,"hi":2,"ranks":[1,1,1],"differentials":[[["2"]],[["3"]]]})"})
            .code == 2);
  CHECK(ttg_run({"morphism", "--map", R"({"source":{"kind":"quotient","base":{"kind":"Z"},"d":"4"},
                                        "target":{"kind":"quotient","base":{"kind":"Z"},"d":"3"}})"})
            .code == 2);
  // the open excludes (11), which lies beyond the enumeration bound
  const Run beyond = ttg_run({"sections", "--ring", "Z", "--bound", "3", "--open",
                              R"({"complement":{"components":[{"points":["11"]}]}})"});
  CHECK(beyond.code == 3);
  CHECK(beyond.report()["exit_code"] == 3);
  // factorization of degree 13 polynomials exceeds the default bound
  CHECK(ttg_run({"spc", "--ring", "F2[t]", "--bound", "13"}).code == 3);
}

TEST_CASE("a report is written even on errors") {
  const Run r = ttg_run({"spc", "--ring", "Q"});
  const json j = r.report();
  CHECK(j["command"] == "spc");
  CHECK(j["exit_code"] == 2);
  CHECK(j["error"].is_string());
  const std::string path = temp("ttg_cli_error.json");
  std::filesystem::remove(path);
  CHECK(ttg_run({"reconstruct", "--ring", "{", "--out", path}).code == 2);
  CHECK(ttg::io::load(path)["exit_code"] == 2);
  const Run bad = ttg_run({"verify", "--bogus"});
  CHECK(bad.code == 2);
  CHECK(bad.report()["exit_code"] == 2);
}

TEST_CASE("outputs are byte identical across runs") {
  const std::vector<std::vector<std::string>> commands{
      {"verify", "--suite", "all"},
      {"verify", "--suite", "endo", "--ring", "Z36", "--bound", "2"},
      {"spc", "--ring", "Z", "--bound", "7"},
      {"reconstruct", "--ring", "Z", "--bound", "7"},
      {"sections", "--ring", "Z12", "--open", R"({"complement":{"components":[{"points":["3"]}]}})"},
      {"morphism", "--map", data("f_omega.json")},
  };
  for (const char* seed : {"0", "17"}) {
    setenv("TTG_SEED", seed, 1);
    for (const auto& c : commands) {
      const Run a = ttg_run(c);
      const Run b = ttg_run(c);
      CHECK_MESSAGE(a.code == 0, c[0]);
      CHECK_MESSAGE(a.out == b.out, c[0]);
    }
  }
  setenv("TTG_SEED", "x", 1);
  CHECK(ttg_run({"verify", "--suite", "endo"}).code == 2);
  unsetenv("TTG_SEED");
  const std::string p1 = temp("ttg_cli_a.json"), p2 = temp("ttg_cli_b.json");
  CHECK(ttg_run({"reconstruct", "--ring", data("Z12.json"), "--out", p1}).code == 0);
  CHECK(ttg_run({"reconstruct", "--ring", data("Z12.json"), "--out", p2}).code == 0);
  CHECK(slurp(p1) == slurp(p2));
  CHECK(!slurp(p1).empty());
}
