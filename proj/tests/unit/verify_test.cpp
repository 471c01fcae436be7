#include <set>

#include "doctest.h"
#include "fixtures.hpp"
#include "ttg/error.hpp"
#include "ttg/verify.hpp"

using namespace ttg;

namespace {

std::string first_problem(const VerificationReport& r) {
  for (const auto& c : r.checks)
    if (c.status != CheckStatus::pass) return c.id + " on " + c.subject + ": " + to_string(c.status) + " " + c.witness;
  return "";
}

}  // namespace

TEST_CASE("every suite passes on its default testbeds") {
  std::set<std::string> seen;
  for (const auto& suite : suite_names()) {
    const VerificationReport r = run_suite(suite);
    CHECK_MESSAGE(r.ok(), suite, ": ", first_problem(r));
    CHECK(r.count(CheckStatus::pass) == r.checks.size());
    for (const auto& c : r.checks) seen.insert(c.id);
  }
  for (const auto& [id, statement] : invariant_catalog()) CHECK_MESSAGE(seen.count(id) == 1, id);
  for (const auto& id : seen) {
    bool known = false;
    for (const auto& entry : invariant_catalog()) known = known || entry.first == id;
    CHECK_MESSAGE(known, id);
  }
}

TEST_CASE("suites on a chosen ring") {
  VerifyOptions o;
  o.ring = fixtures::Z();
  o.bound = 7;
  const VerificationReport t = run_suite("thomason", o);
  CHECK_MESSAGE(t.ok(), first_problem(t));
  o.ring = fixtures::Zn(36);
  o.bound = 2;
  for (const auto& s : suite_names()) {
    const VerificationReport r = run_suite(s, o);
    CHECK_MESSAGE(r.ok(), s, ": ", first_problem(r));
  }
}

TEST_CASE("reports are deterministic for a fixed seed") {
  VerifyOptions o;
  o.seed = 11;
  const auto a = run_suite("thomason", o), b = run_suite("thomason", o);
  REQUIRE(a.checks.size() == b.checks.size());
  for (std::size_t i = 0; i < a.checks.size(); ++i) CHECK(a.checks[i].witness == b.checks[i].witness);
  CHECK_THROWS_AS(run_suite("nonsense"), InvalidArgument);
}
