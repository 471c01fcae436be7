#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ttg/ring.hpp"

namespace ttg {

enum class CheckStatus { pass, fail, indeterminate };

std::string to_string(CheckStatus s);

struct CheckResult {
  std::string id;         // invariant id from invariant_catalog()
  std::string subject;    // ring, map or open the check ran on
  CheckStatus status = CheckStatus::pass;
  std::string witness;    // counts on success, the first counterexample on failure
};

struct VerificationReport {
  std::vector<std::string> suites;
  std::vector<CheckResult> checks;

  bool ok() const;
  std::size_t count(CheckStatus s) const;
};

struct VerifyOptions {
  std::optional<Ring> ring;  // run on this ring instead of the default testbeds
  unsigned bound = 3;
  std::size_t budget = 200;
  std::uint64_t seed = 0;
};

/// (id, statement) for every invariant a suite can check.
const std::vector<std::pair<std::string, std::string>>& invariant_catalog();

/// thomason, topology, geometric, presheaf, endo, reconstruct.
const std::vector<std::string>& suite_names();

/// Runs one suite, or every suite for "all". Throws InvalidArgument for an
/// unknown suite name.
VerificationReport run_suite(const std::string& suite, const VerifyOptions& options = {});

}  // namespace ttg
