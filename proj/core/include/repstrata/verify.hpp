#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "repstrata/invariants.hpp"

namespace repstrata {

struct CriterionResult {
  std::string id;
  std::string name;
  bool pass = false;
  std::string details;
};

struct VerifyOptions {
  /// Substring filter on criterion ids; empty runs everything.
  std::string only;
  /// Parallel fan-out across criteria (1 = sequential).
  int jobs = 1;
};

/// Ids and display names of all verification criteria, in order.
std::vector<std::pair<std::string, std::string>> criterion_catalog();

/// Per-criterion wall-clock budget in seconds (0 = unconstrained).
double criterion_time_budget(const std::string& id);

/// Runs the verification suite.  Results come back in catalog order; the
/// determinism criterion re-runs the others and compares manifests.
std::vector<CriterionResult> run_verification(const VerifyOptions& opts = {});

/// Canonical JSON manifest of a result set.
std::string manifest_json(const std::vector<CriterionResult>& results);

bool all_passed(const std::vector<CriterionResult>& results);

/// The single rational c with reference_i = c * ours_i for every entry,
/// when it exists.  Used to pin bracket-table normalizations.
std::optional<Rational> proportionality_constant(
    const std::vector<Poly>& ours, const std::vector<Poly>& reference);

/// The reference normalization of the reduced planar (cone) bracket table:
/// {x1,x2} = 2 rho, {x1,rho} = 2 x2, {x2,rho} = -2 x1, over the generator
/// variables {x1,x2,rho}.
std::vector<Poly> cone_reference_table(const VarSetPtr& gen_vars);

}  // namespace repstrata
