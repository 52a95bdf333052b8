#pragma once

// The acceptance criteria, shared by `fatpoints verify` and the ctest binary.

#include <string>
#include <vector>

#include "fatpoints/cli/report.hpp"

namespace fatpoints::cli {

struct CriterionResult {
  std::string id;  // "AC1" ... "AC12"
  std::string title;
  bool pass = false;
  double seconds = 0;
  double budget_seconds = 0;
  std::string detail;
};

const std::vector<std::string>& acceptance_ids();

/// Runs the named criteria in order. Accepts "all", "AC7" or "7".
/// A criterion passes only when all its checks hold within its time budget.
std::vector<CriterionResult> run_acceptance(const std::vector<std::string>& ids, const RunConfig& cfg);

/// Normalizes "7" / "ac7" / "AC7"; throws InvalidInput for unknown ids.
std::string normalize_criterion_id(const std::string& id);

nlohmann::json to_json(const CriterionResult& r);

}  // namespace fatpoints::cli
