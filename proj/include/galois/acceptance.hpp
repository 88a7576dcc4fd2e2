#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "galois/oracle.hpp"

namespace galois {

struct AcceptanceConfig {
  std::uint64_t seed = 0;
  OracleConfig oracle;  // its seed is ignored; derived per run from `seed`
  int samples = 50;
};

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
  double budget_seconds = 0.0;  // 0: no runtime bound
  std::vector<std::string> warnings;
};

/// The eight acceptance criteria. Each is deterministic for a fixed config.
CriterionResult criterion_partition(const AcceptanceConfig& cfg);        // 1
CriterionResult criterion_round_trip(const AcceptanceConfig& cfg);       // 2
CriterionResult criterion_dimension_law(const AcceptanceConfig& cfg);    // 3
CriterionResult criterion_injectivity(const AcceptanceConfig& cfg);      // 4
CriterionResult criterion_disjointness(const AcceptanceConfig& cfg);     // 5
CriterionResult criterion_intermediate(const AcceptanceConfig& cfg);     // 6
CriterionResult criterion_negative_control(const AcceptanceConfig& cfg); // 7
CriterionResult criterion_catalog(const AcceptanceConfig& cfg);          // 8

std::vector<CriterionResult> run_acceptance(const AcceptanceConfig& cfg);

/// "PASS [1] name: detail" / "FAIL [1] ...".
std::string summary_line(const CriterionResult& r);

}  // namespace galois
