#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "dnaks/pipeline.hpp"
#include "dnaks/shortest_paths.hpp"

namespace dnaks {

enum class ObjectiveKind { PaperMaxMax, KSupplierMaxMin };

const char* to_string(ObjectiveKind kind);

struct OracleResult {
  ObjectiveKind kind = ObjectiveKind::KSupplierMaxMin;
  std::int64_t value = 0;
  std::vector<std::vector<int>> optimal_subsets;  // sorted, all achieving value
};

/// Exhaustive enumeration over all C(|F|, k) subsets. maxmin scores a
/// subset by max over clients of the distance to its nearest member;
/// maxmax uses the farthest member. Throws Error(SizeGuard) past 10^7
/// subsets.
OracleResult oracle_solve(const Instance& inst, const ShortestPaths& spm,
                          ObjectiveKind kind);

struct Verdict {
  bool pass = false;
  std::string detail;

  nlohmann::ordered_json to_json() const;
};

/// PASS iff the report's objective and subset set match the oracle's.
Verdict verify_report(const PipelineReport& report, const OracleResult& oracle);

struct StepTraceRow {
  int n = 0;
  std::uint64_t p1 = 0, p2 = 0, p3 = 0, p4 = 0, p5 = 0;
};

struct FitReport {
  bool pass = false;
  bool phase1_constant = false;       // every row records p1 == 7
  double linear_a = 0, linear_b = 0;  // p2+p3 ~ a*n + b
  double quad_c = 0, quad_d = 0;      // p4+p5 ~ c*n^2 + d
  double linear_residual_ratio = 0;
  double quadratic_residual_ratio = 0;
  std::string detail;
};

/// Least-squares fit of recorded step counts against the claimed growth
/// orders. PASS iff both residual ratios are below 10% and the leading
/// coefficients are positive. Throws Error(InsufficientData) with fewer
/// than three distinct n values.
FitReport check_step_bounds(const std::vector<StepTraceRow>& rows);

}  // namespace dnaks
