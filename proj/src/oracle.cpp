#include "dnaks/oracle.hpp"

#include <algorithm>
#include <cmath>

#include "dnaks/error.hpp"

namespace dnaks {

const char* to_string(ObjectiveKind kind) {
  return kind == ObjectiveKind::PaperMaxMax ? "paper_maxmax" : "ksupplier_maxmin";
}

namespace {

constexpr std::uint64_t kSubsetGuard = 10000000;

std::uint64_t subset_count(std::size_t f, int k) {
  // C(f, k) with an early exit above the guard
  std::uint64_t result = 1;
  for (int i = 1; i <= k; ++i) {
    result = result * (f - static_cast<std::size_t>(k) + static_cast<std::size_t>(i)) /
             static_cast<std::uint64_t>(i);
    if (result > 16 * kSubsetGuard) return result;
  }
  return result;
}

}  // namespace

OracleResult oracle_solve(const Instance& inst, const ShortestPaths& spm,
                          ObjectiveKind kind) {
  const auto& facilities = inst.facilities;
  const int k = inst.k;
  if (subset_count(facilities.size(), k) > kSubsetGuard)
    throw Error(ErrorCode::SizeGuard, "subset enumeration exceeds 10^7 combinations");

  OracleResult out;
  out.kind = kind;
  std::int64_t best = -1;

  std::vector<int> pick(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) pick[static_cast<std::size_t>(i)] = i;
  const int f = static_cast<int>(facilities.size());

  while (true) {
    std::int64_t value = 0;
    for (int v : inst.clients) {
      std::int64_t client_value = kind == ObjectiveKind::KSupplierMaxMin
                                      ? std::numeric_limits<std::int64_t>::max()
                                      : 0;
      for (int idx : pick) {
        const std::int64_t d = spm.at(v, facilities[static_cast<std::size_t>(idx)]);
        client_value = kind == ObjectiveKind::KSupplierMaxMin ? std::min(client_value, d)
                                                              : std::max(client_value, d);
      }
      value = std::max(value, client_value);
    }

    if (best < 0 || value < best) {
      best = value;
      out.optimal_subsets.clear();
    }
    if (value == best) {
      std::vector<int> subset;
      subset.reserve(pick.size());
      for (int idx : pick) subset.push_back(facilities[static_cast<std::size_t>(idx)]);
      out.optimal_subsets.push_back(std::move(subset));
    }

    // next combination in lexicographic order
    int i = k - 1;
    while (i >= 0 && pick[static_cast<std::size_t>(i)] == f - k + i) --i;
    if (i < 0) break;
    ++pick[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j)
      pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
  }

  out.value = best;
  std::sort(out.optimal_subsets.begin(), out.optimal_subsets.end());
  return out;
}

nlohmann::ordered_json Verdict::to_json() const {
  nlohmann::ordered_json j;
  j["pass"] = pass;
  j["detail"] = detail;
  return j;
}

Verdict verify_report(const PipelineReport& report, const OracleResult& oracle) {
  Verdict v;
  if (report.objective != oracle.value) {
    v.pass = false;
    v.detail = "objective " + std::to_string(report.objective) + " != oracle " +
               std::to_string(oracle.value);
    return v;
  }
  if (report.subsets != oracle.optimal_subsets) {
    v.pass = false;
    v.detail = "optimal subset sets differ (" + std::to_string(report.subsets.size()) +
               " reported vs " + std::to_string(oracle.optimal_subsets.size()) + " expected)";
    return v;
  }
  v.pass = true;
  v.detail = "objective and optimal subsets match";
  return v;
}

namespace {

struct Fit {
  double slope = 0;     // coefficient of the basis term
  double intercept = 0;
  double residual_ratio = 0;
};

// Least squares for y ~ slope * basis + intercept.
Fit fit_model(const std::vector<double>& basis, const std::vector<double>& ys) {
  const double count = static_cast<double>(basis.size());
  double sb = 0, sbb = 0, sy = 0, sby = 0;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    sb += basis[i];
    sbb += basis[i] * basis[i];
    sy += ys[i];
    sby += basis[i] * ys[i];
  }
  const double det = sbb * count - sb * sb;
  Fit fit;
  if (std::abs(det) < 1e-12) throw Error(ErrorCode::InsufficientData, "degenerate fit");
  fit.slope = (sby * count - sb * sy) / det;
  fit.intercept = (sbb * sy - sb * sby) / det;

  double ss_res = 0, ss_tot = 0;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const double predicted = fit.slope * basis[i] + fit.intercept;
    ss_res += (ys[i] - predicted) * (ys[i] - predicted);
    ss_tot += ys[i] * ys[i];
  }
  fit.residual_ratio = ss_tot > 0 ? std::sqrt(ss_res / ss_tot) : 0;
  return fit;
}

}  // namespace

FitReport check_step_bounds(const std::vector<StepTraceRow>& rows) {
  std::vector<int> distinct;
  for (const auto& r : rows) distinct.push_back(r.n);
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  if (distinct.size() < 3)
    throw Error(ErrorCode::InsufficientData,
                "step-bound fit needs at least three distinct n values");

  std::vector<double> ns, squares, linear_y, quad_y;
  bool phase1_constant = true;
  for (const auto& r : rows) {
    ns.push_back(static_cast<double>(r.n));
    squares.push_back(static_cast<double>(r.n) * static_cast<double>(r.n));
    linear_y.push_back(static_cast<double>(r.p2 + r.p3));
    quad_y.push_back(static_cast<double>(r.p4 + r.p5));
    if (r.p1 != 7) phase1_constant = false;
  }

  const Fit linear = fit_model(ns, linear_y);
  const Fit quad = fit_model(squares, quad_y);

  FitReport report;
  report.phase1_constant = phase1_constant;
  report.linear_a = linear.slope;
  report.linear_b = linear.intercept;
  report.quad_c = quad.slope;
  report.quad_d = quad.intercept;
  report.linear_residual_ratio = linear.residual_ratio;
  report.quadratic_residual_ratio = quad.residual_ratio;
  report.pass = linear.slope > 0 && quad.slope > 0 && linear.residual_ratio < 0.10 &&
                quad.residual_ratio < 0.10;
  report.detail = "p2+p3 ~ " + std::to_string(linear.slope) + "*n + " +
                  std::to_string(linear.intercept) + " (residual " +
                  std::to_string(linear.residual_ratio) + "), p4+p5 ~ " +
                  std::to_string(quad.slope) + "*n^2 + " + std::to_string(quad.intercept) +
                  " (residual " + std::to_string(quad.residual_ratio) + ")";
  return report;
}

}  // namespace dnaks
