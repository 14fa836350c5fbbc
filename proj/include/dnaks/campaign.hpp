#pragma once

#include <cstdint>
#include <vector>

#include <json.hpp>

namespace dnaks {

struct CampaignParams {
  int count = 100;
  int n_min = 4;
  int n_max = 8;
  std::uint64_t seed = 1;
};

struct CampaignRow {
  int index = 0;
  std::uint64_t seed = 0;
  int n = 0;
  int k = 0;
  std::int64_t paper_objective = -1;
  std::int64_t oracle_maxmax = -1;
  std::int64_t corrected_objective = -1;
  std::int64_t oracle_maxmin = -1;
  bool pass = false;
};

struct CampaignSummary {
  CampaignParams params;
  std::vector<CampaignRow> rows;
  bool all_pass = true;

  nlohmann::ordered_json to_json() const;
};

/// gen + solve (both pipelines, both extraction variants) + verify against
/// the oracle, one row per instance.
CampaignSummary run_campaign(const CampaignParams& params);

}  // namespace dnaks
