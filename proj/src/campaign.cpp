#include "dnaks/campaign.hpp"

#include "dnaks/generator.hpp"
#include "dnaks/oracle.hpp"
#include "dnaks/pipeline.hpp"
#include "dnaks/rng.hpp"

namespace dnaks {

nlohmann::ordered_json CampaignSummary::to_json() const {
  nlohmann::ordered_json j;
  j["count"] = params.count;
  j["n_min"] = params.n_min;
  j["n_max"] = params.n_max;
  j["seed"] = params.seed;
  j["all_pass"] = all_pass;
  auto rows_json = nlohmann::ordered_json::array();
  for (const auto& row : rows) {
    nlohmann::ordered_json r;
    r["index"] = row.index;
    r["seed"] = row.seed;
    r["n"] = row.n;
    r["k"] = row.k;
    r["paper_objective"] = row.paper_objective;
    r["oracle_maxmax"] = row.oracle_maxmax;
    r["corrected_objective"] = row.corrected_objective;
    r["oracle_maxmin"] = row.oracle_maxmin;
    r["pass"] = row.pass;
    rows_json.push_back(std::move(r));
  }
  j["rows"] = std::move(rows_json);
  return j;
}

CampaignSummary run_campaign(const CampaignParams& params) {
  if (params.count < 0) throw Error(ErrorCode::BadArgument, "count must be >= 0");
  if (params.n_min < 2 || params.n_max < params.n_min)
    throw Error(ErrorCode::BadArgument, "need 2 <= n_min <= n_max");

  CampaignSummary summary;
  summary.params = params;

  Rng master(params.seed);
  for (int index = 0; index < params.count; ++index) {
    CampaignRow row;
    row.index = index;
    row.seed = master.next();
    row.n = params.n_min + static_cast<int>(master.below(
                               static_cast<std::uint64_t>(params.n_max - params.n_min) + 1));

    GenParams gen;
    gen.n = row.n;
    gen.seed = row.seed;
    const Instance inst = generate_instance(gen);
    row.k = inst.k;

    const auto spm = ShortestPaths::compute(inst.graph);
    const auto maxmax = oracle_solve(inst, spm, ObjectiveKind::PaperMaxMax);
    const auto maxmin = oracle_solve(inst, spm, ObjectiveKind::KSupplierMaxMin);
    row.oracle_maxmax = maxmax.value;
    row.oracle_maxmin = maxmin.value;

    PipelineOptions paper;
    paper.kind = PipelineKind::Paper;
    paper.extract = ExtractVariant::Both;
    const auto paper_report = run_pipeline(inst, paper);
    row.paper_objective = paper_report.objective;

    PipelineOptions corrected;
    corrected.kind = PipelineKind::Corrected;
    const auto corrected_report = run_pipeline(inst, corrected);
    row.corrected_objective = corrected_report.objective;

    row.pass = verify_report(paper_report, maxmax).pass &&
               verify_report(corrected_report, maxmin).pass;
    summary.all_pass = summary.all_pass && row.pass;
    summary.rows.push_back(row);
  }
  return summary;
}

}  // namespace dnaks
