// dnaks command-line front end. Talks to the core exclusively through the
// C API in dnaks/dnaks.h.

#include <cinttypes>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "dnaks/dnaks.h"

namespace {

// Exit codes: 0 ok, 1 internal, 2 usage, 3 io, 4 parse, 5 validation,
// 6 strand explosion, 7 no solution, 8 size guard, 10 campaign failures.
int exit_code_of(dnaks_status status) {
  switch (status) {
    case DNAKS_OK: return 0;
    case DNAKS_ERR_BAD_ARGUMENT: return 2;
    case DNAKS_ERR_IO: return 3;
    case DNAKS_ERR_PARSE: return 4;
    case DNAKS_ERR_VALIDATION: return 5;
    case DNAKS_ERR_STRAND_EXPLOSION: return 6;
    case DNAKS_ERR_NO_SOLUTION: return 7;
    case DNAKS_ERR_SIZE_GUARD: return 8;
    case DNAKS_ERR_NONTERMINATING: return 6;
    case DNAKS_ERR_INTERNAL: return 1;
  }
  return 1;
}

int fail(dnaks_status status) {
  std::fprintf(stderr, "error: %s\n", dnaks_last_error());
  return exit_code_of(status);
}

struct OwnedString {
  char* value = nullptr;
  ~OwnedString() { dnaks_string_free(value); }
};

int run_solve(const std::string& instance_path, const std::string& pipeline,
              const std::string& phase2, const std::string& extract,
              const std::string& trace_path, std::uint64_t max_strands) {
  dnaks_instance* instance = nullptr;
  dnaks_status status = dnaks_instance_from_file(instance_path.c_str(), &instance);
  if (status != DNAKS_OK) return fail(status);

  dnaks_solve_options options;
  dnaks_solve_options_init(&options);
  options.pipeline = pipeline == "paper"       ? DNAKS_PIPELINE_PAPER
                     : pipeline == "corrected" ? DNAKS_PIPELINE_CORRECTED
                                               : DNAKS_PIPELINE_BOTH;
  options.phase2_mode =
      phase2 == "paper_literal" ? DNAKS_PHASE2_PAPER_LITERAL : DNAKS_PHASE2_CORRECTED;
  options.extract = extract == "selection" ? DNAKS_EXTRACT_SELECTION
                    : extract == "xsearch" ? DNAKS_EXTRACT_XSEARCH
                                           : DNAKS_EXTRACT_BOTH;
  options.trace_path = trace_path.empty() ? nullptr : trace_path.c_str();
  options.max_strands = max_strands;

  OwnedString report;
  status = dnaks_solve(instance, &options, &report.value);
  dnaks_instance_free(instance);
  if (status != DNAKS_OK) return fail(status);
  std::fputs(report.value, stdout);
  return 0;
}

int run_gen(int n, double density, int max_weight, int count, std::uint64_t seed,
            const std::string& out_dir) {
  for (int i = 0; i < count; ++i) {
    OwnedString json;
    const dnaks_status status = dnaks_generate_instance(
        static_cast<uint32_t>(n), density, static_cast<uint32_t>(max_weight),
        seed + static_cast<std::uint64_t>(i), &json.value);
    if (status != DNAKS_OK) return fail(status);

    const std::string path = out_dir + "/inst_" + std::to_string(seed) + "_" +
                             std::to_string(i) + ".json";
    std::ofstream out(path, std::ios::trunc | std::ios::binary);
    if (!out) {
      std::fprintf(stderr, "error: cannot write '%s'\n", path.c_str());
      return 3;
    }
    out << json.value;
    std::printf("%s\n", path.c_str());
  }
  return 0;
}

int run_campaign(int count, int n_min, int n_max, std::uint64_t seed) {
  OwnedString summary_json;
  const dnaks_status status =
      dnaks_campaign(static_cast<uint32_t>(count), static_cast<uint32_t>(n_min),
                     static_cast<uint32_t>(n_max), seed, &summary_json.value);
  if (status != DNAKS_OK) return fail(status);

  const auto summary = nlohmann::json::parse(summary_json.value);
  std::printf("%5s  %20s  %3s  %3s  %7s  %7s  %9s  %9s  %s\n", "idx", "seed", "n", "k",
              "paper", "maxmax", "corrected", "maxmin", "verdict");
  for (const auto& row : summary["rows"]) {
    std::printf("%5d  %20" PRIu64 "  %3d  %3d  %7" PRId64 "  %7" PRId64 "  %9" PRId64
                "  %9" PRId64 "  %s\n",
                row["index"].get<int>(), row["seed"].get<std::uint64_t>(),
                row["n"].get<int>(), row["k"].get<int>(),
                row["paper_objective"].get<std::int64_t>(),
                row["oracle_maxmax"].get<std::int64_t>(),
                row["corrected_objective"].get<std::int64_t>(),
                row["oracle_maxmin"].get<std::int64_t>(),
                row["pass"].get<bool>() ? "PASS" : "FAIL");
  }
  const bool all_pass = summary["all_pass"].get<bool>();
  std::printf("campaign: %zu instances, %s\n", summary["rows"].size(),
              all_pass ? "all PASS" : "FAILURES present");
  return all_pass ? 0 : 10;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Test-tube model simulator and DNA k-supplier solver"};
  app.require_subcommand(1);

  // solve
  std::string instance_path, trace_path;
  std::string pipeline = "both", phase2 = "corrected", extract = "both";
  std::uint64_t max_strands = 0;
  auto* solve = app.add_subcommand("solve", "solve an instance and print the report JSON");
  solve->add_option("--instance", instance_path, "instance JSON file")->required();
  solve->add_option("--pipeline", pipeline, "paper | corrected | both")
      ->check(CLI::IsMember({"paper", "corrected", "both"}));
  solve->add_option("--phase2-mode", phase2, "corrected | paper_literal")
      ->check(CLI::IsMember({"corrected", "paper_literal"}));
  solve->add_option("--extract", extract, "selection | xsearch | both")
      ->check(CLI::IsMember({"selection", "xsearch", "both"}));
  solve->add_option("--trace", trace_path, "write a JSONL operation trace to this file");
  solve->add_option("--max-strands", max_strands,
                    "annealing product cap (default: DNAKS_MAX_STRANDS or 2000000)");

  // gen
  int gen_n = 6, gen_weight = 9, gen_count = 1;
  double gen_density = 0.5;
  std::uint64_t gen_seed = 1;
  std::string gen_out = ".";
  auto* gen = app.add_subcommand("gen", "generate random connected instances");
  gen->add_option("--n", gen_n, "vertex count (>= 2)")->required();
  gen->add_option("--density", gen_density, "extra-edge probability (default 0.5)");
  gen->add_option("--max-weight", gen_weight, "weights drawn from 1..max (default 9)");
  gen->add_option("--count", gen_count, "number of instances (default 1)");
  gen->add_option("--seed", gen_seed, "base seed (instance i uses seed+i)");
  gen->add_option("--out", gen_out, "output directory (default .)");

  // campaign
  int camp_count = 100, camp_n_min = 4, camp_n_max = 8;
  std::uint64_t camp_seed = 1;
  auto* campaign =
      app.add_subcommand("campaign", "gen + solve + verify against the oracle");
  campaign->add_option("--count", camp_count, "instances to run (default 100)");
  campaign->add_option("--n-min", camp_n_min, "smallest n (default 4)");
  campaign->add_option("--n-max", camp_n_max, "largest n (default 8)");
  campaign->add_option("--seed", camp_seed, "campaign seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  if (solve->parsed())
    return run_solve(instance_path, pipeline, phase2, extract, trace_path, max_strands);
  if (gen->parsed())
    return run_gen(gen_n, gen_density, gen_weight, gen_count, gen_seed, gen_out);
  return run_campaign(camp_count, camp_n_min, camp_n_max, camp_seed);
}
