#include "dnaks/dnaks.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <memory>
#include <string>

#include "dnaks/campaign.hpp"
#include "dnaks/error.hpp"
#include "dnaks/generator.hpp"
#include "dnaks/oracle.hpp"
#include "dnaks/pipeline.hpp"
#include "dnaks/trace.hpp"

using dnaks::Error;
using dnaks::ErrorCode;

struct dnaks_instance {
  dnaks::Instance inner;
};

namespace {

thread_local std::string g_last_error;

dnaks_status status_of(ErrorCode code) {
  switch (code) {
    case ErrorCode::Io: return DNAKS_ERR_IO;
    case ErrorCode::Parse: return DNAKS_ERR_PARSE;
    case ErrorCode::BadArgument:
    case ErrorCode::InsufficientData: return DNAKS_ERR_BAD_ARGUMENT;
    case ErrorCode::NonIntegerWeight:
    case ErrorCode::Disconnected:
    case ErrorCode::OverlappingCF:
    case ErrorCode::BadK:
    case ErrorCode::DuplicateEdge:
    case ErrorCode::BadVertex:
    case ErrorCode::EmptySet: return DNAKS_ERR_VALIDATION;
    case ErrorCode::StrandExplosion: return DNAKS_ERR_STRAND_EXPLOSION;
    case ErrorCode::NonTerminating: return DNAKS_ERR_NONTERMINATING;
    case ErrorCode::NoSolution: return DNAKS_ERR_NO_SOLUTION;
    case ErrorCode::SizeGuard: return DNAKS_ERR_SIZE_GUARD;
    case ErrorCode::DuplexPresent:
    case ErrorCode::MalformedStrand:
    case ErrorCode::Internal: return DNAKS_ERR_INTERNAL;
  }
  return DNAKS_ERR_INTERNAL;
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <typename Fn>
dnaks_status guarded(Fn&& fn) {
  try {
    fn();
    g_last_error.clear();
    return DNAKS_OK;
  } catch (const Error& e) {
    g_last_error = std::string(dnaks::error_code_name(e.code())) + ": " + e.what();
    return status_of(e.code());
  } catch (const std::exception& e) {
    g_last_error = std::string("Internal: ") + e.what();
    return DNAKS_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "Internal: unknown error";
    return DNAKS_ERR_INTERNAL;
  }
}

dnaks::PipelineOptions to_options(const dnaks_solve_options& opts, dnaks::TraceSink* sink) {
  dnaks::PipelineOptions out;
  switch (opts.phase2_mode) {
    case DNAKS_PHASE2_PAPER_LITERAL: out.phase2_mode = dnaks::Phase2Mode::PaperLiteral; break;
    case DNAKS_PHASE2_CORRECTED: out.phase2_mode = dnaks::Phase2Mode::Corrected; break;
    default: throw Error(ErrorCode::BadArgument, "bad phase2_mode value");
  }
  switch (opts.extract) {
    case DNAKS_EXTRACT_SELECTION: out.extract = dnaks::ExtractVariant::Selection; break;
    case DNAKS_EXTRACT_XSEARCH: out.extract = dnaks::ExtractVariant::XSearch; break;
    case DNAKS_EXTRACT_BOTH: out.extract = dnaks::ExtractVariant::Both; break;
    default: throw Error(ErrorCode::BadArgument, "bad extract value");
  }
  out.sink = sink;
  out.max_strands = opts.max_strands;
  return out;
}

}  // namespace

extern "C" {

void dnaks_solve_options_init(dnaks_solve_options* options) {
  if (!options) return;
  options->pipeline = DNAKS_PIPELINE_BOTH;
  options->phase2_mode = DNAKS_PHASE2_CORRECTED;
  options->extract = DNAKS_EXTRACT_BOTH;
  options->trace_path = nullptr;
  options->max_strands = 0;
}

dnaks_status dnaks_instance_from_json(const char* json, dnaks_instance** out) {
  return guarded([&] {
    if (!json || !out) throw Error(ErrorCode::BadArgument, "null argument");
    *out = new dnaks_instance{dnaks::Instance::from_json_text(json)};
  });
}

dnaks_status dnaks_instance_from_file(const char* path, dnaks_instance** out) {
  return guarded([&] {
    if (!path || !out) throw Error(ErrorCode::BadArgument, "null argument");
    *out = new dnaks_instance{dnaks::Instance::from_file(path)};
  });
}

dnaks_status dnaks_instance_to_json(const dnaks_instance* instance, char** json_out) {
  return guarded([&] {
    if (!instance || !json_out) throw Error(ErrorCode::BadArgument, "null argument");
    *json_out = dup_string(instance->inner.to_json().dump(2) + "\n");
  });
}

void dnaks_instance_free(dnaks_instance* instance) { delete instance; }

dnaks_status dnaks_solve(const dnaks_instance* instance,
                         const dnaks_solve_options* options, char** report_json_out) {
  return guarded([&] {
    if (!instance || !options || !report_json_out)
      throw Error(ErrorCode::BadArgument, "null argument");

    std::unique_ptr<dnaks::JsonlFileSink> sink;
    if (options->trace_path) sink = std::make_unique<dnaks::JsonlFileSink>(options->trace_path);

    auto run_one = [&](dnaks::PipelineKind kind) {
      auto popts = to_options(*options, sink.get());
      popts.kind = kind;
      return dnaks::run_pipeline(instance->inner, popts);
    };

    nlohmann::ordered_json j;
    switch (options->pipeline) {
      case DNAKS_PIPELINE_PAPER:
        j = run_one(dnaks::PipelineKind::Paper).to_json();
        break;
      case DNAKS_PIPELINE_CORRECTED:
        j = run_one(dnaks::PipelineKind::Corrected).to_json();
        break;
      case DNAKS_PIPELINE_BOTH:
        j["paper"] = run_one(dnaks::PipelineKind::Paper).to_json();
        j["corrected"] = run_one(dnaks::PipelineKind::Corrected).to_json();
        break;
      default:
        throw Error(ErrorCode::BadArgument, "bad pipeline value");
    }
    *report_json_out = dup_string(j.dump(2) + "\n");
  });
}

dnaks_status dnaks_oracle_solve(const dnaks_instance* instance, int objective_kind,
                                char** result_json_out) {
  return guarded([&] {
    if (!instance || !result_json_out) throw Error(ErrorCode::BadArgument, "null argument");
    dnaks::ObjectiveKind kind;
    switch (objective_kind) {
      case DNAKS_OBJECTIVE_PAPER_MAXMAX: kind = dnaks::ObjectiveKind::PaperMaxMax; break;
      case DNAKS_OBJECTIVE_KSUPPLIER_MAXMIN:
        kind = dnaks::ObjectiveKind::KSupplierMaxMin;
        break;
      default: throw Error(ErrorCode::BadArgument, "bad objective kind");
    }
    const auto spm = dnaks::ShortestPaths::compute(instance->inner.graph);
    const auto result = dnaks::oracle_solve(instance->inner, spm, kind);
    nlohmann::ordered_json j;
    j["objective_kind"] = dnaks::to_string(result.kind);
    j["value"] = result.value;
    j["optimal_subsets"] = result.optimal_subsets;
    *result_json_out = dup_string(j.dump(2) + "\n");
  });
}

dnaks_status dnaks_generate_instance(uint32_t n, double density, uint32_t max_weight,
                                     uint64_t seed, char** instance_json_out) {
  return guarded([&] {
    if (!instance_json_out) throw Error(ErrorCode::BadArgument, "null argument");
    dnaks::GenParams params;
    params.n = static_cast<int>(n);
    params.density = density;
    params.max_weight = static_cast<int>(max_weight);
    params.seed = seed;
    const auto inst = dnaks::generate_instance(params);
    *instance_json_out = dup_string(inst.to_json().dump(2) + "\n");
  });
}

dnaks_status dnaks_campaign(uint32_t count, uint32_t n_min, uint32_t n_max, uint64_t seed,
                            char** summary_json_out) {
  return guarded([&] {
    if (!summary_json_out) throw Error(ErrorCode::BadArgument, "null argument");
    dnaks::CampaignParams params;
    params.count = static_cast<int>(count);
    params.n_min = static_cast<int>(n_min);
    params.n_max = static_cast<int>(n_max);
    params.seed = seed;
    const auto summary = dnaks::run_campaign(params);
    *summary_json_out = dup_string(summary.to_json().dump(2) + "\n");
  });
}

void dnaks_string_free(char* s) { std::free(s); }

const char* dnaks_last_error(void) { return g_last_error.c_str(); }

const char* dnaks_version(void) { return "1.0.0"; }

}  // extern "C"
