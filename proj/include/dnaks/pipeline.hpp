#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "dnaks/library.hpp"
#include "dnaks/machine.hpp"

namespace dnaks {

enum class Phase2Mode { Corrected, PaperLiteral };
enum class ExtractVariant { Selection, XSearch, Both };
enum class PipelineKind { Paper, Corrected };

const char* to_string(Phase2Mode mode);
const char* to_string(ExtractVariant variant);
const char* to_string(PipelineKind kind);

/// Decoded form of a solution-space strand # (A_i l_i B_i)_{i=1..n} # X^t.
struct SolutionAssignment {
  std::vector<int> clients;   // label 0
  std::vector<int> open;      // label 1 (set S)
  std::vector<int> rest;      // label 2 (set R)
  int tag_units = 0;          // trailing X count minus k
};

struct PipelineOptions {
  PipelineKind kind = PipelineKind::Paper;
  Phase2Mode phase2_mode = Phase2Mode::Corrected;
  ExtractVariant extract = ExtractVariant::Both;
  TraceSink* sink = nullptr;
  std::uint64_t max_strands = 0;  // 0: default cap
};

struct PipelineReport {
  PipelineKind kind = PipelineKind::Paper;
  Phase2Mode phase2_mode = Phase2Mode::Corrected;
  ExtractVariant extract = ExtractVariant::Both;
  std::int64_t objective = -1;
  std::vector<std::vector<int>> subsets;  // sorted lexicographically
  std::uint64_t bio_steps = 0;
  std::uint64_t p1_count = 0;
  std::uint64_t p2_count = 0;
  std::uint64_t p3_count = 0;
  std::map<std::string, std::uint64_t> phase_steps;

  nlohmann::ordered_json to_json() const;
};

/// Phase 1: merge library tubes, anneal, denature, then keep strands
/// bounded by #A1 and Bn#. Exactly 3^n strands, one copy each; records a
/// constant 7 steps.
Tube phase1_generate(Machine& m, const Library& lib, int n);

/// Phase 2: remove strands whose labels contradict the instance. In
/// corrected mode survivors have every client 0, every facility 1 or 2,
/// everything else 2 (2^|F| survivors). The literal mode keeps only
/// label-1 facilities, leaving vertices outside C u F unconstrained.
Tube phase2_filter_valid(Machine& m, Tube p, const Instance& inst, Phase2Mode mode);

/// Phase 3: append one X per open facility, then keep exactly the strands
/// with k trailing X's. C(|F|, k) survivors.
Tube phase3_cardinality(Machine& m, Tube p, const Instance& inst);

/// Phase 4: walk client-facility pairs by distance descending and tag each
/// strand with X^sp for its first (= largest) matching pair.
Tube phase4_tag_distance(Machine& m, Tube p, const std::vector<PairEntry>& pairs,
                         const Library& lib);

struct ExtractResult {
  std::int64_t objective = 0;
  Tube solutions;
};

/// Phase 5, length-class scan: probe lengths 10*(3n+2+k) + 10*i upward.
ExtractResult phase5_extract_selection(Machine& m, Tube p, int n, int k,
                                       std::int64_t bound);

/// Phase 5, X-run scan: probe for strands with exactly k+i trailing X's.
ExtractResult phase5_extract_xsearch(Machine& m, Tube p, int k, std::int64_t bound);

SolutionAssignment decode_strand(const Strand& s, int n, int k);

struct ThresholdResult {
  std::int64_t objective = 0;
  std::vector<SolutionAssignment> solutions;
};

/// Threshold sweep for the true k-supplier objective (min over S of the
/// max over clients of the distance to the nearest open facility), built
/// from machine operations on the phase-3 tube.
ThresholdResult corrected_threshold_pipeline(Machine& m, Tube phase3_out,
                                             const Instance& inst,
                                             const ShortestPaths& spm);

PipelineReport run_pipeline(const Instance& inst, const PipelineOptions& options);

}  // namespace dnaks
