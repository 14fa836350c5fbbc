#include "dnaks/pipeline.hpp"

#include <algorithm>
#include <set>

#include "dnaks/error.hpp"

namespace dnaks {

const char* to_string(Phase2Mode mode) {
  return mode == Phase2Mode::Corrected ? "corrected" : "paper_literal";
}

const char* to_string(ExtractVariant variant) {
  switch (variant) {
    case ExtractVariant::Selection: return "selection";
    case ExtractVariant::XSearch: return "xsearch";
    case ExtractVariant::Both: return "both";
  }
  return "?";
}

const char* to_string(PipelineKind kind) {
  return kind == PipelineKind::Paper ? "paper" : "corrected";
}

namespace {

SymbolSequence vertex_pattern(int v, int label) {
  return {Symbol::a(v), Symbol::label(label), Symbol::b(v)};
}

// separation + discard of the matched strands
Tube remove_matching(Machine& m, Tube p, const SymbolSequence& pattern) {
  auto [matched, residual] = m.separation(std::move(p), pattern);
  m.discard(std::move(matched));
  return std::move(residual);
}

}  // namespace

Tube phase1_generate(Machine& m, const Library& lib, int n) {
  Tube soup = m.merge(lib.make_sense_tube("P"), lib.make_splint_tube("Q"));
  soup = m.annealing(std::move(soup));
  soup = m.denaturation(std::move(soup));

  auto first = m.separation(std::move(soup), {Symbol::hash(), Symbol::a(1)});
  m.discard(std::move(first.residual));
  auto second = m.separation(std::move(first.matched), {Symbol::b(n), Symbol::hash()});
  m.discard(std::move(second.residual));

  Tube p = std::move(second.matched);
  p.set_name("P");
  return p;
}

Tube phase2_filter_valid(Machine& m, Tube p, const Instance& inst, Phase2Mode mode) {
  const int n = inst.graph.n;
  for (int j = 1; j <= n; ++j) {
    if (inst.is_client(j)) {
      p = remove_matching(m, std::move(p), vertex_pattern(j, 1));
      p = remove_matching(m, std::move(p), vertex_pattern(j, 2));
    } else if (inst.is_facility(j)) {
      p = remove_matching(m, std::move(p), vertex_pattern(j, 0));
      if (mode == Phase2Mode::PaperLiteral)
        p = remove_matching(m, std::move(p), vertex_pattern(j, 2));
    } else if (mode == Phase2Mode::Corrected) {
      p = remove_matching(m, std::move(p), vertex_pattern(j, 0));
      p = remove_matching(m, std::move(p), vertex_pattern(j, 1));
    }
  }
  return p;
}

Tube phase3_cardinality(Machine& m, Tube p, const Instance& inst) {
  const SymbolSequence one_x = {Symbol::x()};
  for (int j : inst.facilities) {
    auto [open, rest] = m.separation(std::move(p), vertex_pattern(j, 1));
    Tube tagged = m.append(std::move(open), one_x);
    p = m.merge(std::move(rest), std::move(tagged));
  }
  // Drop the strands with more than k members, then keep the exact-k ones.
  p = remove_matching(m, std::move(p), repeated(Symbol::x(), inst.k + 1));
  auto [keep, under] = m.separation(std::move(p), repeated(Symbol::x(), inst.k));
  m.discard(std::move(under));
  return std::move(keep);
}

Tube phase4_tag_distance(Machine& m, Tube p, const std::vector<PairEntry>& pairs,
                         const Library& lib) {
  Tube result("T5");
  for (const auto& pair : pairs) {
    auto by_facility = m.separation(std::move(p), vertex_pattern(pair.facility, 1));
    auto by_client =
        m.separation(std::move(by_facility.matched), vertex_pattern(pair.client, 0));
    Tube tagged =
        m.append(std::move(by_client.matched), lib.tag(pair.client, pair.facility));
    result = m.merge(std::move(result), std::move(tagged));
    p = m.merge(std::move(by_facility.residual), std::move(by_client.residual));
  }
  // Every strand has a client and an open facility, so nothing is left.
  m.discard(std::move(p));
  result.set_name("P");
  return result;
}

ExtractResult phase5_extract_selection(Machine& m, Tube p, int n, int k,
                                       std::int64_t bound) {
  const int base = kMersPerSymbol * (3 * n + 2 + k);
  for (std::int64_t i = 1; i <= bound; ++i) {
    auto [hit, rest] = m.selection(std::move(p), base + kMersPerSymbol * static_cast<int>(i));
    if (m.detect(hit)) return {i, std::move(hit)};
    p = std::move(rest);
  }
  throw Error(ErrorCode::NoSolution, "no strand found in any length class");
}

ExtractResult phase5_extract_xsearch(Machine& m, Tube p, int k, std::int64_t bound) {
  for (std::int64_t i = 1; i <= bound; ++i) {
    auto [keep, probe] = m.amplify(std::move(p));
    p = std::move(keep);
    auto at_least = m.separation(std::move(probe), repeated(Symbol::x(), k + static_cast<int>(i)));
    auto exact =
        m.separation(std::move(at_least.matched), repeated(Symbol::x(), k + static_cast<int>(i) + 1));
    if (m.detect(exact.residual)) return {i, std::move(exact.residual)};
  }
  throw Error(ErrorCode::NoSolution, "no strand found with any X-run length");
}

SolutionAssignment decode_strand(const Strand& s, int n, int k) {
  if (s.polarity != Polarity::Sense)
    throw Error(ErrorCode::MalformedStrand, "antisense strand cannot be decoded");
  const auto& sym = s.symbols;
  const std::size_t min_size = 2 + 3 * static_cast<std::size_t>(n);
  if (sym.size() < min_size)
    throw Error(ErrorCode::MalformedStrand, "strand too short for n=" + std::to_string(n));

  auto expect = [&](std::size_t at, Symbol want, const char* what) {
    if (sym[at] != want)
      throw Error(ErrorCode::MalformedStrand,
                  std::string("expected ") + what + " at symbol " + std::to_string(at));
  };

  SolutionAssignment out;
  expect(0, Symbol::hash(), "#");
  std::size_t at = 1;
  for (int i = 1; i <= n; ++i) {
    expect(at, Symbol::a(i), "A_i");
    const Symbol label = sym[at + 1];
    if (label.kind() != Symbol::Kind::Label)
      throw Error(ErrorCode::MalformedStrand, "expected label at symbol " + std::to_string(at + 1));
    expect(at + 2, Symbol::b(i), "B_i");
    switch (label.value()) {
      case 0: out.clients.push_back(i); break;
      case 1: out.open.push_back(i); break;
      default: out.rest.push_back(i); break;
    }
    at += 3;
  }
  expect(at, Symbol::hash(), "#");
  ++at;
  int xs = 0;
  for (; at < sym.size(); ++at) {
    expect(at, Symbol::x(), "X");
    ++xs;
  }
  out.tag_units = xs - k;
  return out;
}

namespace {

std::vector<std::vector<int>> decode_open_sets(const Tube& solutions, int n, int k) {
  std::set<std::vector<int>> sets;
  for (const auto& [molecule, count] : solutions.contents()) {
    const auto& strand = std::get<Strand>(molecule);
    sets.insert(decode_strand(strand, n, k).open);
  }
  return {sets.begin(), sets.end()};
}

}  // namespace

ThresholdResult corrected_threshold_pipeline(Machine& m, Tube phase3_out,
                                             const Instance& inst,
                                             const ShortestPaths& spm) {
  std::set<std::int64_t> thresholds;
  for (int v : inst.clients)
    for (int u : inst.facilities) thresholds.insert(spm.at(v, u));

  Tube pool = std::move(phase3_out);
  for (const std::int64_t r : thresholds) {
    auto [keep, work] = m.amplify(std::move(pool));
    pool = std::move(keep);
    // A strand survives client v iff it opens some facility within r of v.
    for (int v : inst.clients) {
      Tube acc("T_acc");
      for (int u : inst.facilities) {
        if (spm.at(v, u) > r) continue;
        auto [hit, rest] = m.separation(std::move(work), vertex_pattern(u, 1));
        acc = m.merge(std::move(acc), std::move(hit));
        work = std::move(rest);
      }
      m.discard(std::move(work));
      work = std::move(acc);
    }
    if (m.detect(work)) {
      ThresholdResult out;
      out.objective = r;
      for (const auto& [molecule, count] : work.contents())
        out.solutions.push_back(decode_strand(std::get<Strand>(molecule), inst.graph.n, inst.k));
      std::sort(out.solutions.begin(), out.solutions.end(),
                [](const SolutionAssignment& a, const SolutionAssignment& b) {
                  return a.open < b.open;
                });
      return out;
    }
  }
  throw Error(ErrorCode::NoSolution, "threshold sweep exhausted");
}

nlohmann::ordered_json PipelineReport::to_json() const {
  nlohmann::ordered_json j;
  j["objective"] = objective;
  j["subsets"] = subsets;
  j["bio_steps"] = bio_steps;
  j["phase_counts"] = {{"p1", p1_count}, {"p2", p2_count}, {"p3", p3_count}};
  j["mode"] = {{"pipeline", dnaks::to_string(kind)},
               {"phase2", dnaks::to_string(phase2_mode)},
               {"extract", dnaks::to_string(extract)}};
  nlohmann::ordered_json steps;
  for (const auto& [phase, count] : phase_steps) steps[phase] = count;
  j["phase_steps"] = std::move(steps);
  return j;
}

PipelineReport run_pipeline(const Instance& inst, const PipelineOptions& options) {
  const int n = inst.graph.n;
  const int k = inst.k;
  const auto spm = ShortestPaths::compute(inst.graph);
  const auto lib = build_library(n, spm);

  Machine m(options.sink, options.max_strands);
  PipelineReport report;
  report.kind = options.kind;
  report.phase2_mode =
      options.kind == PipelineKind::Corrected ? Phase2Mode::Corrected : options.phase2_mode;
  report.extract = options.extract;

  std::uint64_t mark = m.steps();
  auto take_steps = [&](const char* phase) {
    report.phase_steps[phase] = m.steps() - mark;
    mark = m.steps();
  };

  Tube p = phase1_generate(m, lib, n);
  report.p1_count = p.total();
  take_steps("p1");

  p = phase2_filter_valid(m, std::move(p), inst, report.phase2_mode);
  report.p2_count = p.total();
  take_steps("p2");

  p = phase3_cardinality(m, std::move(p), inst);
  report.p3_count = p.total();
  take_steps("p3");

  if (options.kind == PipelineKind::Corrected) {
    auto result = corrected_threshold_pipeline(m, std::move(p), inst, spm);
    take_steps("threshold");
    report.objective = result.objective;
    for (const auto& s : result.solutions) report.subsets.push_back(s.open);
    std::sort(report.subsets.begin(), report.subsets.end());
    report.bio_steps = m.steps();
    return report;
  }

  const auto pairs = descending_pairs(spm, inst);
  p = phase4_tag_distance(m, std::move(p), pairs, lib);
  take_steps("p4");

  const std::int64_t bound =
      inst.graph.max_edge_weight() * static_cast<std::int64_t>(n) * n;
  std::int64_t objective = -1;
  Tube solutions;
  if (options.extract == ExtractVariant::Selection) {
    auto r = phase5_extract_selection(m, std::move(p), n, k, bound);
    objective = r.objective;
    solutions = std::move(r.solutions);
  } else if (options.extract == ExtractVariant::XSearch) {
    auto r = phase5_extract_xsearch(m, std::move(p), k, bound);
    objective = r.objective;
    solutions = std::move(r.solutions);
  } else {
    auto [for_selection, for_xsearch] = m.amplify(std::move(p));
    auto rs = phase5_extract_selection(m, std::move(for_selection), n, k, bound);
    auto rx = phase5_extract_xsearch(m, std::move(for_xsearch), k, bound);
    const auto sel_sets = decode_open_sets(rs.solutions, n, k);
    const auto x_sets = decode_open_sets(rx.solutions, n, k);
    if (rs.objective != rx.objective || sel_sets != x_sets)
      throw Error(ErrorCode::Internal, "extraction variants disagree");
    objective = rs.objective;
    solutions = std::move(rs.solutions);
  }
  take_steps("p5");

  report.objective = objective;
  report.subsets = decode_open_sets(solutions, n, k);
  report.bio_steps = m.steps();
  return report;
}

}  // namespace dnaks
