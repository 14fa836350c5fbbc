#include <doctest.h>

#include <set>

#include "dnaks/generator.hpp"
#include "dnaks/pipeline.hpp"
#include "oracles.hpp"

using namespace dnaks;
namespace tst = dnaks::testing;

namespace {

struct Setup {
  Instance inst;
  ShortestPaths spm;
  Library lib;
  Machine machine;

  explicit Setup(Instance i)
      : inst(std::move(i)),
        spm(ShortestPaths::compute(inst.graph)),
        lib(build_library(inst.graph.n, spm)) {}

  Tube through_phase2(Phase2Mode mode = Phase2Mode::Corrected) {
    Tube p = phase1_generate(machine, lib, inst.graph.n);
    return phase2_filter_valid(machine, std::move(p), inst, mode);
  }

  Tube through_phase3(Phase2Mode mode = Phase2Mode::Corrected) {
    return phase3_cardinality(machine, through_phase2(mode), inst);
  }
};

// Path graph on n vertices with unit weights.
Instance path_instance(int n, std::vector<int> clients, std::vector<int> facilities, int k) {
  std::vector<std::array<int, 3>> edges;
  for (int i = 1; i < n; ++i) edges.push_back({i, i + 1, 1});
  return tst::make_instance(n, edges, clients, facilities, k);
}

std::uint64_t choose(std::uint64_t f, std::uint64_t k) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (f - k + i) / i;
  return r;
}

}  // namespace

TEST_CASE("phase1 produces every label assignment exactly once") {
  Machine m;
  Graph g1;
  g1.n = 1;
  const auto lib1 = build_library(1, ShortestPaths::compute(g1));
  Tube p1 = phase1_generate(m, lib1, 1);
  REQUIRE(p1.total() == 3);
  CHECK(m.steps() == 7);

  std::vector<SymbolSequence> got;
  for (const auto& [molecule, count] : p1.contents()) {
    CHECK(count == 1);
    got.push_back(std::get<Strand>(molecule).symbols);
  }
  CHECK(got == tst::enumerate_full_strands(1));
}

TEST_CASE("phase1 yields 3^n strands for small n") {
  for (int n = 2; n <= 5; ++n) {
    Machine m;
    const auto inst = path_instance(n, {1}, {n}, 1);
    const auto lib = build_library(n, ShortestPaths::compute(inst.graph));
    Tube p = phase1_generate(m, lib, n);
    std::uint64_t expected = 1;
    for (int i = 0; i < n; ++i) expected *= 3;
    CHECK(p.total() == expected);
    CHECK(m.steps() == 7);
  }
}

TEST_CASE("phase1 output contains the ten-vertex worked example strand") {
  Machine m;
  const auto inst = path_instance(10, {1}, {10}, 1);
  const auto lib = build_library(10, ShortestPaths::compute(inst.graph));
  Tube p = phase1_generate(m, lib, 10);
  REQUIRE(p.total() == 59049);

  // S = {1,3,6}, C = {2,5}, R = {4,7,8,9,10}
  const std::vector<int> labels = {1, 0, 1, 2, 0, 1, 2, 2, 2, 2};
  const auto strand = tst::make_assignment_sequence(labels, 0);
  CHECK(p.contents().count(Molecule(sense(strand))) == 1);
}

TEST_CASE("phase2 corrected keeps 2^|F| survivors") {
  Setup s(path_instance(5, {2, 5}, {1, 3, 4}, 2));
  Tube p2 = s.through_phase2();
  CHECK(p2.total() == 8);

  for (const auto& [molecule, count] : p2.contents()) {
    const auto d = decode_strand(std::get<Strand>(molecule), 5, 0);
    CHECK(d.clients == std::vector<int>{2, 5});
    for (int v : d.open) CHECK(s.inst.is_facility(v));
  }
}

TEST_CASE("phase2 removes the invalid worked example and keeps the valid one") {
  // C = {2,5}, F = {1,3,4,6} on ten vertices
  const auto inst = tst::make_instance(
      10,
      {{{1, 2, 1}}, {{2, 3, 1}}, {{3, 4, 1}}, {{4, 5, 1}}, {{5, 6, 1}},
       {{6, 7, 1}}, {{7, 8, 1}}, {{8, 9, 1}}, {{9, 10, 1}}},
      {2, 5}, {1, 3, 4, 6}, 3);

  // invalid: S = {1,3,4,7} opens vertex 7 which is not a facility
  const std::vector<int> invalid = {1, 0, 1, 1, 0, 2, 1, 2, 2, 2};
  // valid: S = {1,3,6}
  const std::vector<int> valid = {1, 0, 1, 2, 0, 1, 2, 2, 2, 2};

  Machine m;
  Tube p("P");
  p.add(sense(tst::make_assignment_sequence(invalid, 0)));
  p.add(sense(tst::make_assignment_sequence(valid, 0)));

  Tube out = phase2_filter_valid(m, std::move(p), inst, Phase2Mode::Corrected);
  REQUIRE(out.total() == 1);
  const auto d = decode_strand(std::get<Strand>(out.contents().begin()->first), 10, 0);
  CHECK(d.open == std::vector<int>{1, 3, 6});
  CHECK(d.rest == std::vector<int>{4, 7, 8, 9, 10});
}

TEST_CASE("phase2 literal mode forces every facility open") {
  // The literal rules discard label-2 facilities, so the valid worked
  // example (facility 4 closed) does not survive them.
  const auto inst = tst::make_instance(
      10,
      {{{1, 2, 1}}, {{2, 3, 1}}, {{3, 4, 1}}, {{4, 5, 1}}, {{5, 6, 1}},
       {{6, 7, 1}}, {{7, 8, 1}}, {{8, 9, 1}}, {{9, 10, 1}}},
      {2, 5}, {1, 3, 4, 6}, 3);
  const std::vector<int> valid = {1, 0, 1, 2, 0, 1, 2, 2, 2, 2};

  Machine m;
  Tube p("P");
  p.add(sense(tst::make_assignment_sequence(valid, 0)));
  Tube out = phase2_filter_valid(m, std::move(p), inst, Phase2Mode::PaperLiteral);
  CHECK(out.empty());
}

TEST_CASE("phase2 literal survivor count and step count") {
  Setup s(path_instance(5, {2, 5}, {1, 3}, 1));
  const std::uint64_t before = s.machine.steps();
  Tube p2 = s.through_phase2(Phase2Mode::PaperLiteral);
  // clients fixed to 0, facilities fixed to 1, vertex 4 free
  CHECK(p2.total() == 3);
  const auto cf = s.inst.clients.size() + s.inst.facilities.size();
  CHECK(s.machine.steps() - before == 7 + 4 * cf);  // 7 phase-1 steps
}

TEST_CASE("phase3 keeps exactly the k-member subsets with k trailing X") {
  Setup s(path_instance(5, {2, 5}, {1, 3, 4}, 2));
  Tube p3 = s.through_phase3();
  CHECK(p3.total() == choose(3, 2));

  for (const auto& [molecule, count] : p3.contents()) {
    const auto& strand = std::get<Strand>(molecule);
    const auto d = decode_strand(strand, 5, s.inst.k);
    CHECK(d.open.size() == 2);
    CHECK(d.tag_units == 0);
    // tail is exactly k X symbols
    const auto& sym = strand.symbols;
    CHECK(sym[sym.size() - 1] == Symbol::x());
    CHECK(sym[sym.size() - 2] == Symbol::x());
    CHECK(sym[sym.size() - 3] == Symbol::hash());
  }
}

TEST_CASE("phase3 on the worked C/F sets leaves 4 subsets of size 3") {
  Setup s(path_instance(10, {2, 5}, {1, 3, 4, 6}, 3));
  Tube p2 = s.through_phase2();
  CHECK(p2.total() == 16);  // 2^|F|
  Tube p3 = phase3_cardinality(s.machine, std::move(p2), s.inst);
  CHECK(p3.total() == 4);

  std::set<std::vector<int>> open_sets;
  for (const auto& [molecule, count] : p3.contents())
    open_sets.insert(decode_strand(std::get<Strand>(molecule), 10, 3).open);
  const std::set<std::vector<int>> expected = {
      {1, 3, 4}, {1, 3, 6}, {1, 4, 6}, {3, 4, 6}};
  CHECK(open_sets == expected);
}

TEST_CASE("phase3 with k=|F| keeps the single all-open subset") {
  Setup s(path_instance(4, {1}, {3, 4}, 2));
  Tube p3 = s.through_phase3();
  REQUIRE(p3.total() == 1);
  const auto d = decode_strand(std::get<Strand>(p3.contents().begin()->first), 4, 2);
  CHECK(d.open == std::vector<int>{3, 4});
}

TEST_CASE("phase3 after literal phase2 with k < |F| is empty") {
  Setup s(path_instance(5, {2, 5}, {1, 3}, 1));
  Tube p3 = s.through_phase3(Phase2Mode::PaperLiteral);
  CHECK_FALSE(s.machine.detect(p3));
}

TEST_CASE("phase4 tags every strand with its largest client-facility distance") {
  // weights 1,2,3 on the path 1-2-3-4; C={1}, F={3,4}, k=1
  const auto inst =
      tst::make_instance(4, {{{1, 2, 1}}, {{2, 3, 2}}, {{3, 4, 3}}}, {1}, {3, 4}, 1);
  Setup s(inst);
  const auto pairs = descending_pairs(s.spm, s.inst);
  Tube p4 = phase4_tag_distance(s.machine, s.through_phase3(), pairs, s.lib);

  REQUIRE(p4.total() == 2);
  for (const auto& [molecule, count] : p4.contents()) {
    const auto d = decode_strand(std::get<Strand>(molecule), 4, 1);
    REQUIRE(d.open.size() == 1);
    const int tag = d.tag_units;
    if (d.open[0] == 3) CHECK(tag == 3);  // sp(1,3) = 3
    if (d.open[0] == 4) CHECK(tag == 6);  // sp(1,4) = 6
  }
}

TEST_CASE("phase4 tag equals the max-pair value on random instances") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    GenParams params;
    params.n = 2 + static_cast<int>(seed % 5);
    params.seed = seed * 7919;
    const auto inst = generate_instance(params);
    Setup s(inst);
    const auto pairs = descending_pairs(s.spm, s.inst);
    Tube p4 = phase4_tag_distance(s.machine, s.through_phase3(), pairs, s.lib);

    for (const auto& [molecule, count] : p4.contents()) {
      const auto d = decode_strand(std::get<Strand>(molecule), inst.graph.n, inst.k);
      std::int64_t expected = 0;
      for (int v : inst.clients)
        for (int u : d.open) expected = std::max(expected, s.spm.at(v, u));
      REQUIRE(d.tag_units == expected);
    }
  }
}

TEST_CASE("phase4 step count stays within the per-pair budget") {
  Setup s(path_instance(6, {1, 2}, {4, 5, 6}, 2));
  Tube p3 = s.through_phase3();
  const std::uint64_t before = s.machine.steps();
  const auto pairs = descending_pairs(s.spm, s.inst);
  Tube p4 = phase4_tag_distance(s.machine, std::move(p3), pairs, s.lib);
  const std::uint64_t used = s.machine.steps() - before;
  CHECK(used <= 7 * pairs.size() + 2);
}
