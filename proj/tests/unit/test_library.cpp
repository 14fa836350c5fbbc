#include <doctest.h>

#include <algorithm>

#include "dnaks/library.hpp"
#include "oracles.hpp"

using namespace dnaks;
namespace tst = dnaks::testing;

TEST_CASE("library for n=2 has the expected fragments and splints") {
  const auto inst = tst::trivial_instance();
  const auto spm = ShortestPaths::compute(inst.graph);
  const auto lib = build_library(2, spm);

  REQUIRE(lib.sense_fragments.size() == 6);  // (n+1) chain pieces + 3 monomers
  auto has_fragment = [&](const char* text) {
    return std::find(lib.sense_fragments.begin(), lib.sense_fragments.end(),
                     parse_sequence(text)) != lib.sense_fragments.end();
  };
  CHECK(has_fragment("#.A1"));
  CHECK(has_fragment("B1.A2"));
  CHECK(has_fragment("B2.#"));
  CHECK(has_fragment("0"));
  CHECK(has_fragment("1"));
  CHECK(has_fragment("2"));

  REQUIRE(lib.splints.size() == 3 * 2 + 1);  // 3n label splints + inert ~#
  auto has_splint = [&](const char* text) {
    return std::find(lib.splints.begin(), lib.splints.end(), parse_sequence(text)) !=
           lib.splints.end();
  };
  for (const char* s : {"A1.0.B1", "A1.1.B1", "A1.2.B1", "A2.0.B2", "A2.1.B2", "A2.2.B2", "#"})
    CHECK(has_splint(s));
}

TEST_CASE("tag fragments carry the shortest-path distance in X symbols") {
  const auto inst = tst::make_instance(3, {{{1, 2, 2}}, {{2, 3, 4}}}, {1}, {3}, 1);
  const auto spm = ShortestPaths::compute(inst.graph);
  const auto lib = build_library(3, spm);

  CHECK(lib.tag(1, 2).size() == 2);
  CHECK(lib.tag(2, 3).size() == 4);
  CHECK(lib.tag(1, 3).size() == 6);
  CHECK(lib.tag(3, 1) == lib.tag(1, 3));
  CHECK(sense(lib.tag(1, 3)).length_mers() == 10 * spm.at(1, 3));
  for (const auto& s : lib.tag(1, 3)) CHECK(s == Symbol::x());
}

TEST_CASE("degenerate n=1 library") {
  Graph g;
  g.n = 1;
  const auto spm = ShortestPaths::compute(g);
  const auto lib = build_library(1, spm);

  REQUIRE(lib.sense_fragments.size() == 5);  // #A1, B1#, three monomers
  CHECK(lib.sense_fragments.front() == parse_sequence("#.A1"));
  CHECK(lib.splints.size() == 4);  // 3 label splints + inert
  CHECK(lib.tag_fragments.empty());
  CHECK(spm.max_tag_mers() == 0);
}

TEST_CASE("library tubes have one copy of each member with the right polarity") {
  const auto inst = tst::trivial_instance();
  const auto spm = ShortestPaths::compute(inst.graph);
  const auto lib = build_library(2, spm);

  const Tube p = lib.make_sense_tube("P");
  CHECK(p.total() == lib.sense_fragments.size());
  CHECK_FALSE(p.holds_antisense());

  const Tube q = lib.make_splint_tube("Q");
  CHECK(q.total() == lib.splints.size());
  CHECK(q.holds_antisense());
}
