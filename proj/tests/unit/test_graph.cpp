#include <doctest.h>

#include <set>

#include "dnaks/generator.hpp"
#include "dnaks/rng.hpp"
#include "dnaks/shortest_paths.hpp"
#include "oracles.hpp"

using namespace dnaks;
namespace tst = dnaks::testing;

namespace {

bool has_issue(const std::vector<ValidationIssue>& issues, ErrorCode code) {
  for (const auto& i : issues)
    if (i.code == code) return true;
  return false;
}

InstanceDescription description_of(int n, const std::vector<std::array<int, 3>>& edges,
                                   const std::vector<int>& clients,
                                   const std::vector<int>& facilities, int k) {
  InstanceDescription desc;
  desc.n = n;
  for (const auto& e : edges)
    desc.edges.push_back({e[0], e[1], static_cast<double>(e[2]), true});
  for (int c : clients) desc.clients.push_back(c);
  for (int f : facilities) desc.facilities.push_back(f);
  desc.k = k;
  return desc;
}

}  // namespace

TEST_CASE("minimal instance validates cleanly") {
  const auto desc = description_of(2, {{{1, 2, 3}}}, {1}, {2}, 1);
  CHECK(validate_instance(desc).empty());
}

TEST_CASE("validation flags each defect with its own code") {
  auto base = description_of(4, {{{1, 2, 1}}, {{2, 3, 1}}, {{3, 4, 1}}}, {1}, {3, 4}, 1);

  SUBCASE("k above facility count") {
    base.k = 3;
    CHECK(has_issue(validate_instance(base), ErrorCode::BadK));
  }
  SUBCASE("k below one") {
    base.k = 0;
    CHECK(has_issue(validate_instance(base), ErrorCode::BadK));
  }
  SUBCASE("client and facility overlap") {
    base.facilities.push_back(1);
    CHECK(has_issue(validate_instance(base), ErrorCode::OverlappingCF));
  }
  SUBCASE("duplicate undirected edge") {
    base.edges.push_back({2, 1, 5.0, true});
    CHECK(has_issue(validate_instance(base), ErrorCode::DuplicateEdge));
  }
  SUBCASE("non-integer weight") {
    base.edges[0].w = 1.5;
    base.edges[0].w_integral = false;
    CHECK(has_issue(validate_instance(base), ErrorCode::NonIntegerWeight));
  }
  SUBCASE("zero weight") {
    base.edges[0].w = 0;
    CHECK(has_issue(validate_instance(base), ErrorCode::NonIntegerWeight));
  }
  SUBCASE("disconnected graph") {
    base.edges.pop_back();
    CHECK(has_issue(validate_instance(base), ErrorCode::Disconnected));
  }
  SUBCASE("vertex out of range") {
    base.clients = {9};
    CHECK(has_issue(validate_instance(base), ErrorCode::BadVertex));
  }
  SUBCASE("empty clients") {
    base.clients.clear();
    CHECK(has_issue(validate_instance(base), ErrorCode::EmptySet));
  }
}

TEST_CASE("instances mirroring C={2,5}, F={1,3,4,6}, k=3 are valid") {
  const auto desc = description_of(
      6, {{{1, 2, 2}}, {{2, 3, 4}}, {{3, 4, 1}}, {{4, 5, 3}}, {{5, 6, 2}}, {{1, 6, 5}}},
      {2, 5}, {1, 3, 4, 6}, 3);
  CHECK(validate_instance(desc).empty());
}

TEST_CASE("instance JSON round-trips") {
  const auto inst = tst::trivial_instance();
  const auto round = Instance::from_json_text(inst.to_json().dump());
  CHECK(round.to_json() == inst.to_json());
}

TEST_CASE("instance parsing rejects malformed JSON shapes") {
  CHECK_THROWS_AS(Instance::from_json_text("not json"), Error);
  CHECK_THROWS_AS(Instance::from_json_text("{\"n\": 2}"), Error);
  CHECK_THROWS_AS(
      Instance::from_json_text(
          R"({"n":2,"edges":[[1,2]],"clients":[1],"facilities":[2],"k":1})"),
      Error);
}

TEST_CASE("shortest paths on a single edge and on a path graph") {
  const auto single = tst::make_instance(2, {{{1, 2, 3}}}, {1}, {2}, 1);
  const auto spm = ShortestPaths::compute(single.graph);
  CHECK(spm.at(1, 2) == 3);
  CHECK(spm.at(1, 1) == 0);
  CHECK(spm.at(2, 2) == 0);

  const auto path = tst::make_instance(3, {{{1, 2, 2}}, {{2, 3, 4}}}, {1}, {3}, 1);
  const auto spm3 = ShortestPaths::compute(path.graph);
  CHECK(spm3.at(1, 3) == 6);
  CHECK(spm3.max_tag_mers() == 60);
}

TEST_CASE("shortest paths match exhaustive path enumeration on random graphs") {
  Rng rng(777);
  for (int trial = 0; trial < 200; ++trial) {
    GenParams params;
    params.n = rng.range(2, 5);
    params.max_weight = 9;
    params.density = 0.6;
    params.seed = rng.next();
    const auto inst = generate_instance(params);
    const auto spm = ShortestPaths::compute(inst.graph);
    for (int i = 1; i <= inst.graph.n; ++i)
      for (int j = 1; j <= inst.graph.n; ++j)
        REQUIRE(spm.at(i, j) == tst::brute_shortest_path(inst.graph, i, j));
  }
}

TEST_CASE("shortest-path matrix properties hold on larger random graphs") {
  Rng rng(778);
  for (int trial = 0; trial < 30; ++trial) {
    GenParams params;
    params.n = rng.range(6, 12);
    params.seed = rng.next();
    const auto inst = generate_instance(params);
    const auto spm = ShortestPaths::compute(inst.graph);
    const auto y = inst.graph.max_edge_weight();
    for (int i = 1; i <= inst.graph.n; ++i) {
      REQUIRE(spm.at(i, i) == 0);
      for (int j = 1; j <= inst.graph.n; ++j) {
        REQUIRE(spm.at(i, j) == spm.at(j, i));
        REQUIRE(spm.at(i, j) <= y * (inst.graph.n - 1));
        for (int l = 1; l <= inst.graph.n; ++l)
          REQUIRE(spm.at(i, j) <= spm.at(i, l) + spm.at(l, j));
      }
    }
  }
}

TEST_CASE("one client and one facility give a single pair") {
  const auto inst = tst::trivial_instance();
  const auto pairs = descending_pairs(ShortestPaths::compute(inst.graph), inst);
  REQUIRE(pairs.size() == 1);
  CHECK(pairs[0].client == 1);
  CHECK(pairs[0].facility == 2);
  CHECK(pairs[0].sp == 3);
}

TEST_CASE("descending pairs enumerate C x F in non-increasing distance order") {
  const auto inst = tst::make_instance(4, {{{1, 2, 1}}, {{2, 3, 2}}, {{3, 4, 3}}},
                                       {1, 2}, {3, 4}, 1);
  const auto spm = ShortestPaths::compute(inst.graph);
  const auto pairs = descending_pairs(spm, inst);

  REQUIRE(pairs.size() == 4);
  CHECK(pairs.front().sp == 6);  // (1,4)
  for (std::size_t i = 1; i < pairs.size(); ++i) REQUIRE(pairs[i - 1].sp >= pairs[i].sp);

  std::set<std::pair<int, int>> seen;
  for (const auto& p : pairs) {
    CHECK(inst.is_client(p.client));
    CHECK(inst.is_facility(p.facility));
    CHECK(seen.insert({p.client, p.facility}).second);
  }
}

TEST_CASE("descending pair ties break by client then facility") {
  const auto inst =
      tst::make_instance(4, {{{1, 3, 2}}, {{1, 4, 2}}, {{2, 3, 2}}, {{2, 4, 2}}},
                         {1, 2}, {3, 4}, 1);
  const auto spm = ShortestPaths::compute(inst.graph);
  const auto pairs = descending_pairs(spm, inst);
  REQUIRE(pairs.size() == 4);
  CHECK(pairs[0].client == 1);
  CHECK(pairs[0].facility == 3);
  CHECK(pairs[1].client == 1);
  CHECK(pairs[1].facility == 4);
  CHECK(pairs[2].client == 2);
  CHECK(pairs[3].client == 2);
}
