// Independent reference implementations used by the tests. These stay
// deliberately naive: they must not share code paths with the library.
#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "dnaks/graph.hpp"
#include "dnaks/symbols.hpp"

namespace dnaks::testing {

/// Index-loop substring scan, independent of contains_pattern.
bool naive_contains(const SymbolSequence& haystack, const SymbolSequence& needle);

/// Shortest path by exhaustive simple-path enumeration (small n only).
std::int64_t brute_shortest_path(const Graph& g, int s, int t);

/// All 3^n full solution-space strands # A1 l1 B1 ... An ln Bn #,
/// enumerated directly from label assignments.
std::vector<SymbolSequence> enumerate_full_strands(int n);

/// Builds a full strand for one label assignment (labels[i] for vertex
/// i+1) with `x_tail` trailing X symbols.
SymbolSequence make_assignment_sequence(const std::vector<int>& labels, int x_tail);

/// Convenience instance builders.
Instance make_instance(int n, const std::vector<std::array<int, 3>>& edges,
                       const std::vector<int>& clients, const std::vector<int>& facilities,
                       int k);

/// n=2, single edge (1,2) weight 3, C={1}, F={2}, k=1.
Instance trivial_instance();

}  // namespace dnaks::testing
