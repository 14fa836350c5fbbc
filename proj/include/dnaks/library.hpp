#pragma once

#include <map>
#include <utility>
#include <vector>

#include "dnaks/shortest_paths.hpp"
#include "dnaks/tube.hpp"

namespace dnaks {

/// The synthesized strand library for an n-vertex instance:
///   sense fragments  {#A1} u {B_d A_{d+1}} u {B_n #} u {0, 1, 2}
///   splints          {~(A_d x B_d) : d in 1..n, x in 0..2} u {~#}
///   tag fragments    (i,j) -> X repeated sp(i,j) times
/// The ~# splint is carried but can never span a junction.
struct Library {
  int n = 0;
  std::vector<SymbolSequence> sense_fragments;
  std::vector<SymbolSequence> splints;
  std::map<std::pair<int, int>, SymbolSequence> tag_fragments;  // key i < j

  const SymbolSequence& tag(int i, int j) const;

  Tube make_sense_tube(std::string name) const;
  Tube make_splint_tube(std::string name) const;
};

Library build_library(int n, const ShortestPaths& spm);

}  // namespace dnaks
