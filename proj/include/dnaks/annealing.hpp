#pragma once

#include <cstdint>
#include <vector>

#include "dnaks/tube.hpp"

namespace dnaks {

/// Chain-assembly input: distinct sense fragments plus splint sequences
/// (the sense-equivalent reading of the antisense splints).
struct AssemblyInput {
  std::vector<SymbolSequence> fragments;
  std::vector<SymbolSequence> splints;
};

/// Enumerates all maximal feasible assemblies. An assembly is a
/// concatenation of fragments in which every junction between consecutive
/// fragments is spanned by an occurrence of some splint sequence; it is
/// maximal when no feasible assembly contains it as a proper contiguous
/// factor. Output is sorted and duplicate-free.
///
/// Throws Error(StrandExplosion) past `max_products` and
/// Error(NonTerminating) when a coverable-junction cycle makes the
/// product set unbounded.
std::vector<Duplex> assemble_maximal_products(const AssemblyInput& input,
                                              std::uint64_t max_products);

}  // namespace dnaks
