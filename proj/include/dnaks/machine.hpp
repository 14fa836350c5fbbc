#pragma once

#include <cstdint>
#include <utility>

#include "dnaks/trace.hpp"
#include "dnaks/tube.hpp"

namespace dnaks {

/// Default cap on annealing products; overridable through the
/// DNAKS_MAX_STRANDS environment variable.
std::uint64_t default_strand_cap();

struct SeparationResult {
  Tube matched;
  Tube residual;
};

/// The test-tube abstract machine: eight operations plus amplify, each
/// costing exactly one bio-step. Operations are pure functions from owned
/// tube values to new tube values; inputs are consumed by value.
class Machine {
public:
  explicit Machine(TraceSink* sink = nullptr, std::uint64_t strand_cap = 0);

  std::uint64_t steps() const { return steps_; }
  std::uint64_t strand_cap() const { return cap_; }

  /// Multiset union; the second tube is emptied into the first.
  Tube merge(Tube t1, Tube t2);

  /// True iff the tube holds at least one molecule.
  bool detect(const Tube& t);

  /// Pulls every single strand containing `pattern` out of `source`.
  /// Matched and residual partition the source exactly.
  SeparationResult separation(Tube source, const SymbolSequence& pattern);

  /// Pulls every strand of the given length (in mers) out of `source`.
  SeparationResult selection(Tube source, int length_mers);

  /// Assembles all maximal feasible duplexes from the tube's sense
  /// fragments and antisense splints.
  Tube annealing(Tube t);

  /// Splits every duplex into its sense product and splint strands.
  Tube denaturation(Tube t);

  /// Removes the tube.
  void discard(Tube t);

  /// Ligates `fragment` onto the tail of every strand.
  Tube append(Tube t, const SymbolSequence& fragment);

  /// Two independent copies of the tube.
  std::pair<Tube, Tube> amplify(Tube t);

private:
  void record(const char* op, std::vector<std::string> tubes, std::string param,
              std::uint64_t matched, std::uint64_t residual);

  TraceSink* sink_;
  std::uint64_t steps_ = 0;
  std::uint64_t cap_;
};

}  // namespace dnaks
