#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "dnaks/symbols.hpp"

namespace dnaks {

enum class Polarity : std::uint8_t { Sense = 0, Antisense = 1 };

/// A single DNA strand at symbol resolution. Antisense strands hold the
/// complement of their symbol sequence; at this abstraction level the
/// sequence is stored as-is and the polarity flag carries the overbar.
struct Strand {
  SymbolSequence symbols;
  Polarity polarity = Polarity::Sense;

  int length_mers() const { return kMersPerSymbol * static_cast<int>(symbols.size()); }

  friend auto operator<=>(const Strand&, const Strand&) = default;

  std::string to_string() const;
};

inline Strand sense(SymbolSequence seq) { return Strand{std::move(seq), Polarity::Sense}; }
inline Strand antisense(SymbolSequence seq) { return Strand{std::move(seq), Polarity::Antisense}; }

/// An annealed assembly: the sense product plus the splints holding its
/// fragment junctions together.
struct Duplex {
  SymbolSequence product;
  std::vector<SymbolSequence> splints;

  friend auto operator<=>(const Duplex&, const Duplex&) = default;

  std::string to_string() const;
};

using Molecule = std::variant<Strand, Duplex>;

/// A test tube: a multiset of molecules with positive counts. Tubes are
/// values; machine operations consume them by value, so reusing a tube
/// after it was handed to an operation is a use-after-move caught at
/// build/check time rather than at runtime.
class Tube {
public:
  Tube() = default;
  explicit Tube(std::string name) : name_(std::move(name)) {}

  void add(Strand s, std::uint64_t count = 1);
  void add(Duplex d, std::uint64_t count = 1);
  void add(Molecule m, std::uint64_t count = 1);

  std::uint64_t total() const;
  std::size_t distinct() const { return contents_.size(); }
  bool empty() const { return contents_.empty(); }

  bool holds_duplex() const;
  bool holds_antisense() const;

  const std::map<Molecule, std::uint64_t>& contents() const { return contents_; }
  std::map<Molecule, std::uint64_t>& contents() { return contents_; }

  const std::string& name() const { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }

  /// Deterministic text form (sorted members), used for purity checks.
  std::string serialize() const;

  friend bool operator==(const Tube& a, const Tube& b) { return a.contents_ == b.contents_; }

private:
  std::map<Molecule, std::uint64_t> contents_;
  std::string name_;
};

}  // namespace dnaks
