#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace dnaks {

/// Every symbol stands for a DNA oligonucleotide of this many mers.
inline constexpr int kMersPerSymbol = 10;

/// One strand-alphabet unit: #, a vertex label (0/1/2), the counting
/// monomer X, or a vertex delimiter A_i / B_i.
class Symbol {
public:
  enum class Kind : std::uint8_t { Hash = 0, Label = 1, X = 2, A = 3, B = 4 };

  constexpr Symbol() = default;

  static Symbol hash() { return Symbol(encode(Kind::Hash, 0)); }
  static Symbol label(int value);  // value in {0,1,2}
  static Symbol x() { return Symbol(encode(Kind::X, 0)); }
  static Symbol a(int index);  // index >= 1
  static Symbol b(int index);

  constexpr Kind kind() const { return static_cast<Kind>(code_ >> 24); }
  constexpr int value() const { return static_cast<int>(code_ & 0xffffffu); }

  bool is_label(int v) const { return kind() == Kind::Label && value() == v; }

  friend constexpr auto operator<=>(Symbol lhs, Symbol rhs) = default;

  std::string to_string() const;

private:
  constexpr explicit Symbol(std::uint32_t code) : code_(code) {}
  static constexpr std::uint32_t encode(Kind k, int v) {
    return (static_cast<std::uint32_t>(k) << 24) | static_cast<std::uint32_t>(v);
  }

  std::uint32_t code_ = 0;
};

using SymbolSequence = std::vector<Symbol>;

/// Renders a sequence as dot-joined symbol names, e.g. "#.A1.1.B1".
std::string to_string(const SymbolSequence& seq);

/// Inverse of to_string. Throws Error(Parse) on malformed text.
SymbolSequence parse_sequence(const std::string& text);

/// True when `pattern` occurs as a contiguous subsequence of `haystack`.
bool contains_pattern(const SymbolSequence& haystack, const SymbolSequence& pattern);

SymbolSequence repeated(Symbol s, int count);

}  // namespace dnaks
