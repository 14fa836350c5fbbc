#include "dnaks/symbols.hpp"

#include <algorithm>
#include <sstream>

#include "dnaks/error.hpp"

namespace dnaks {

Symbol Symbol::label(int value) {
  if (value < 0 || value > 2)
    throw Error(ErrorCode::BadArgument, "label value must be 0, 1 or 2");
  return Symbol(encode(Kind::Label, value));
}

Symbol Symbol::a(int index) {
  if (index < 1) throw Error(ErrorCode::BadArgument, "A index must be >= 1");
  return Symbol(encode(Kind::A, index));
}

Symbol Symbol::b(int index) {
  if (index < 1) throw Error(ErrorCode::BadArgument, "B index must be >= 1");
  return Symbol(encode(Kind::B, index));
}

std::string Symbol::to_string() const {
  switch (kind()) {
    case Kind::Hash: return "#";
    case Kind::Label: return std::to_string(value());
    case Kind::X: return "X";
    case Kind::A: return "A" + std::to_string(value());
    case Kind::B: return "B" + std::to_string(value());
  }
  return "?";
}

std::string to_string(const SymbolSequence& seq) {
  std::string out;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (i) out += '.';
    out += seq[i].to_string();
  }
  return out;
}

SymbolSequence parse_sequence(const std::string& text) {
  SymbolSequence out;
  std::stringstream in(text);
  std::string token;
  while (std::getline(in, token, '.')) {
    if (token == "#") {
      out.push_back(Symbol::hash());
    } else if (token == "X") {
      out.push_back(Symbol::x());
    } else if (token == "0" || token == "1" || token == "2") {
      out.push_back(Symbol::label(token[0] - '0'));
    } else if (token.size() >= 2 && (token[0] == 'A' || token[0] == 'B')) {
      int index = 0;
      for (std::size_t i = 1; i < token.size(); ++i) {
        if (token[i] < '0' || token[i] > '9')
          throw Error(ErrorCode::Parse, "bad symbol token '" + token + "'");
        index = index * 10 + (token[i] - '0');
      }
      if (index < 1) throw Error(ErrorCode::Parse, "bad symbol index in '" + token + "'");
      out.push_back(token[0] == 'A' ? Symbol::a(index) : Symbol::b(index));
    } else {
      throw Error(ErrorCode::Parse, "bad symbol token '" + token + "'");
    }
  }
  if (out.empty()) throw Error(ErrorCode::Parse, "empty symbol sequence");
  return out;
}

bool contains_pattern(const SymbolSequence& haystack, const SymbolSequence& pattern) {
  if (pattern.empty() || pattern.size() > haystack.size()) return false;
  return std::search(haystack.begin(), haystack.end(), pattern.begin(), pattern.end()) !=
         haystack.end();
}

SymbolSequence repeated(Symbol s, int count) {
  return SymbolSequence(static_cast<std::size_t>(count), s);
}

}  // namespace dnaks
