#include "dnaks/library.hpp"

#include "dnaks/error.hpp"

namespace dnaks {

const SymbolSequence& Library::tag(int i, int j) const {
  if (i > j) std::swap(i, j);
  auto it = tag_fragments.find({i, j});
  if (it == tag_fragments.end())
    throw Error(ErrorCode::BadArgument,
                "no tag fragment for pair (" + std::to_string(i) + "," + std::to_string(j) + ")");
  return it->second;
}

Tube Library::make_sense_tube(std::string name) const {
  Tube t(std::move(name));
  for (const auto& f : sense_fragments) t.add(sense(f));
  return t;
}

Tube Library::make_splint_tube(std::string name) const {
  Tube t(std::move(name));
  for (const auto& q : splints) t.add(antisense(q));
  return t;
}

Library build_library(int n, const ShortestPaths& spm) {
  if (n < 1) throw Error(ErrorCode::BadArgument, "library size must be >= 1");

  Library lib;
  lib.n = n;

  lib.sense_fragments.push_back({Symbol::hash(), Symbol::a(1)});
  for (int d = 1; d < n; ++d)
    lib.sense_fragments.push_back({Symbol::b(d), Symbol::a(d + 1)});
  lib.sense_fragments.push_back({Symbol::b(n), Symbol::hash()});
  for (int label = 0; label <= 2; ++label)
    lib.sense_fragments.push_back({Symbol::label(label)});

  for (int d = 1; d <= n; ++d)
    for (int label = 0; label <= 2; ++label)
      lib.splints.push_back({Symbol::a(d), Symbol::label(label), Symbol::b(d)});
  // Inert: a one-symbol splint can never span a junction.
  lib.splints.push_back({Symbol::hash()});

  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      lib.tag_fragments[{i, j}] = repeated(Symbol::x(), static_cast<int>(spm.at(i, j)));

  return lib;
}

}  // namespace dnaks
