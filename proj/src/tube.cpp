#include "dnaks/tube.hpp"

#include <numeric>

namespace dnaks {

std::string Strand::to_string() const {
  std::string out = polarity == Polarity::Antisense ? "~" : "";
  out += dnaks::to_string(symbols);
  return out;
}

std::string Duplex::to_string() const {
  std::string out = dnaks::to_string(product);
  out += " [";
  for (std::size_t i = 0; i < splints.size(); ++i) {
    if (i) out += ';';
    out += dnaks::to_string(splints[i]);
  }
  out += ']';
  return out;
}

void Tube::add(Strand s, std::uint64_t count) {
  if (count == 0) return;
  contents_[Molecule(std::move(s))] += count;
}

void Tube::add(Duplex d, std::uint64_t count) {
  if (count == 0) return;
  contents_[Molecule(std::move(d))] += count;
}

void Tube::add(Molecule m, std::uint64_t count) {
  if (count == 0) return;
  contents_[std::move(m)] += count;
}

std::uint64_t Tube::total() const {
  std::uint64_t sum = 0;
  for (const auto& [molecule, count] : contents_) sum += count;
  return sum;
}

bool Tube::holds_duplex() const {
  for (const auto& [molecule, count] : contents_)
    if (std::holds_alternative<Duplex>(molecule)) return true;
  return false;
}

bool Tube::holds_antisense() const {
  for (const auto& [molecule, count] : contents_) {
    const auto* s = std::get_if<Strand>(&molecule);
    if (s && s->polarity == Polarity::Antisense) return true;
  }
  return false;
}

std::string Tube::serialize() const {
  std::string out;
  for (const auto& [molecule, count] : contents_) {
    out += std::to_string(count);
    out += ' ';
    if (const auto* s = std::get_if<Strand>(&molecule)) {
      out += "s ";
      out += s->to_string();
    } else {
      out += "d ";
      out += std::get<Duplex>(molecule).to_string();
    }
    out += '\n';
  }
  return out;
}

}  // namespace dnaks
