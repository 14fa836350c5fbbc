#include "dnaks/machine.hpp"

#include <cstdlib>

#include "dnaks/annealing.hpp"
#include "dnaks/error.hpp"

namespace dnaks {

std::uint64_t default_strand_cap() {
  static const std::uint64_t cap = [] {
    if (const char* env = std::getenv("DNAKS_MAX_STRANDS")) {
      char* end = nullptr;
      const unsigned long long v = std::strtoull(env, &end, 10);
      if (end && *end == '\0' && v > 0) return static_cast<std::uint64_t>(v);
    }
    return std::uint64_t{2000000};
  }();
  return cap;
}

Machine::Machine(TraceSink* sink, std::uint64_t strand_cap)
    : sink_(sink), cap_(strand_cap ? strand_cap : default_strand_cap()) {}

void Machine::record(const char* op, std::vector<std::string> tubes, std::string param,
                     std::uint64_t matched, std::uint64_t residual) {
  ++steps_;
  if (!sink_) return;
  TraceEvent event;
  event.step = steps_;
  event.op = op;
  event.tubes = std::move(tubes);
  event.param = std::move(param);
  event.matched = matched;
  event.residual = residual;
  sink_->on_event(event);
}

Tube Machine::merge(Tube t1, Tube t2) {
  Tube out = std::move(t1);
  for (auto& [molecule, count] : t2.contents()) out.add(molecule, count);
  record("merge", {out.name(), t2.name()}, "", out.total(), 0);
  return out;
}

bool Machine::detect(const Tube& t) {
  const bool found = !t.empty();
  record("detect", {t.name()}, found ? "yes" : "no", t.total(), 0);
  return found;
}

SeparationResult Machine::separation(Tube source, const SymbolSequence& pattern) {
  if (pattern.empty())
    throw Error(ErrorCode::BadArgument, "separation pattern must be nonempty");
  if (source.holds_duplex())
    throw Error(ErrorCode::DuplexPresent, "separation requires denatured single strands");

  SeparationResult out;
  out.matched.set_name(source.name());
  out.residual.set_name(source.name());
  for (auto& [molecule, count] : source.contents()) {
    const auto& strand = std::get<Strand>(molecule);
    if (contains_pattern(strand.symbols, pattern))
      out.matched.add(molecule, count);
    else
      out.residual.add(molecule, count);
  }
  record("separation", {source.name()}, to_string(pattern), out.matched.total(),
         out.residual.total());
  return out;
}

SeparationResult Machine::selection(Tube source, int length_mers) {
  if (length_mers <= 0 || length_mers % kMersPerSymbol != 0)
    throw Error(ErrorCode::BadArgument,
                "selection length must be a positive multiple of 10 mers");

  SeparationResult out;
  out.matched.set_name(source.name());
  out.residual.set_name(source.name());
  for (auto& [molecule, count] : source.contents()) {
    const auto* strand = std::get_if<Strand>(&molecule);
    if (strand && strand->length_mers() == length_mers)
      out.matched.add(molecule, count);
    else
      out.residual.add(molecule, count);
  }
  record("selection", {source.name()}, "L=" + std::to_string(length_mers),
         out.matched.total(), out.residual.total());
  return out;
}

Tube Machine::annealing(Tube t) {
  if (t.holds_duplex())
    throw Error(ErrorCode::DuplexPresent, "annealing input must be single strands");

  AssemblyInput input;
  for (const auto& [molecule, count] : t.contents()) {
    const auto& strand = std::get<Strand>(molecule);
    if (strand.polarity == Polarity::Sense)
      input.fragments.push_back(strand.symbols);
    else
      input.splints.push_back(strand.symbols);
  }

  Tube out(t.name());
  for (auto& duplex : assemble_maximal_products(input, cap_)) out.add(std::move(duplex));
  record("annealing", {t.name()}, "", out.total(), 0);
  return out;
}

Tube Machine::denaturation(Tube t) {
  Tube out(t.name());
  std::uint64_t duplexes = 0;
  std::uint64_t singles = 0;
  for (auto& [molecule, count] : t.contents()) {
    if (const auto* strand = std::get_if<Strand>(&molecule)) {
      out.add(*strand, count);
      singles += count;
    } else {
      const auto& duplex = std::get<Duplex>(molecule);
      out.add(sense(duplex.product), count);
      for (const auto& splint : duplex.splints) out.add(antisense(splint), count);
      duplexes += count;
    }
  }
  record("denaturation", {t.name()}, "", duplexes, singles);
  return out;
}

void Machine::discard(Tube t) {
  record("discard", {t.name()}, "", t.total(), 0);
}

Tube Machine::append(Tube t, const SymbolSequence& fragment) {
  if (fragment.empty())
    throw Error(ErrorCode::BadArgument, "append fragment must be nonempty");
  Tube out(t.name());
  for (auto& [molecule, count] : t.contents()) {
    const auto* strand = std::get_if<Strand>(&molecule);
    if (!strand || strand->polarity != Polarity::Sense)
      throw Error(ErrorCode::DuplexPresent, "append requires sense single strands");
    Strand extended = *strand;
    extended.symbols.insert(extended.symbols.end(), fragment.begin(), fragment.end());
    out.add(std::move(extended), count);
  }
  record("append", {t.name()}, to_string(fragment), out.total(), 0);
  return out;
}

std::pair<Tube, Tube> Machine::amplify(Tube t) {
  Tube copy = t;
  record("amplify", {t.name()}, "", t.total(), copy.total());
  return {std::move(t), std::move(copy)};
}

}  // namespace dnaks
