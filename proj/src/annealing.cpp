#include "dnaks/annealing.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>

#include "dnaks/error.hpp"

// Assembly model: a product is a chain of sense fragments in which every
// junction between consecutive fragments is spanned by an occurrence of a
// splint sequence (an occurrence spans a junction when it includes at
// least one symbol on each side). A junction may be spanned by an
// occurrence reaching into fragments appended later, so coverage is
// tracked incrementally: with W = longest splint, any occurrence spanning
// a junction ends within W-1 symbols past it. That bounds the state a
// partial assembly needs to its last W-1 symbols plus the set of not yet
// covered junctions inside that window, making assembly a finite
// automaton. A product is emitted when it is feasible (no pending
// junction) and maximal: no feasible assembly contains it as a proper
// contiguous factor, checked to the right through reachability and to the
// left by simulating every possible predecessor context.

namespace dnaks {
namespace {

struct State {
  SymbolSequence window;     // last <= W-1 symbols of the assembly
  std::vector<int> pending;  // uncovered junctions as distance from the end

  friend auto operator<=>(const State&, const State&) = default;
};

// Covered junctions are reported as (distance from new end, splint index).
using Coverage = std::vector<std::pair<int, int>>;

std::optional<State> step_state(const State& s, const SymbolSequence& fragment,
                                const std::vector<SymbolSequence>& splints,
                                int window_keep, bool first, Coverage* covered_out) {
  SymbolSequence t = s.window;
  t.insert(t.end(), fragment.begin(), fragment.end());
  const int wlen = static_cast<int>(s.window.size());
  const int tlen = static_cast<int>(t.size());

  std::vector<int> open;  // junction positions within t
  if (!first) open.push_back(wlen);
  for (int d : s.pending) open.push_back(wlen - d);

  for (std::size_t q = 0; q < splints.size() && !open.empty(); ++q) {
    const auto& sp = splints[q];
    const int len = static_cast<int>(sp.size());
    if (len > tlen) continue;
    for (int i = 0; i + len <= tlen && !open.empty(); ++i) {
      if (!std::equal(sp.begin(), sp.end(), t.begin() + i)) continue;
      for (auto it = open.begin(); it != open.end();) {
        const int b = *it;
        if (i < b && b <= i + len - 1) {
          if (covered_out) covered_out->emplace_back(tlen - b, static_cast<int>(q));
          it = open.erase(it);
        } else {
          ++it;
        }
      }
    }
  }

  State out;
  for (int b : open) {
    const int d = tlen - b;
    // Every occurrence that could span this junction has fully arrived.
    if (d >= window_keep) return std::nullopt;
    out.pending.push_back(d);
  }
  std::sort(out.pending.begin(), out.pending.end());
  const int keep = std::min(tlen, window_keep);
  out.window.assign(t.end() - keep, t.end());
  return out;
}

constexpr std::size_t kStateCap = 200000;

struct Engine {
  std::vector<SymbolSequence> fragments;
  std::vector<SymbolSequence> splints;
  int window_keep = 0;

  std::map<State, int> ids;
  std::vector<State> states;
  std::vector<std::vector<int>> succ;  // succ[state][fragment], -1 = dead
  std::vector<int> starts;             // state after each single fragment
  std::vector<char> feasible;          // pending empty
  std::vector<char> reach0;            // feasible state reachable in >= 0 steps
  std::vector<char> reach1;            // feasible state reachable in >= 1 steps

  int intern(const State& s) {
    auto [it, inserted] = ids.try_emplace(s, static_cast<int>(states.size()));
    if (inserted) {
      if (states.size() >= kStateCap)
        throw Error(ErrorCode::StrandExplosion, "annealing state space exceeds cap");
      states.push_back(s);
    }
    return it->second;
  }

  void build() {
    const State fresh;
    for (const auto& f : fragments) {
      // A first fragment has no junction, so this step is always alive.
      auto s = step_state(fresh, f, splints, window_keep, true, nullptr);
      starts.push_back(intern(*s));
    }
    for (std::size_t id = 0; id < states.size(); ++id) {
      std::vector<int> row;
      row.reserve(fragments.size());
      for (const auto& f : fragments) {
        auto next = step_state(states[id], f, splints, window_keep, false, nullptr);
        row.push_back(next ? intern(*next) : -1);
      }
      succ.push_back(std::move(row));
    }

    const std::size_t count = states.size();
    feasible.resize(count);
    for (std::size_t id = 0; id < count; ++id) feasible[id] = states[id].pending.empty();

    std::vector<std::vector<int>> preds(count);
    for (std::size_t id = 0; id < count; ++id)
      for (int nxt : succ[id])
        if (nxt >= 0) preds[static_cast<std::size_t>(nxt)].push_back(static_cast<int>(id));
    reach0.assign(count, 0);
    std::vector<int> work;
    for (std::size_t id = 0; id < count; ++id)
      if (feasible[id]) {
        reach0[id] = 1;
        work.push_back(static_cast<int>(id));
      }
    while (!work.empty()) {
      const int id = work.back();
      work.pop_back();
      for (int p : preds[static_cast<std::size_t>(id)])
        if (!reach0[static_cast<std::size_t>(p)]) {
          reach0[static_cast<std::size_t>(p)] = 1;
          work.push_back(p);
        }
    }
    reach1.assign(count, 0);
    for (std::size_t id = 0; id < count; ++id)
      for (int nxt : succ[id])
        if (nxt >= 0 && reach0[static_cast<std::size_t>(nxt)]) {
          reach1[id] = 1;
          break;
        }
  }
};

// Advances every context state by one fragment, deduplicating survivors.
// A context state stands for "some nonempty fragment sequence precedes
// the assembly"; the set drives the left-extension test.
std::vector<int> step_context(const Engine& eng, const std::vector<int>& context,
                              std::size_t fragment_idx) {
  std::vector<int> out;
  out.reserve(context.size());
  for (int c : context) {
    const int nxt = eng.succ[static_cast<std::size_t>(c)][fragment_idx];
    if (nxt >= 0) out.push_back(nxt);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool context_extendable(const Engine& eng, const std::vector<int>& context) {
  for (int c : context)
    if (eng.reach0[static_cast<std::size_t>(c)]) return true;
  return false;
}

}  // namespace

std::vector<Duplex> assemble_maximal_products(const AssemblyInput& input,
                                              std::uint64_t max_products) {
  Engine eng;
  eng.fragments = input.fragments;
  std::sort(eng.fragments.begin(), eng.fragments.end());
  eng.fragments.erase(std::unique(eng.fragments.begin(), eng.fragments.end()),
                      eng.fragments.end());
  eng.splints = input.splints;
  std::sort(eng.splints.begin(), eng.splints.end());
  eng.splints.erase(std::unique(eng.splints.begin(), eng.splints.end()), eng.splints.end());
  for (const auto& f : eng.fragments)
    if (f.empty()) throw Error(ErrorCode::BadArgument, "empty fragment");
  for (const auto& q : eng.splints)
    if (q.empty()) throw Error(ErrorCode::BadArgument, "empty splint");

  if (eng.fragments.empty()) return {};

  std::size_t longest = 0;
  for (const auto& q : eng.splints) longest = std::max(longest, q.size());
  eng.window_keep = longest > 0 ? static_cast<int>(longest) - 1 : 0;

  eng.build();

  struct Frame {
    int state;
    std::vector<int> context;
    std::size_t product_len;    // product length before this frame's fragment
    std::size_t covered_added;  // coverage records pushed by this frame
    std::size_t next_fragment;
  };

  std::set<Duplex> products;
  std::vector<int> on_path(eng.states.size(), 0);
  SymbolSequence product;
  std::vector<int> covered_splints;  // splint ids, pushed as junctions resolve

  const std::uint64_t node_budget = std::max<std::uint64_t>(1000000, max_products * 64);
  std::uint64_t nodes = 0;

  auto emit = [&](int state, const std::vector<int>& context) {
    if (!eng.feasible[static_cast<std::size_t>(state)]) return;
    if (eng.reach1[static_cast<std::size_t>(state)]) return;  // right-extendable
    if (context_extendable(eng, context)) return;             // left-extendable
    Duplex d;
    d.product = product;
    std::vector<int> used = covered_splints;
    std::sort(used.begin(), used.end());
    used.erase(std::unique(used.begin(), used.end()), used.end());
    for (int q : used) d.splints.push_back(eng.splints[static_cast<std::size_t>(q)]);
    products.insert(std::move(d));
    if (products.size() > max_products)
      throw Error(ErrorCode::StrandExplosion,
                  "annealing products exceed cap of " + std::to_string(max_products));
  };

  std::vector<int> all_states(eng.states.size());
  for (std::size_t i = 0; i < all_states.size(); ++i) all_states[i] = static_cast<int>(i);

  for (std::size_t first = 0; first < eng.fragments.size(); ++first) {
    product = eng.fragments[first];
    covered_splints.clear();

    Frame root;
    root.state = eng.starts[first];
    root.context = step_context(eng, all_states, first);
    root.product_len = 0;
    root.covered_added = 0;
    root.next_fragment = 0;
    on_path[static_cast<std::size_t>(root.state)]++;
    emit(root.state, root.context);

    std::vector<Frame> stack;
    stack.push_back(std::move(root));
    while (!stack.empty()) {
      Frame& top = stack.back();
      if (top.next_fragment >= eng.fragments.size()) {
        on_path[static_cast<std::size_t>(top.state)]--;
        product.resize(top.product_len);
        covered_splints.resize(covered_splints.size() - top.covered_added);
        stack.pop_back();
        continue;
      }
      const std::size_t g = top.next_fragment++;
      const int nxt = eng.succ[static_cast<std::size_t>(top.state)][g];
      if (nxt < 0) continue;
      if (on_path[static_cast<std::size_t>(nxt)] > 0) {
        if (eng.reach0[static_cast<std::size_t>(nxt)])
          throw Error(ErrorCode::NonTerminating,
                      "assembly graph admits unbounded products");
        continue;
      }
      if (!eng.reach0[static_cast<std::size_t>(nxt)]) continue;  // nothing feasible ahead
      if (++nodes > node_budget)
        throw Error(ErrorCode::StrandExplosion, "annealing search exceeds node budget");

      Coverage coverage;
      step_state(eng.states[static_cast<std::size_t>(top.state)], eng.fragments[g],
                 eng.splints, eng.window_keep, false, &coverage);

      Frame child;
      child.state = nxt;
      child.context = step_context(eng, top.context, g);
      child.product_len = product.size();
      child.covered_added = coverage.size();
      child.next_fragment = 0;
      product.insert(product.end(), eng.fragments[g].begin(), eng.fragments[g].end());
      for (const auto& [dist, splint] : coverage) covered_splints.push_back(splint);
      on_path[static_cast<std::size_t>(nxt)]++;
      emit(nxt, child.context);
      stack.push_back(std::move(child));
    }
  }

  return {products.begin(), products.end()};
}

}  // namespace dnaks
