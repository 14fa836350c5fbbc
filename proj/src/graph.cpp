#include "dnaks/graph.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

namespace dnaks {

std::int64_t Graph::max_edge_weight() const {
  std::int64_t y = 0;
  for (const auto& e : edges) y = std::max(y, e.w);
  return y;
}

bool Instance::is_client(int v) const {
  return std::binary_search(clients.begin(), clients.end(), v);
}

bool Instance::is_facility(int v) const {
  return std::binary_search(facilities.begin(), facilities.end(), v);
}

InstanceDescription parse_instance_json(const nlohmann::json& j) {
  if (!j.is_object()) throw Error(ErrorCode::Parse, "instance must be a JSON object");
  for (const char* key : {"n", "edges", "clients", "facilities", "k"})
    if (!j.contains(key))
      throw Error(ErrorCode::Parse, std::string("instance is missing \"") + key + "\"");

  InstanceDescription desc;
  if (!j["n"].is_number_integer()) throw Error(ErrorCode::Parse, "\"n\" must be an integer");
  desc.n = j["n"].get<std::int64_t>();
  if (!j["k"].is_number_integer()) throw Error(ErrorCode::Parse, "\"k\" must be an integer");
  desc.k = j["k"].get<std::int64_t>();

  if (!j["edges"].is_array()) throw Error(ErrorCode::Parse, "\"edges\" must be an array");
  for (const auto& e : j["edges"]) {
    if (!e.is_array() || e.size() != 3 || !e[0].is_number_integer() ||
        !e[1].is_number_integer() || !e[2].is_number())
      throw Error(ErrorCode::Parse, "each edge must be [u, v, w]");
    RawEdge raw;
    raw.u = e[0].get<std::int64_t>();
    raw.v = e[1].get<std::int64_t>();
    raw.w = e[2].get<double>();
    raw.w_integral = e[2].is_number_integer();
    desc.edges.push_back(raw);
  }

  for (const char* key : {"clients", "facilities"}) {
    const auto& arr = j[key];
    if (!arr.is_array())
      throw Error(ErrorCode::Parse, std::string("\"") + key + "\" must be an array");
    auto& target = key[0] == 'c' ? desc.clients : desc.facilities;
    for (const auto& v : arr) {
      if (!v.is_number_integer())
        throw Error(ErrorCode::Parse, std::string("\"") + key + "\" must hold integers");
      target.push_back(v.get<std::int64_t>());
    }
  }
  return desc;
}

std::vector<ValidationIssue> validate_instance(const InstanceDescription& desc) {
  std::vector<ValidationIssue> issues;
  auto issue = [&](ErrorCode code, std::string message) {
    issues.push_back({code, std::move(message)});
  };

  if (desc.n < 1) {
    issue(ErrorCode::BadVertex, "n must be >= 1");
    return issues;
  }
  const auto n = desc.n;

  auto in_range = [n](std::int64_t v) { return v >= 1 && v <= n; };

  bool edges_ok = true;
  std::set<std::pair<std::int64_t, std::int64_t>> seen;
  for (const auto& e : desc.edges) {
    if (!in_range(e.u) || !in_range(e.v)) {
      issue(ErrorCode::BadVertex, "edge endpoint out of range 1.." + std::to_string(n));
      edges_ok = false;
      continue;
    }
    if (e.u == e.v) {
      issue(ErrorCode::BadVertex, "self-loop at vertex " + std::to_string(e.u));
      edges_ok = false;
      continue;
    }
    if (!e.w_integral || e.w < 1)
      issue(ErrorCode::NonIntegerWeight,
            "edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                ") weight must be a positive integer");
    auto key = std::minmax(e.u, e.v);
    if (!seen.insert(key).second)
      issue(ErrorCode::DuplicateEdge, "duplicate edge (" + std::to_string(key.first) + "," +
                                          std::to_string(key.second) + ")");
  }

  auto check_set = [&](const std::vector<std::int64_t>& values, const char* what) {
    if (values.empty()) issue(ErrorCode::EmptySet, std::string(what) + " must be nonempty");
    for (auto v : values)
      if (!in_range(v)) {
        issue(ErrorCode::BadVertex, std::string(what) + " vertex out of range");
        return false;
      }
    return !values.empty();
  };
  const bool c_ok = check_set(desc.clients, "clients");
  const bool f_ok = check_set(desc.facilities, "facilities");

  if (c_ok && f_ok) {
    std::set<std::int64_t> cs(desc.clients.begin(), desc.clients.end());
    for (auto v : desc.facilities)
      if (cs.count(v)) {
        issue(ErrorCode::OverlappingCF,
              "vertex " + std::to_string(v) + " is both client and facility");
        break;
      }
  }

  if (f_ok) {
    std::set<std::int64_t> fs(desc.facilities.begin(), desc.facilities.end());
    if (desc.k < 1 || desc.k > static_cast<std::int64_t>(fs.size()))
      issue(ErrorCode::BadK, "k must satisfy 1 <= k <= |facilities|");
  }

  if (edges_ok) {
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(n) + 1);
    for (const auto& e : desc.edges) {
      adj[static_cast<std::size_t>(e.u)].push_back(static_cast<int>(e.v));
      adj[static_cast<std::size_t>(e.v)].push_back(static_cast<int>(e.u));
    }
    std::vector<char> visited(static_cast<std::size_t>(n) + 1, 0);
    std::vector<int> stack{1};
    visited[1] = 1;
    std::int64_t reached = 1;
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      for (int v : adj[static_cast<std::size_t>(u)])
        if (!visited[static_cast<std::size_t>(v)]) {
          visited[static_cast<std::size_t>(v)] = 1;
          ++reached;
          stack.push_back(v);
        }
    }
    if (reached != n) issue(ErrorCode::Disconnected, "graph is not connected");
  }

  return issues;
}

Instance build_instance(const InstanceDescription& desc) {
  const auto issues = validate_instance(desc);
  if (!issues.empty()) {
    std::string joined;
    for (const auto& i : issues) {
      if (!joined.empty()) joined += "; ";
      joined += i.message;
    }
    throw Error(issues.front().code, joined);
  }

  Instance inst;
  inst.graph.n = static_cast<int>(desc.n);
  for (const auto& e : desc.edges) {
    auto [u, v] = std::minmax(e.u, e.v);
    inst.graph.edges.push_back(
        {static_cast<int>(u), static_cast<int>(v), static_cast<std::int64_t>(e.w)});
  }
  std::sort(inst.graph.edges.begin(), inst.graph.edges.end(),
            [](const Edge& a, const Edge& b) { return std::tie(a.u, a.v) < std::tie(b.u, b.v); });

  auto to_sorted_set = [](const std::vector<std::int64_t>& values) {
    std::vector<int> out;
    out.reserve(values.size());
    for (auto v : values) out.push_back(static_cast<int>(v));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  };
  inst.clients = to_sorted_set(desc.clients);
  inst.facilities = to_sorted_set(desc.facilities);
  inst.k = static_cast<int>(desc.k);
  return inst;
}

Instance Instance::from_json(const nlohmann::json& j) {
  return build_instance(parse_instance_json(j));
}

Instance Instance::from_json_text(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
  if (j.is_discarded()) throw Error(ErrorCode::Parse, "invalid JSON");
  return from_json(j);
}

Instance Instance::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Io, "cannot open instance file '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return from_json_text(buffer.str());
}

nlohmann::ordered_json Instance::to_json() const {
  nlohmann::ordered_json j;
  j["n"] = graph.n;
  auto edges = nlohmann::ordered_json::array();
  for (const auto& e : graph.edges) edges.push_back({e.u, e.v, e.w});
  j["edges"] = std::move(edges);
  j["clients"] = clients;
  j["facilities"] = facilities;
  j["k"] = k;
  return j;
}

}  // namespace dnaks
