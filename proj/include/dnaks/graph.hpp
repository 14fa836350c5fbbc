#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "dnaks/error.hpp"

namespace dnaks {

struct Edge {
  int u = 0;
  int v = 0;  // stored with u < v
  std::int64_t w = 0;
};

/// Undirected edge-weighted graph on vertices 1..n.
struct Graph {
  int n = 0;
  std::vector<Edge> edges;

  /// Y: the largest edge weight.
  std::int64_t max_edge_weight() const;
};

/// Unchecked instance description as read from JSON.
struct RawEdge {
  std::int64_t u = 0;
  std::int64_t v = 0;
  double w = 0;
  bool w_integral = false;
};

struct InstanceDescription {
  std::int64_t n = 0;
  std::vector<RawEdge> edges;
  std::vector<std::int64_t> clients;
  std::vector<std::int64_t> facilities;
  std::int64_t k = 0;
};

struct ValidationIssue {
  ErrorCode code;
  std::string message;
};

/// A checked k-supplier instance. clients/facilities are sorted and
/// duplicate-free.
struct Instance {
  Graph graph;
  std::vector<int> clients;
  std::vector<int> facilities;
  int k = 0;

  bool is_client(int v) const;
  bool is_facility(int v) const;

  static Instance from_json(const nlohmann::json& j);
  static Instance from_json_text(const std::string& text);
  static Instance from_file(const std::string& path);

  nlohmann::ordered_json to_json() const;
};

/// Structural JSON decoding; throws Error(Parse) when the shape is wrong.
InstanceDescription parse_instance_json(const nlohmann::json& j);

/// Semantic checks: weights, duplicate edges, vertex ranges, C/F
/// disjointness, k bounds, connectivity. Empty result means valid.
std::vector<ValidationIssue> validate_instance(const InstanceDescription& desc);

/// Builds the checked instance, throwing Error with the first issue's
/// code and all messages joined when validation fails.
Instance build_instance(const InstanceDescription& desc);

}  // namespace dnaks
