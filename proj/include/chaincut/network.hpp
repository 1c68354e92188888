#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "chaincut/capacity.hpp"
#include "chaincut/node_set.hpp"

namespace chaincut {

struct Edge {
  NodeId tail = 0;
  NodeId head = 0;
  Capacity capacity;
};

// Directed capacitated multigraph. Parallel edges are allowed and add up in
// cuts and flows; zero-capacity edges are kept but carry no flow.
class Network {
 public:
  Network() = default;
  explicit Network(std::size_t node_count);
  Network(std::vector<std::string> labels, std::vector<Edge> edges);

  NodeId add_node(std::string label = {});
  void add_edge(NodeId tail, NodeId head, Capacity capacity);

  std::size_t node_count() const { return labels_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }

  // Label of a node; falls back to its index when unnamed.
  std::string label(NodeId v) const;
  std::optional<NodeId> find(std::string_view label) const;
  NodeId require(std::string_view label) const;

  bool contains(NodeId v) const { return v < labels_.size(); }
  // Throws std::out_of_range when any member is not a node of this network.
  void check_nodes(const NodeSet& s) const;

  // Sum of all finite capacities.
  std::int64_t finite_capacity_sum() const;

 private:
  std::vector<std::string> labels_;
  std::vector<Edge> edges_;
};

}  // namespace chaincut
