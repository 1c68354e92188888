#include "chaincut/network.hpp"

#include <stdexcept>

namespace chaincut {

Network::Network(std::size_t node_count) : labels_(node_count) {}

Network::Network(std::vector<std::string> labels, std::vector<Edge> edges)
    : labels_(std::move(labels)) {
  edges_.reserve(edges.size());
  for (const Edge& e : edges) add_edge(e.tail, e.head, e.capacity);
}

NodeId Network::add_node(std::string label) {
  labels_.push_back(std::move(label));
  return static_cast<NodeId>(labels_.size() - 1);
}

void Network::add_edge(NodeId tail, NodeId head, Capacity capacity) {
  if (!contains(tail) || !contains(head)) throw std::out_of_range("edge endpoint out of range");
  if (tail == head) throw std::invalid_argument("self-loop edge " + label(tail));
  edges_.push_back({tail, head, capacity});
}

std::string Network::label(NodeId v) const {
  if (v < labels_.size() && !labels_[v].empty()) return labels_[v];
  return std::to_string(v);
}

std::optional<NodeId> Network::find(std::string_view label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i] == label) return static_cast<NodeId>(i);
  }
  return std::nullopt;
}

NodeId Network::require(std::string_view label) const {
  if (auto v = find(label)) return *v;
  throw std::invalid_argument("unknown node '" + std::string(label) + "'");
}

void Network::check_nodes(const NodeSet& s) const {
  if (s.extent() > node_count()) {
    throw std::out_of_range("node set references node " + std::to_string(s.extent() - 1) +
                            " outside a network of " + std::to_string(node_count()) + " nodes");
  }
}

std::int64_t Network::finite_capacity_sum() const {
  std::int64_t sum = 0;
  for (const Edge& e : edges_) {
    if (!e.capacity.is_infinite()) sum += e.capacity.micros();
  }
  return sum;
}

}  // namespace chaincut
