#include "chaincut/maxflow.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace chaincut {

FlowGraph::FlowGraph(const Network& net)
    : node_count_(net.node_count()),
      super_source_(static_cast<std::uint32_t>(net.node_count())),
      sentinel_(net.finite_capacity_sum() + 1) {
  const std::size_t total = node_count_ + 1;
  std::vector<std::uint32_t> degree(total, 0);
  for (const Edge& e : net.edges()) {
    ++degree[e.tail];
    ++degree[e.head];
  }
  for (std::size_t v = 0; v < node_count_; ++v) {
    ++degree[super_source_];
    ++degree[v];
  }
  first_arc_.assign(total + 1, 0);
  for (std::size_t v = 0; v < total; ++v) first_arc_[v + 1] = first_arc_[v] + degree[v];
  arcs_.resize(first_arc_.back());
  std::vector<std::uint32_t> fill(first_arc_.begin(), first_arc_.end() - 1);

  auto link = [&](std::uint32_t u, std::uint32_t v, std::int64_t cap) {
    const std::uint32_t a = fill[u]++;
    const std::uint32_t b = fill[v]++;
    arcs_[a] = {v, b, cap, cap};
    arcs_[b] = {u, a, 0, 0};
    return a;
  };
  for (const Edge& e : net.edges()) {
    link(e.tail, e.head, e.capacity.is_infinite() ? sentinel_ : e.capacity.micros());
  }
  super_arc_of_node_.resize(node_count_);
  for (std::size_t v = 0; v < node_count_; ++v) {
    super_arc_of_node_[v] = link(super_source_, static_cast<std::uint32_t>(v), 0);
  }
  level_.resize(total);
  cursor_.resize(total);
  queue_.resize(total);
}

Capacity FlowGraph::max_flow(NodeId source, NodeId sink) {
  if (source >= node_count_ || sink >= node_count_) throw std::out_of_range("max_flow: node out of range");
  if (source == sink) throw std::invalid_argument("max_flow: source equals sink");
  for (std::uint32_t a : super_arc_of_node_) arcs_[a].cap = 0;
  return to_capacity(run(source, sink));
}

Capacity FlowGraph::max_flow_from_set(const NodeSet& sources, NodeId sink) {
  if (sink >= node_count_ || sources.extent() > node_count_) {
    throw std::out_of_range("max_flow_from_set: node out of range");
  }
  if (sources.empty()) throw std::invalid_argument("max_flow_from_set: empty source set");
  if (sources.contains(sink)) return Capacity::infinite();
  for (std::size_t v = 0; v < node_count_; ++v) {
    arcs_[super_arc_of_node_[v]].cap = sources.contains(static_cast<NodeId>(v)) ? sentinel_ : 0;
  }
  return to_capacity(run(super_source_, sink));
}

Capacity FlowGraph::to_capacity(std::int64_t flow) const {
  return flow >= sentinel_ ? Capacity::infinite() : Capacity::from_micros(flow);
}

std::int64_t FlowGraph::run(std::uint32_t source, std::uint32_t sink) {
  for (Arc& a : arcs_) a.residual = a.cap;
  std::int64_t total = 0;
  while (build_levels(source, sink)) {
    std::copy(first_arc_.begin(), first_arc_.end() - 1, cursor_.begin());
    while (std::int64_t pushed = augment(source, sink, std::numeric_limits<std::int64_t>::max())) {
      total += pushed;
      // Enough to certify Infinite; stop before any chance of overflow.
      if (total >= sentinel_) return total;
    }
  }
  return total;
}

// BFS levels; nodes at or beyond the sink's level are never expanded.
bool FlowGraph::build_levels(std::uint32_t source, std::uint32_t sink) {
  std::fill(level_.begin(), level_.end(), -1);
  std::size_t head = 0;
  std::size_t tail = 0;
  queue_[tail++] = source;
  level_[source] = 0;
  while (head < tail) {
    const std::uint32_t u = queue_[head++];
    if (level_[sink] >= 0 && level_[u] >= level_[sink]) break;
    for (std::uint32_t a = first_arc_[u]; a < first_arc_[u + 1]; ++a) {
      const Arc& arc = arcs_[a];
      if (arc.residual > 0 && level_[arc.to] < 0) {
        level_[arc.to] = level_[u] + 1;
        queue_[tail++] = arc.to;
      }
    }
  }
  return level_[sink] >= 0;
}

std::int64_t FlowGraph::augment(std::uint32_t v, std::uint32_t sink, std::int64_t pushed) {
  if (v == sink) return pushed;
  for (std::uint32_t& a = cursor_[v]; a < first_arc_[v + 1]; ++a) {
    Arc& arc = arcs_[a];
    if (arc.residual <= 0 || level_[arc.to] != level_[v] + 1) continue;
    if (arc.to != sink && level_[arc.to] >= level_[sink]) continue;
    const std::int64_t got = augment(arc.to, sink, std::min(pushed, arc.residual));
    if (got > 0) {
      arc.residual -= got;
      arcs_[arc.rev].residual += got;
      return got;
    }
  }
  return 0;
}

}  // namespace chaincut
