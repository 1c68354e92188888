#include "chaincut/netgraph.hpp"

#include <stdexcept>

namespace chaincut {

Capacity cut_value(const Network& net, const NodeSet& s) {
  net.check_nodes(s);
  Capacity total;
  for (const Edge& e : net.edges()) {
    if (s.contains(e.tail) && !s.contains(e.head)) total += e.capacity;
  }
  return total;
}

Capacity max_flow(const Network& net, NodeId source, NodeId sink) {
  FlowGraph flow(net);
  return flow.max_flow(source, sink);
}

AuxiliaryNetwork build_auxiliary_multicast(const Network& net, const NodeSet& sources) {
  if (sources.empty()) throw std::invalid_argument("build_auxiliary_multicast: empty source set");
  net.check_nodes(sources);
  AuxiliaryNetwork aux{net, 0};
  aux.extra_node = aux.network.add_node("EN");
  for (NodeId u : sources.nodes()) aux.network.add_edge(aux.extra_node, u, Capacity::infinite());
  return aux;
}

Capacity multicast_mincut(const Network& net, const NodeSet& sources, const NodeSet& targets) {
  if (targets.empty()) throw std::invalid_argument("multicast_mincut: empty target set");
  net.check_nodes(targets);
  AuxiliaryNetwork aux = build_auxiliary_multicast(net, sources);
  FlowGraph flow(aux.network);
  Capacity best = Capacity::infinite();
  for (NodeId v : (targets - sources).nodes()) {
    best = std::min(best, flow.max_flow(aux.extra_node, v));
  }
  return best;
}

Capacity mincut_bruteforce(const Network& net, const NodeSet& sources, const NodeSet& targets) {
  const std::size_t n = net.node_count();
  if (n > kBruteforceNodeLimit) {
    throw std::invalid_argument("mincut_bruteforce: refusing " + std::to_string(n) + " nodes (limit " +
                                std::to_string(kBruteforceNodeLimit) + ")");
  }
  if (sources.empty() || targets.empty()) throw std::invalid_argument("mincut_bruteforce: empty set");
  net.check_nodes(sources);
  net.check_nodes(targets);

  std::uint32_t src_mask = 0;
  std::uint32_t tgt_mask = 0;
  for (NodeId v : sources.nodes()) src_mask |= 1U << v;
  for (NodeId v : targets.nodes()) tgt_mask |= 1U << v;

  Capacity best = Capacity::infinite();
  for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
    if ((mask & src_mask) != src_mask) continue;
    if ((mask & tgt_mask) == tgt_mask) continue;
    Capacity cut;
    for (const Edge& e : net.edges()) {
      if ((mask >> e.tail & 1U) != 0 && (mask >> e.head & 1U) == 0) cut += e.capacity;
    }
    best = std::min(best, cut);
  }
  return best;
}

RoundCutOracle::RoundCutOracle(const Network& net) : net_(net), flow_(net) {}

Capacity RoundCutOracle::to_node(const NodeSet& sources, NodeId target) {
  if (sources.contains(target)) return Capacity::infinite();
  std::lock_guard lock(mutex_);
  Key key{sources, target};
  if (auto it = cache_.find(key); it != cache_.end()) {
    ++cache_hits_;
    return it->second;
  }
  ++maxflow_calls_;
  const Capacity value = flow_.max_flow_from_set(sources, target);
  cache_.emplace(std::move(key), value);
  return value;
}

Capacity RoundCutOracle::round_mincut(const NodeSet& sources, const NodeSet& targets) {
  if (sources.empty() || targets.empty()) throw std::invalid_argument("round_mincut: empty set");
  Capacity best = Capacity::infinite();
  for (NodeId v : targets.nodes()) best = std::min(best, to_node(sources, v));
  return best;
}

std::uint64_t RoundCutOracle::maxflow_calls() const {
  std::lock_guard lock(mutex_);
  return maxflow_calls_;
}

std::uint64_t RoundCutOracle::cache_hits() const {
  std::lock_guard lock(mutex_);
  return cache_hits_;
}

}  // namespace chaincut
