#include "chaincut/fixtures.hpp"

#include <stdexcept>
#include <string>

namespace chaincut {

Instance layered_fixture(std::size_t stage_size, std::size_t chain_length, std::int64_t payload_micros) {
  if (stage_size == 0) throw std::invalid_argument("stage size must be positive");
  Instance inst;
  Network& net = inst.network;
  ChainRequest& req = inst.request;
  const Capacity unit = Capacity::from_micros(Capacity::kMicrosPerUnit);

  req.source = net.add_node("s");
  std::vector<std::vector<NodeId>> stages(chain_length);
  for (std::size_t k = 0; k < chain_length; ++k) {
    for (std::size_t n = 0; n < stage_size; ++n) {
      stages[k].push_back(net.add_node("v" + std::to_string(k + 1) + "_" + std::to_string(n + 1)));
    }
  }
  req.dest = net.add_node("d");

  std::vector<NodeId> prev{req.source};
  for (std::size_t k = 0; k <= chain_length; ++k) {
    const std::vector<NodeId> next = k < chain_length ? stages[k] : std::vector<NodeId>{req.dest};
    for (NodeId u : prev) {
      for (NodeId v : next) net.add_edge(u, v, unit);
    }
    prev = next;
  }
  for (const auto& st : stages) req.stages.emplace_back(st);
  req.sizes.assign(chain_length + 1, payload_micros);
  return inst;
}

Instance example2_fixture(std::size_t stage_size, std::size_t chain_length) {
  return layered_fixture(stage_size, chain_length);
}

Instance example1_fixture() {
  Instance inst = layered_fixture(2, 2);
  std::vector<std::string> labels;
  for (NodeId v = 0; v < inst.network.node_count(); ++v) {
    std::string l = inst.network.label(v);
    if (l.size() == 4 && l[0] == 'v' && l[2] == '_') l = {'v', l[1], l[3]};
    labels.push_back(std::move(l));
  }
  inst.network = Network(std::move(labels), inst.network.edges());
  return inst;
}

Network butterfly_network() {
  Network net;
  const NodeId s = net.add_node("s");
  const NodeId a = net.add_node("a");
  const NodeId b = net.add_node("b");
  const NodeId c = net.add_node("c");
  const NodeId e = net.add_node("e");
  const NodeId t1 = net.add_node("t1");
  const NodeId t2 = net.add_node("t2");
  const Capacity unit = Capacity::from_micros(Capacity::kMicrosPerUnit);
  for (auto [u, v] : {std::pair{s, a}, {s, b}, {a, c}, {b, c}, {c, e}, {e, t1}, {e, t2}, {a, t1}, {b, t2}}) {
    net.add_edge(u, v, unit);
  }
  return net;
}

}  // namespace chaincut
