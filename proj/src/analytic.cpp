#include "chaincut/analytic.hpp"

#include <algorithm>
#include <cstdio>
#include <stdexcept>
#include <string>

namespace chaincut {

void check_params(const CompleteGraphParams& p) {
  if (p.stage_size == 0 || p.chain_length == 0) throw std::invalid_argument("N and K must be positive");
  const std::size_t need = p.chain_length * p.stage_size + p.stage_size + 3;
  if (p.total_nodes < need) {
    throw std::invalid_argument("complete graph needs at least " + std::to_string(need) + " nodes");
  }
  if (p.epsilon_micros < 1) throw std::invalid_argument("epsilon must be at least one micro-unit");
  if (p.payload_micros < 1) throw std::invalid_argument("payload must be positive");
  // Largest sending-set cut must stay below a unit link.
  const auto v = static_cast<std::int64_t>(p.total_nodes);
  std::int64_t worst = 0;
  for (std::int64_t a = 1; a <= static_cast<std::int64_t>(p.stage_size); ++a) worst = std::max(worst, a * (v - a));
  if (p.epsilon_micros * worst >= Capacity::kMicrosPerUnit) {
    throw std::invalid_argument("epsilon too large: epsilon * a * (|V| - a) must stay below 1");
  }
}

Instance complete_graph_network(const CompleteGraphParams& p) {
  check_params(p);
  Instance inst;
  Network& net = inst.network;
  ChainRequest& req = inst.request;
  req.source = net.add_node("s");
  req.dest = net.add_node("d");
  req.stages.resize(p.chain_length);
  std::vector<bool> narrow(p.total_nodes, false);
  narrow[req.source] = true;
  for (std::size_t k = 0; k < p.chain_length; ++k) {
    for (std::size_t n = 0; n < p.stage_size; ++n) {
      const NodeId v = net.add_node("v" + std::to_string(k + 1) + "_" + std::to_string(n + 1));
      req.stages[k].insert(v);
      narrow[v] = true;
    }
  }
  for (std::size_t i = 0; net.node_count() < p.total_nodes; ++i) net.add_node("r" + std::to_string(i + 1));

  const Capacity eps = Capacity::from_micros(p.epsilon_micros);
  const Capacity unit = Capacity::from_micros(Capacity::kMicrosPerUnit);
  for (NodeId u = 0; u < p.total_nodes; ++u) {
    for (NodeId v = 0; v < p.total_nodes; ++v) {
      if (u != v) net.add_edge(u, v, narrow[u] ? eps : unit);
    }
  }
  req.sizes.assign(p.chain_length + 1, p.payload_micros);
  return inst;
}

Capacity closed_form_mincut(const CompleteGraphParams& p, std::size_t m) {
  if (m < 1 || m > p.stage_size) throw std::out_of_range("sending set size out of range");
  const auto mm = static_cast<std::int64_t>(m);
  return Capacity::from_micros(p.epsilon_micros * mm * (static_cast<std::int64_t>(p.total_nodes) - mm));
}

CompleteGraphDelays complete_graph_delays(const CompleteGraphParams& p, std::size_t alpha) {
  check_params(p);
  if (alpha < 1 || alpha > std::min(p.stage_size, p.total_nodes / 2)) {
    throw std::out_of_range("alpha must lie in [1, min(N, |V|/2)]");
  }
  const auto K = static_cast<std::int64_t>(p.chain_length);
  const Delay first = Delay::transfer(p.payload_micros, closed_form_mincut(p, 1));
  const Delay later = Delay::transfer(p.payload_micros, closed_form_mincut(p, alpha));
  CompleteGraphDelays out;
  out.optimal = first + later.scaled(mpq_class(K));
  out.no_redundancy = first.scaled(mpq_class(K + 1));
  out.ratio = out.no_redundancy.value() / out.optimal.value();
  out.ratio.canonicalize();
  return out;
}

mpq_class normalized(const Delay& d, const CompleteGraphParams& p) {
  mpq_class factor(static_cast<long>(p.epsilon_micros), static_cast<long>(p.payload_micros));
  factor.canonicalize();
  mpq_class r = d.value() * factor;
  r.canonicalize();
  return r;
}

void write_tradeoff_csv(std::ostream& out, const CompleteGraphParams& p) {
  out << "alpha,optimal_normalized,noredundancy_normalized,ratio\n";
  const std::size_t top = std::min(p.stage_size, p.total_nodes / 2);
  char buf[160];
  for (std::size_t a = 1; a <= top; ++a) {
    const auto d = complete_graph_delays(p, a);
    std::snprintf(buf, sizeof buf, "%zu,%.9g,%.9g,%.9g\n", a, normalized(d.optimal, p).get_d(),
                  normalized(d.no_redundancy, p).get_d(), d.ratio.get_d());
    out << buf;
  }
}

}  // namespace chaincut
