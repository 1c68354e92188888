#include "chaincut/coding.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>

#include "chaincut/gf256.hpp"
#include "chaincut/netgraph.hpp"

namespace chaincut {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

struct Restricted {
  AuxiliaryNetwork aux;
  std::vector<std::size_t> edges;  // indices into aux.network.edges()
  std::vector<bool> node_used;
};

// Positive-capacity edges on some path from the extra node to a receiver.
Restricted restrict_round(const Network& net, const NodeSet& senders, const NodeSet& receivers) {
  if (receivers.empty()) throw std::invalid_argument("certify: empty receiver set");
  net.check_nodes(receivers);
  Restricted r{build_auxiliary_multicast(net, senders), {}, {}};
  const Network& g = r.aux.network;
  const std::size_t n = g.node_count();
  std::vector<bool> fwd(n, false);
  std::vector<bool> bwd(n, false);

  auto sweep = [&](std::vector<bool>& seen, std::vector<NodeId> stack, bool forward) {
    for (NodeId v : stack) seen[v] = true;
    while (!stack.empty()) {
      const NodeId u = stack.back();
      stack.pop_back();
      for (const Edge& e : g.edges()) {
        if (e.capacity.is_zero()) continue;
        const NodeId from = forward ? e.tail : e.head;
        const NodeId to = forward ? e.head : e.tail;
        if (from == u && !seen[to]) {
          seen[to] = true;
          stack.push_back(to);
        }
      }
    }
  };
  sweep(fwd, {r.aux.extra_node}, true);
  sweep(bwd, receivers.nodes(), false);

  r.node_used.assign(n, false);
  for (std::size_t i = 0; i < g.edges().size(); ++i) {
    const Edge& e = g.edges()[i];
    if (e.capacity.is_zero() || !fwd[e.tail] || !bwd[e.head]) continue;
    r.edges.push_back(i);
    r.node_used[e.tail] = true;
    r.node_used[e.head] = true;
  }
  return r;
}

std::int64_t block_length_for(const Restricted& r) {
  std::int64_t g = Capacity::kMicrosPerUnit;
  for (std::size_t i : r.edges) {
    const Capacity& c = r.aux.network.edges()[i].capacity;
    if (!c.is_infinite()) g = std::gcd(g, c.micros());
  }
  const std::int64_t t = Capacity::kMicrosPerUnit / g;
  if (t > kMaxBlockLength) throw std::invalid_argument("block length exceeds limit");
  return t;
}

}  // namespace

RoundUnits round_units(const Network& net, const NodeSet& senders, const NodeSet& receivers) {
  const Restricted r = restrict_round(net, senders, receivers);
  RoundUnits u;
  u.block_length = block_length_for(r);
  u.mincut = multicast_mincut(net, senders, receivers);
  if (!u.mincut.is_infinite()) u.mincut_units = u.mincut.micros() * u.block_length / Capacity::kMicrosPerUnit;
  return u;
}

UnitDag expand_round(const Network& net, const NodeSet& senders, const NodeSet& receivers, std::size_t rate) {
  if (rate == 0) throw std::invalid_argument("expand_round: rate must be positive");
  const Restricted r = restrict_round(net, senders, receivers);
  const Network& g = r.aux.network;
  UnitDag dag;
  dag.node_count = g.node_count();
  dag.source = r.aux.extra_node;
  dag.block_length = block_length_for(r);

  // Kahn's algorithm over relevant nodes.
  std::vector<std::size_t> indeg(dag.node_count, 0);
  for (std::size_t i : r.edges) ++indeg[g.edges()[i].head];
  std::vector<NodeId> ready;
  for (NodeId v = 0; v < dag.node_count; ++v) {
    if (r.node_used[v] && indeg[v] == 0) ready.push_back(v);
  }
  while (!ready.empty()) {
    const NodeId u = ready.back();
    ready.pop_back();
    dag.topo_order.push_back(u);
    for (std::size_t i : r.edges) {
      if (g.edges()[i].tail == u && --indeg[g.edges()[i].head] == 0) ready.push_back(g.edges()[i].head);
    }
  }
  const auto used = static_cast<std::size_t>(std::count(r.node_used.begin(), r.node_used.end(), true));
  if (dag.topo_order.size() != used) {
    throw std::invalid_argument("round subgraph is cyclic; coding certification needs an acyclic round");
  }

  std::size_t total = 0;
  for (std::size_t i : r.edges) {
    const Capacity& c = g.edges()[i].capacity;
    const std::size_t units =
        c.is_infinite() ? rate
                        : static_cast<std::size_t>(c.micros() * dag.block_length / Capacity::kMicrosPerUnit);
    total += units;
    if (total > kMaxUnitEdges) throw std::invalid_argument("time expansion exceeds unit edge limit");
    for (std::size_t j = 0; j < units; ++j) dag.edges.push_back({g.edges()[i].tail, g.edges()[i].head, i});
  }
  dag.in_edges.assign(dag.node_count, {});
  dag.out_edges.assign(dag.node_count, {});
  for (std::size_t e = 0; e < dag.edges.size(); ++e) {
    dag.out_edges[dag.edges[e].tail].push_back(e);
    dag.in_edges[dag.edges[e].head].push_back(e);
  }
  return dag;
}

CodingAssignment random_linear_code(const UnitDag& dag, std::size_t rate, std::uint64_t seed) {
  CodingAssignment code;
  code.rate = rate;
  code.seed = seed;
  code.local.assign(dag.edges.size(), {});
  code.global.assign(dag.edges.size(), std::vector<std::uint8_t>(rate, 0));
  std::mt19937_64 rng(seed);

  for (NodeId u : dag.topo_order) {
    const bool is_source = u == dag.source;
    const std::size_t inputs = is_source ? rate : dag.in_edges[u].size();
    for (std::size_t e : dag.out_edges[u]) {
      auto& coeffs = code.local[e];
      coeffs.resize(inputs);
      for (auto& c : coeffs) c = static_cast<std::uint8_t>(rng() & 0xff);
      auto& out = code.global[e];
      for (std::size_t i = 0; i < inputs; ++i) {
        if (is_source) {
          out[i] ^= coeffs[i];
        } else {
          gf256::axpy(out, coeffs[i], code.global[dag.in_edges[u][i]]);
        }
      }
    }
  }
  return code;
}

std::size_t received_rank(const UnitDag& dag, const CodingAssignment& code, NodeId node) {
  if (node == dag.source) return code.rate;
  std::vector<std::vector<std::uint8_t>> rows;
  for (std::size_t e : dag.in_edges.at(node)) rows.push_back(code.global[e]);
  return gf256::rank(std::move(rows));
}

RoundCertificate certify_round(const Network& net, const NodeSet& senders, const NodeSet& receivers, std::size_t rate,
                               std::uint64_t seed, std::size_t retries) {
  if (rate == 0) throw std::invalid_argument("certify_round: rate must be positive");
  const RoundUnits units = round_units(net, senders, receivers);
  if (!units.mincut.is_infinite() && rate > static_cast<std::size_t>(units.mincut_units)) {
    throw std::invalid_argument("rate " + std::to_string(rate) + " exceeds the round min-cut of " +
                                std::to_string(units.mincut_units) + " units per block");
  }
  const UnitDag dag = expand_round(net, senders, receivers, rate);
  RoundCertificate cert;
  cert.rate = rate;
  cert.block_length = dag.block_length;
  const std::size_t tries = std::max<std::size_t>(retries, 1);
  for (std::size_t attempt = 0; attempt < tries; ++attempt) {
    const CodingAssignment code = random_linear_code(dag, rate, splitmix64(seed + attempt));
    cert.attempts = attempt + 1;
    cert.target_ranks.clear();
    bool ok = true;
    for (NodeId v : receivers.nodes()) {
      const std::size_t rk = received_rank(dag, code, v);
      cert.target_ranks[v] = rk;
      ok = ok && rk >= rate;
    }
    if (ok) {
      cert.achieved = true;
      break;
    }
  }
  return cert;
}

bool PlacementCertificate::achieved() const {
  return !rounds.empty() &&
         std::all_of(rounds.begin(), rounds.end(), [](const RoundCertificate& r) { return r.achieved; });
}

PlacementCertificate certify_placement(const Network& net, const ChainRequest& req, const Placement& placement,
                                       std::uint64_t seed, std::size_t retries) {
  check_placement(req, placement);
  PlacementCertificate out;
  for (std::size_t k = 1; k <= req.chain_length() + 1; ++k) {
    const NodeSet senders = round_senders(req, placement, k);
    const NodeSet receivers = round_receivers(req, placement, k);
    const RoundUnits units = round_units(net, senders, receivers);
    if (units.mincut.is_infinite()) {
      RoundCertificate c;
      c.achieved = true;
      c.note = "receivers already hold the data";
      out.rounds.push_back(c);
      continue;
    }
    if (units.mincut_units == 0) {
      RoundCertificate c;
      c.applicable = false;
      c.note = "infeasible round: zero min-cut";
      out.rounds.push_back(c);
      continue;
    }
    out.rounds.push_back(certify_round(net, senders, receivers, static_cast<std::size_t>(units.mincut_units),
                                       splitmix64(seed ^ (k * 0x632be59bd9b4e019ULL)), retries));
  }
  return out;
}

}  // namespace chaincut
