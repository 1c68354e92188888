#include "chaincut/chain.hpp"

#include <algorithm>
#include <stdexcept>

namespace chaincut {

NodeSet round_senders(const ChainRequest& req, const Placement& p, std::size_t k) {
  if (k < 1 || k > req.chain_length() + 1) throw std::out_of_range("round index out of range");
  return k == 1 ? NodeSet{req.source} : p.sets.at(k - 2);
}

NodeSet round_receivers(const ChainRequest& req, const Placement& p, std::size_t k) {
  if (k < 1 || k > req.chain_length() + 1) throw std::out_of_range("round index out of range");
  return k == req.chain_length() + 1 ? NodeSet{req.dest} : p.sets.at(k - 1);
}

void check_placement(const ChainRequest& req, const Placement& p) {
  if (p.sets.size() != req.chain_length()) {
    throw std::invalid_argument("placement has " + std::to_string(p.sets.size()) + " sets, chain has " +
                                std::to_string(req.chain_length()) + " functions");
  }
  for (std::size_t k = 0; k < p.sets.size(); ++k) {
    if (p.sets[k].empty()) throw std::invalid_argument("placement set " + std::to_string(k + 1) + " is empty");
    if (!p.sets[k].is_subset_of(req.stages[k])) {
      throw std::invalid_argument("placement set " + std::to_string(k + 1) + " leaves its stage");
    }
  }
}

Delay round_delay(RoundCutOracle& oracle, const ChainRequest& req, const Placement& p, std::size_t k) {
  check_placement(req, p);
  if (req.sizes.size() != req.chain_length() + 1) throw std::invalid_argument("sizes must have K+1 entries");
  const Capacity cut = oracle.round_mincut(round_senders(req, p, k), round_receivers(req, p, k));
  return Delay::transfer(req.sizes[k - 1], cut);
}

Delay round_delay(const Network& net, const ChainRequest& req, const Placement& p, std::size_t k) {
  RoundCutOracle oracle(net);
  return round_delay(oracle, req, p, k);
}

Delay end_to_end_delay(RoundCutOracle& oracle, const ChainRequest& req, const Placement& p) {
  Delay total;
  for (std::size_t k = 1; k <= req.chain_length() + 1; ++k) total += round_delay(oracle, req, p, k);
  return total;
}

Delay end_to_end_delay(const Network& net, const ChainRequest& req, const Placement& p) {
  RoundCutOracle oracle(net);
  return end_to_end_delay(oracle, req, p);
}

bool ValidationReport::ok() const { return errors() == 0; }

std::size_t ValidationReport::warnings() const {
  return static_cast<std::size_t>(std::count_if(findings.begin(), findings.end(),
                                                [](const Finding& f) { return f.severity == Severity::Warning; }));
}

std::size_t ValidationReport::errors() const { return findings.size() - warnings(); }

namespace {

// Nodes reachable from `from` over positive-capacity edges.
NodeSet reachable(const Network& net, const NodeSet& from) {
  NodeSet seen = from;
  std::vector<NodeId> stack = from.nodes();
  while (!stack.empty()) {
    const NodeId u = stack.back();
    stack.pop_back();
    for (const Edge& e : net.edges()) {
      if (e.tail == u && !e.capacity.is_zero() && !seen.contains(e.head)) {
        seen.insert(e.head);
        stack.push_back(e.head);
      }
    }
  }
  return seen;
}

}  // namespace

ValidationReport validate(const Network& net, const ChainRequest& req) {
  ValidationReport report;
  auto error = [&](std::string m) { report.findings.push_back({Severity::Error, std::move(m)}); };
  auto warn = [&](std::string m) { report.findings.push_back({Severity::Warning, std::move(m)}); };

  const std::size_t K = req.chain_length();
  if (!net.contains(req.source)) error("source node out of range");
  if (!net.contains(req.dest)) error("destination node out of range");
  if (req.source == req.dest) warn("source and destination coincide");
  if (req.sizes.size() != K + 1) {
    error("expected " + std::to_string(K + 1) + " payload sizes, got " + std::to_string(req.sizes.size()));
  }
  for (std::size_t k = 0; k < req.sizes.size(); ++k) {
    if (req.sizes[k] <= 0) error("payload size L_" + std::to_string(k) + " must be positive");
  }
  for (std::size_t k = 0; k < K; ++k) {
    const std::string name = "stage " + std::to_string(k + 1);
    if (req.stages[k].empty()) {
      error(name + " has no candidate nodes");
      continue;
    }
    if (req.stages[k].extent() > net.node_count()) {
      error(name + " references a node outside the network");
      continue;
    }
    if (req.stages[k].contains(req.source)) warn(name + " contains the source");
    if (req.stages[k].contains(req.dest)) warn(name + " contains the destination");
    for (std::size_t j = k + 1; j < K; ++j) {
      if (req.stages[k].intersects(req.stages[j])) {
        warn(name + " overlaps stage " + std::to_string(j + 1) + " (split multi-function nodes first)");
      }
    }
  }
  if (!report.ok()) return report;

  // Every candidate of a stage should be reachable from the previous stage.
  NodeSet prev{req.source};
  for (std::size_t k = 0; k <= K; ++k) {
    const NodeSet next = k < K ? req.stages[k] : NodeSet{req.dest};
    const NodeSet missing = next - reachable(net, prev);
    for (NodeId v : missing.nodes()) {
      warn("node " + net.label(v) + " of stage " + std::to_string(k + 1) + " is unreachable from stage " +
           std::to_string(k));
    }
    prev = next;
  }
  return report;
}

}  // namespace chaincut
