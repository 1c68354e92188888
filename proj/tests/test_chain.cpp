#include <doctest.h>

#include "chaincut/chain.hpp"
#include "chaincut/experiments.hpp"
#include "chaincut/fixtures.hpp"

using namespace chaincut;

namespace {

Placement by_label(const Network& net, std::vector<std::vector<std::string>> sets) {
  Placement p;
  for (const auto& s : sets) {
    NodeSet ns;
    for (const auto& l : s) ns.insert(net.require(l));
    p.sets.push_back(ns);
  }
  return p;
}

}  // namespace

TEST_CASE("rounds chain source, placement sets and destination") {
  const Instance inst = example1_fixture();
  const Placement p = by_label(inst.network, {{"v11"}, {"v21", "v22"}});
  CHECK(round_senders(inst.request, p, 1) == NodeSet{inst.request.source});
  CHECK(round_receivers(inst.request, p, 1) == p.sets[0]);
  CHECK(round_senders(inst.request, p, 3) == p.sets[1]);
  CHECK(round_receivers(inst.request, p, 3) == NodeSet{inst.request.dest});
  CHECK_THROWS_AS(round_senders(inst.request, p, 0), std::out_of_range);
  CHECK_THROWS_AS(round_receivers(inst.request, p, 4), std::out_of_range);
}

TEST_CASE("placement delay on the two-by-two fixture") {
  const Instance inst = example1_fixture();
  const Network& net = inst.network;
  CHECK(end_to_end_delay(net, inst.request, by_label(net, {{"v11"}, {"v21"}})).to_string() == "3/1");
  CHECK(end_to_end_delay(net, inst.request, by_label(net, {{"v11", "v12"}, {"v21", "v22"}})).to_string() == "2/1");
  CHECK(end_to_end_delay(net, inst.request, by_label(net, {{"v11"}, {"v21", "v22"}})).to_string() == "5/2");
  RoundCutOracle oracle(net);
  const Placement both = by_label(net, {{"v11", "v12"}, {"v21", "v22"}});
  CHECK(round_delay(oracle, inst.request, both, 2).to_string() == "1/2");
  CHECK(end_to_end_delay(oracle, inst.request, both) == end_to_end_delay(net, inst.request, both));
}

TEST_CASE("delay scales with payload sizes") {
  Instance inst = example1_fixture();
  inst.request.sizes = {2'000'000, 1'000'000, 3'000'000};
  const Placement p = by_label(inst.network, {{"v11"}, {"v21"}});
  CHECK(end_to_end_delay(inst.network, inst.request, p).to_string() == "6/1");
}

TEST_CASE("placements must stay inside their stages") {
  const Instance inst = example1_fixture();
  CHECK_THROWS_AS(check_placement(inst.request, by_label(inst.network, {{"v21"}, {"v21"}})), std::invalid_argument);
  CHECK_THROWS_AS(check_placement(inst.request, Placement{{NodeSet{}, NodeSet{3}}}), std::invalid_argument);
  CHECK_THROWS_AS(check_placement(inst.request, by_label(inst.network, {{"v11"}})), std::invalid_argument);
}

TEST_CASE("disconnected rounds make the placement infeasible") {
  Instance inst = example1_fixture();
  std::vector<Edge> kept;
  for (const Edge& e : inst.network.edges()) {
    if (inst.network.label(e.head) != "v21") kept.push_back(e);
  }
  std::vector<std::string> labels;
  for (NodeId v = 0; v < inst.network.node_count(); ++v) labels.push_back(inst.network.label(v));
  const Network cut(labels, kept);
  CHECK_FALSE(end_to_end_delay(cut, inst.request, by_label(cut, {{"v11"}, {"v21"}})).feasible());
  CHECK(end_to_end_delay(cut, inst.request, by_label(cut, {{"v11"}, {"v22"}})).feasible());
}

TEST_CASE("validation separates hard errors from warnings") {
  Instance inst = example1_fixture();
  CHECK(validate(inst.network, inst.request).empty());

  ChainRequest bad = inst.request;
  bad.sizes.pop_back();
  CHECK_FALSE(validate(inst.network, bad).ok());

  bad = inst.request;
  bad.sizes[0] = 0;
  CHECK_FALSE(validate(inst.network, bad).ok());

  bad = inst.request;
  bad.stages[1] = NodeSet{};
  CHECK_FALSE(validate(inst.network, bad).ok());

  bad = inst.request;
  bad.stages[1] = NodeSet{99};
  CHECK_FALSE(validate(inst.network, bad).ok());

  ChainRequest odd = inst.request;
  odd.stages[1] = odd.stages[0];
  const ValidationReport r = validate(inst.network, odd);
  CHECK(r.ok());
  CHECK(r.warnings() > 0);
}

TEST_CASE("enlarging one set only touches its two rounds") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Instance inst = gen_layered_network(4, 4, 0.9, 0.5, seed);
    RoundCutOracle oracle(inst.network);
    Placement p;
    for (const NodeSet& s : inst.request.stages) p.sets.push_back(NodeSet{s.nodes().front()});
    const std::size_t j = 1 + seed % 4;
    Placement q = p;
    q.sets[j - 1] = inst.request.stages[j - 1];
    Delay sum;
    for (std::size_t k = 1; k <= 5; ++k) {
      sum += round_delay(oracle, inst.request, q, k);
      if (k != j && k != j + 1) CHECK(round_delay(oracle, inst.request, q, k) == round_delay(oracle, inst.request, p, k));
    }
    CHECK(sum == end_to_end_delay(oracle, inst.request, q));
  }
}

TEST_CASE("delay scales linearly with sizes and inversely with capacities") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    Instance inst = gen_layered_network(3, 3, 1.0, 0.5, seed);
    Placement p;
    for (const NodeSet& s : inst.request.stages) p.sets.push_back(s);
    const Delay base = end_to_end_delay(inst.network, inst.request, p);

    ChainRequest bigger = inst.request;
    for (auto& L : bigger.sizes) L *= 3;
    CHECK(end_to_end_delay(inst.network, bigger, p) == base.scaled(mpq_class(3)));

    std::vector<std::string> names;
    for (NodeId v = 0; v < inst.network.node_count(); ++v) names.push_back(inst.network.label(v));
    std::vector<Edge> edges = inst.network.edges();
    for (Edge& e : edges) e.capacity = Capacity::from_micros(e.capacity.micros() * 4);
    CHECK(end_to_end_delay(Network(names, edges), inst.request, p) == base.scaled(mpq_class(1, 4)));
  }
}
