#include <doctest.h>

#include <random>

#include "chaincut/coding.hpp"
#include "chaincut/experiments.hpp"
#include "chaincut/fixtures.hpp"
#include "chaincut/gf256.hpp"
#include "chaincut/solvers.hpp"

using namespace chaincut;

namespace {

// Carry-less multiply reduced by the field polynomial, bit by bit.
std::uint8_t slow_mul(std::uint8_t a, std::uint8_t b) {
  unsigned r = 0;
  unsigned x = a;
  for (int i = 0; i < 8; ++i) {
    if ((b >> i & 1U) != 0) r ^= x;
    x <<= 1;
    if ((x & 0x100U) != 0) x ^= 0x11dU;
  }
  return static_cast<std::uint8_t>(r);
}

}  // namespace

TEST_CASE("field multiplication matches shift-and-add") {
  for (unsigned a = 0; a < 256; ++a) {
    for (unsigned b = 0; b < 256; ++b) {
      REQUIRE(gf256::mul(static_cast<std::uint8_t>(a), static_cast<std::uint8_t>(b)) ==
              slow_mul(static_cast<std::uint8_t>(a), static_cast<std::uint8_t>(b)));
    }
  }
  for (unsigned a = 1; a < 256; ++a) {
    CHECK(gf256::mul(static_cast<std::uint8_t>(a), gf256::inv(static_cast<std::uint8_t>(a))) == 1);
  }
  CHECK_THROWS(gf256::inv(0));
}

TEST_CASE("rank by elimination") {
  CHECK(gf256::rank({}) == 0);
  CHECK(gf256::rank({{1, 0}, {0, 1}}) == 2);
  CHECK(gf256::rank({{1, 2}, {2, 4}}) == 1);  // 2 * (1, 2) = (2, 4)
  CHECK(gf256::rank({{0, 0}, {0, 0}}) == 0);
  CHECK(gf256::rank({{1, 1, 0}, {0, 1, 1}, {1, 0, 1}}) == 2);  // rows add to zero
  CHECK(gf256::rank({{3, 7, 9}, {0, 5, 1}, {0, 0, 8}}) == 3);
}

TEST_CASE("butterfly carries two symbols to both sinks") {
  const Network b = butterfly_network();
  const NodeSet sinks{b.require("t1"), b.require("t2")};
  const RoundCertificate c = certify_round(b, NodeSet{b.require("s")}, sinks, 2, 1);
  CHECK(c.achieved);
  CHECK(c.block_length == 1);
  CHECK(c.target_ranks.at(b.require("t1")) == 2);
  CHECK(c.target_ranks.at(b.require("t2")) == 2);
  CHECK_THROWS_AS(certify_round(b, NodeSet{0}, sinks, 3, 1), std::invalid_argument);
}

TEST_CASE("butterfly over GF(2): only the mixing code decodes at both sinks") {
  // Over GF(2), with one coefficient per (unit edge, input), count the
  // assignments that deliver rank 2 at both sinks. Both sinks decode only when
  // the two source-side 2x2 maps are invertible (6 * 6 choices) and all eight
  // downstream coefficients are 1, so c must send the sum.
  const Network b = butterfly_network();
  const UnitDag dag = expand_round(b, NodeSet{0}, NodeSet{5, 6}, 2);
  std::size_t coeffs = 0;
  for (NodeId u : dag.topo_order) {
    const std::size_t inputs = u == dag.source ? 2 : dag.in_edges[u].size();
    coeffs += inputs * dag.out_edges[u].size();
  }
  REQUIRE(coeffs == 16);
  std::size_t successes = 0;
  for (std::uint32_t bits = 0; bits < (1U << coeffs); ++bits) {
    CodingAssignment code;
    code.rate = 2;
    code.global.assign(dag.edges.size(), std::vector<std::uint8_t>(2, 0));
    std::size_t next = 0;
    for (NodeId u : dag.topo_order) {
      const bool src = u == dag.source;
      const std::size_t inputs = src ? 2 : dag.in_edges[u].size();
      for (std::size_t e : dag.out_edges[u]) {
        for (std::size_t i = 0; i < inputs; ++i) {
          const std::uint8_t c = static_cast<std::uint8_t>(bits >> next++ & 1U);
          if (src) {
            code.global[e][i] ^= c;
          } else {
            for (std::size_t j = 0; j < 2; ++j) code.global[e][j] ^= static_cast<std::uint8_t>(c & code.global[dag.in_edges[u][i]][j]);
          }
        }
      }
    }
    if (received_rank(dag, code, 5) == 2 && received_rank(dag, code, 6) == 2) ++successes;
  }
  CHECK(successes == 36);
}

TEST_CASE("random codes never exceed the min-cut rank") {
  const Network b = butterfly_network();
  const UnitDag dag = expand_round(b, NodeSet{0}, NodeSet{5, 6}, 2);
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const CodingAssignment code = random_linear_code(dag, 2, seed);
    CHECK(received_rank(dag, code, 5) <= 2);
    CHECK(received_rank(dag, code, 6) <= 2);
  }
}

TEST_CASE("global coding vectors are the local combinations of the inputs") {
  const Instance inst = example1_fixture();
  const NodeSet senders{inst.network.require("v11"), inst.network.require("v12")};
  const NodeSet receivers{inst.network.require("v21"), inst.network.require("v22")};
  const UnitDag dag = expand_round(inst.network, senders, receivers, 2);
  const CodingAssignment code = random_linear_code(dag, 2, 99);
  for (NodeId u : dag.topo_order) {
    for (std::size_t e : dag.out_edges[u]) {
      std::vector<std::uint8_t> expect(2, 0);
      for (std::size_t i = 0; i < code.local[e].size(); ++i) {
        for (std::size_t j = 0; j < 2; ++j) {
          const std::uint8_t in = u == dag.source ? static_cast<std::uint8_t>(i == j) : code.global[dag.in_edges[u][i]][j];
          expect[j] ^= slow_mul(code.local[e][i], in);
        }
      }
      CHECK(code.global[e] == expect);
    }
  }
}

TEST_CASE("fractional capacities scale the block length") {
  Network net(3);
  net.add_edge(0, 1, Capacity::from_micros(1'500'000));
  net.add_edge(1, 2, Capacity::from_micros(500'000));
  net.add_edge(0, 2, Capacity::from_micros(250'000));
  const RoundUnits u = round_units(net, NodeSet{0}, NodeSet{2});
  CHECK(u.block_length == 4);
  CHECK(u.mincut_units == 3);
  CHECK(certify_round(net, NodeSet{0}, NodeSet{2}, 3, 5).achieved);
}

TEST_CASE("cyclic rounds are rejected") {
  Network net(3);
  net.add_edge(0, 1, Capacity::from_micros(1'000'000));
  net.add_edge(1, 2, Capacity::from_micros(1'000'000));
  net.add_edge(2, 1, Capacity::from_micros(1'000'000));
  net.add_edge(2, 0, Capacity::from_micros(1'000'000));
  CHECK_THROWS_AS(expand_round(net, NodeSet{0}, NodeSet{2}, 1), std::invalid_argument);
}

TEST_CASE("optimal two-by-two placement certifies every round") {
  const Instance inst = example1_fixture();
  const SolveResult r = solve_exhaustive(inst.network, inst.request);
  const PlacementCertificate cert = certify_placement(inst.network, inst.request, r.placement, 3);
  REQUIRE(cert.rounds.size() == 3);
  CHECK(cert.achieved());
  CHECK(cert.rounds[0].rate == 1);
  CHECK(cert.rounds[1].rate == 2);
  CHECK(cert.rounds[2].rate == 2);
}

TEST_CASE("certification is reproducible for a seed") {
  const Network b = butterfly_network();
  const auto a = certify_round(b, NodeSet{0}, NodeSet{5, 6}, 2, 42);
  const auto c = certify_round(b, NodeSet{0}, NodeSet{5, 6}, 2, 42);
  CHECK(a.attempts == c.attempts);
  CHECK(a.target_ranks == c.target_ranks);
}

TEST_CASE("no random code beats a target's own min-cut") {
  // Codes are drawn at one symbol above the round min-cut; each target's rank
  // must still stay within its own max-flow.
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Instance inst = gen_layered_network(3, 2, 0.8, 0.0, seed);
    RoundCutOracle oracle(inst.network);
    const SolveResult r = solve_greedy(oracle, inst.request);
    if (!r.delay.feasible()) continue;
    for (std::size_t k = 1; k <= 3; ++k) {
      const NodeSet from = round_senders(inst.request, r.placement, k);
      const NodeSet to = round_receivers(inst.request, r.placement, k);
      const RoundUnits u = round_units(inst.network, from, to);
      if (u.mincut.is_infinite()) continue;
      const auto h = static_cast<std::size_t>(u.mincut_units) + 1;
      const UnitDag dag = expand_round(inst.network, from, to, h);
      for (std::uint64_t s = 0; s < 20; ++s) {
        const CodingAssignment code = random_linear_code(dag, h, s);
        bool all_full = true;
        for (NodeId v : to.nodes()) {
          const auto own = static_cast<std::size_t>(round_units(inst.network, from, NodeSet{v}).mincut_units);
          const std::size_t rank = received_rank(dag, code, v);
          CHECK(rank <= own);
          all_full = all_full && rank == h;
        }
        CHECK_FALSE(all_full);
      }
    }
  }
}
