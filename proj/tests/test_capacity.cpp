#include <doctest.h>

#include "chaincut/capacity.hpp"
#include "chaincut/delay.hpp"
#include "chaincut/node_set.hpp"

using namespace chaincut;

TEST_CASE("capacity parsing rounds half to even at micro resolution") {
  CHECK(Capacity::from_units(1.0).micros() == 1'000'000);
  CHECK(Capacity::from_units(0.5).micros() == 500'000);
  CHECK(Capacity::from_units(0.0000005).micros() == 0);
  CHECK(Capacity::from_units(0.0000015).micros() == 2);
  CHECK(Capacity::from_units(0.0000025).micros() == 2);
  CHECK(Capacity::from_units(1e300 * 1e10).is_infinite());
  CHECK_THROWS_AS(Capacity::from_units(-1.0), std::invalid_argument);
}

TEST_CASE("capacity ordering and sums treat infinite as absorbing") {
  const Capacity one = Capacity::from_micros(1'000'000);
  const Capacity inf = Capacity::infinite();
  CHECK(one < inf);
  CHECK((one + one).micros() == 2'000'000);
  CHECK((one + inf).is_infinite());
  CHECK(inf.to_string() == "inf");
  CHECK(Capacity::from_micros(500'000).to_string() == "0.5");
  CHECK(Capacity::from_micros(3'000'000).to_string() == "3");
}

TEST_CASE("capacity text round-trips through double") {
  for (std::int64_t m : {1LL, 7LL, 123'456LL, 999'999LL, 1'000'001LL, 2'718'281LL}) {
    const Capacity c = Capacity::from_micros(m);
    CHECK(Capacity::from_units(c.to_double()) == c);
  }
}

TEST_CASE("node sets trim so equal contents compare equal") {
  NodeSet a{1, 70};
  a.erase(70);
  NodeSet b{1};
  CHECK(a == b);
  CHECK(a.hash() == b.hash());
  CHECK(NodeSet{3, 1, 2}.nodes() == std::vector<NodeId>{1, 2, 3});
  CHECK((NodeSet{1, 2} | NodeSet{2, 3}).size() == 3);
  CHECK((NodeSet{1, 2} & NodeSet{2, 3}) == NodeSet{2});
  CHECK((NodeSet{1, 2} - NodeSet{2, 3}) == NodeSet{1});
  CHECK(NodeSet{2}.is_subset_of(NodeSet{1, 2}));
  CHECK_FALSE(NodeSet{1}.intersects(NodeSet{2}));
  CHECK(NodeSet{}.extent() == 0);
  CHECK(NodeSet{64}.extent() == 65);
  CHECK(NodeSet::all(3) == NodeSet{0, 1, 2});
}

TEST_CASE("tie break prefers fewer nodes then smaller index sequence") {
  CHECK(tie_break_less(NodeSet{5}, NodeSet{0, 1}));
  CHECK(tie_break_less(NodeSet{0, 5}, NodeSet{1, 2}));
  CHECK(tie_break_less(NodeSet{0, 2}, NodeSet{0, 3}));
  CHECK_FALSE(tie_break_less(NodeSet{0, 3}, NodeSet{0, 3}));
}

TEST_CASE("delays are exact fractions with an absorbing infeasible value") {
  const Delay half = Delay::transfer(1'000'000, Capacity::from_micros(2'000'000));
  CHECK(half.to_string() == "1/2");
  CHECK((half + half).to_string() == "1/1");
  CHECK(Delay::transfer(1, Capacity::infinite()) == Delay::zero());
  CHECK_FALSE(Delay::transfer(1, Capacity::from_micros(0)).feasible());
  CHECK_FALSE((half + Delay::infeasible()).feasible());
  CHECK(half < Delay::infeasible());
  CHECK(Delay::from_fraction(2, 6) == Delay::parse("1/3"));
  CHECK(Delay::parse("inf") == Delay::infeasible());
  CHECK(Delay::transfer(1'000'000, Capacity::from_micros(3'000'000)).to_double() == doctest::Approx(1.0 / 3));
}
