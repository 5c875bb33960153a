#include <doctest.h>

#include <algorithm>
#include <set>

#include "bpart/oracle.hpp"
#include "bpart/tree.hpp"

using namespace bpart;

namespace {
const basis b2{2};
const basis b3{3};

std::set<partition> as_set(const std::vector<partition>& v) { return {v.begin(), v.end()}; }
}  // namespace

TEST_CASE("carry is the largest dividing power") {
  const unsigned want2[] = {0, 1, 0, 2, 0, 1, 0, 3, 0, 1};
  const unsigned want3[] = {0, 0, 1, 0, 0, 1, 0, 0, 2, 0};
  for (value_t i = 1; i <= 10; ++i) {
    CHECK(carry(i, b2) == want2[i - 1]);
    CHECK(carry(i, b3) == want3[i - 1]);
  }
  CHECK(carry(64, b2) == 6);
  CHECK(carry(81, b3) == 4);
  CHECK_THROWS_AS(carry(0, b2), std::domain_error);
}

TEST_CASE("children apply every admissible odometer step") {
  CHECK(children(partition({1, 1}, b2)) ==
        std::vector<partition>{partition({2, 1}, b2), partition({0, 2}, b2),
                               partition({0, 0, 1}, b2)});
  CHECK(children(partition({2, 2}, b3)) ==
        std::vector<partition>{partition({3, 2}, b3), partition({0, 3}, b3),
                               partition({0, 0, 1}, b3)});
  CHECK(children(partition({}, b2)) == std::vector<partition>{partition({1}, b2)});
  CHECK(children(partition({2, 1}, b2)) == std::vector<partition>{partition({3, 1}, b2)});
}

TEST_CASE("levels of the global tree are the partition sets") {
  auto lv2 = levels(b2, 8);
  REQUIRE(lv2.size() == 9);
  const std::size_t want2[] = {1, 1, 2, 2, 4, 4, 6, 6, 10};
  for (std::size_t d = 0; d <= 8; ++d) {
    CHECK(lv2[d].size() == want2[d]);
    CHECK(as_set(lv2[d]) == as_set(oracle::brute_enumerate(d, b2)));
  }
  auto lv3 = levels(b3, 9);
  const std::size_t want3[] = {1, 1, 1, 2, 2, 2, 3, 3, 3, 5};
  for (std::size_t d = 0; d <= 9; ++d) CHECK(lv3[d].size() == want3[d]);
}

TEST_CASE("level streams honour their caps") {
  level_stream s(b2, 1'000);
  CHECK(s.depth() == 0);
  CHECK(s.members().size() == 1);
  s.advance();
  s.advance();
  CHECK(s.depth() == 2);
  CHECK(s.members().size() == 2);
  level_stream tight(b2, 3);
  CHECK_THROWS_AS((tight.advance(), tight.advance()), cap_exceeded);
  CHECK_THROWS_AS(levels(b2, 30, 100), cap_exceeded);
}

TEST_CASE("tail extension enumerates exactly the representations") {
  for (unsigned bv = 2; bv <= 4; ++bv) {
    const basis b{bv};
    for (value_t n = 0; n <= 40; ++n)
      CHECK(as_set(enumerate(n, b)) == as_set(oracle::brute_enumerate(n, b)));
  }
  CHECK(enumerate(0, b2) == std::vector<partition>{partition({}, b2)});
  CHECK_THROWS_AS(enumerate(400, b2, 100), cap_exceeded);
}

TEST_CASE("rightmost branch tracks canonical forms") {
  CHECK(rightmost_branch(b2, 1) == partition({}, b2));
  CHECK(rightmost_branch(b2, 5) == partition({0, 0, 1}, b2));
  CHECK(rightmost_branch(b3, 10) == partition({0, 0, 1}, b3));
  CHECK_THROWS_AS(rightmost_branch(b2, 0), std::domain_error);
  for (value_t i = 1; i <= 100; ++i) CHECK(rightmost_branch(b2, i) == canonical(i - 1, b2));
}

TEST_CASE("subtree order detects the isomorphism class") {
  CHECK(subtree_order(partition({0, 0, 2}, b2)) == 3);
  CHECK(subtree_order(partition({5}, b3)) == 1);
  CHECK(subtree_order(partition({0, 4}, b2)) == 2);
  CHECK(!subtree_order(partition({1, 0, 2}, b2)).has_value());
  CHECK(!subtree_order(partition({}, b2)).has_value());
  CHECK(!subtree_order(partition({0, 1}, b2)).has_value());
}

TEST_CASE("order-k subtrees repeat the recursive structure") {
  // walk the first rightmost sons from an order-3 root and check son orders
  const partition r1({0, 0, 2}, b2);
  REQUIRE(subtree_order(r1) == 3);
  auto c1 = children(r1);
  REQUIRE(c1.size() == 1);
  const partition r2 = c1.back();
  CHECK(r2 == partition({1, 0, 2}, b2));
  auto c2 = children(r2);
  REQUIRE(c2.size() == 2);
  CHECK(subtree_order(c2[0]) == 1);  // (2,0,2) roots an order-1 chain
  const partition r3 = c2.back();
  CHECK(r3 == partition({0, 1, 2}, b2));
  auto c3 = children(r3);
  REQUIRE(c3.size() == 1);
  const partition r4 = c3.back();
  CHECK(r4 == partition({1, 1, 2}, b2));
  auto c4 = children(r4);
  REQUIRE(c4.size() == 3);
  CHECK(subtree_order(c4[1]) == 2);  // (0,2,2) roots an order-2 copy
  const partition r5 = c4.back();
  CHECK(r5 == partition({0, 0, 3}, b2));
  CHECK(subtree_order(r5) == 3);  // rightmost son repeats the order
}

TEST_CASE("callback enumeration and counting agree on sizes") {
  std::size_t seen = 0;
  for_each_partition(30, b2, [&](const partition& p) {
    CHECK(value(p) == 30);
    ++seen;
  });
  CHECK(seen == 166);
}
