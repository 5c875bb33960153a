#include <doctest.h>

#include <algorithm>

#include "bpart/oracle.hpp"
#include "bpart/partition.hpp"

using namespace bpart;

namespace {
const basis b2{2};
const basis b3{3};

partition make(std::vector<part_t> parts, basis b) { return partition(std::move(parts), b); }
}  // namespace

TEST_CASE("construction normalizes away trailing zeros") {
  CHECK(make({2, 1, 0, 0}, b2) == make({2, 1}, b2));
  CHECK(make({0}, b2) == make({}, b2));
  CHECK(make({0, 0, 1}, b2).length() == 3);
  CHECK(partition::single(0, b3).length() == 0);
  CHECK(partition::single(7, b3) == make({7}, b3));
  CHECK_THROWS_AS(basis(1), std::invalid_argument);
  CHECK_THROWS_AS(basis(0), std::invalid_argument);
}

TEST_CASE("value and canonical invert each other") {
  CHECK(value(make({}, b2)) == 0);
  CHECK(value(make({1, 0, 2}, b2)) == 9);
  CHECK(value(make({0, 3}, b3)) == 9);
  CHECK(canonical(9, b2) == make({1, 0, 0, 1}, b2));
  CHECK(canonical(9, b3) == make({0, 0, 1}, b3));
  CHECK(canonical(0, b2) == make({}, b2));
  for (value_t n = 0; n <= 200; ++n) {
    CHECK(value(canonical(n, b2)) == n);
    CHECK(value(canonical(n, b3)) == n);
  }
}

TEST_CASE("value refuses to wrap around") {
  std::vector<part_t> parts(64, 0);
  parts[63] = 2;
  CHECK_THROWS_AS(value(make(std::move(parts), b2)), std::overflow_error);
}

TEST_CASE("firing moves one unit up at the cost of b") {
  CHECK(fire(make({4}, b2), 0) == make({2, 1}, b2));
  CHECK(fire(make({2, 1}, b2), 0) == make({0, 2}, b2));
  CHECK(fire(make({0, 2}, b2), 1) == make({0, 0, 1}, b2));
  CHECK(fire(make({9}, b3), 0) == make({6, 1}, b3));
  CHECK_THROWS_AS(fire(make({2, 1}, b2), 2), std::out_of_range);
  CHECK_THROWS_AS(fire(make({1, 2}, b2), 0), std::domain_error);
}

TEST_CASE("unfire undoes fire") {
  CHECK(unfire(make({0, 1}, b3), 1) == make({3}, b3));
  CHECK(unfire(make({0, 2}, b2), 1) == make({2, 1}, b2));
  CHECK_THROWS_AS(unfire(make({0, 2}, b2), 0), std::out_of_range);
  CHECK_THROWS_AS(unfire(make({0, 2}, b2), 2), std::out_of_range);
  CHECK_THROWS_AS(unfire(make({2, 0, 1}, b2), 1), std::domain_error);
  for (const partition& p : oracle::brute_enumerate(23, b2)) {
    for (std::size_t i = 0; i < p.length(); ++i) {
      if (p.part(i) < 2) continue;
      CHECK(unfire(fire(p, i), i + 1) == p);
    }
  }
}

TEST_CASE("successors and predecessors mirror each other") {
  CHECK(successors(make({6}, b2)) == std::vector<partition>{make({4, 1}, b2)});
  CHECK(successors(make({2, 2}, b2)) ==
        std::vector<partition>{make({0, 3}, b2), make({2, 0, 1}, b2)});
  CHECK(successors(canonical(12, b2)).empty());
  CHECK(predecessors(make({0, 2}, b2)) == std::vector<partition>{make({2, 1}, b2)});
  CHECK(predecessors(make({6}, b2)).empty());
  for (const partition& p : oracle::brute_enumerate(18, b2))
    for (const partition& q : successors(p)) {
      auto preds = predecessors(q);
      CHECK(std::count(preds.begin(), preds.end(), p) == 1);
    }
}

TEST_CASE("leading counts the b-1 prefix") {
  CHECK(leading(make({}, b2)) == 0);
  CHECK(leading(make({1, 1, 2}, b2)) == 2);
  CHECK(leading(make({2, 2, 1}, b3)) == 2);
  CHECK(leading(make({1}, b2)) == 1);
  CHECK(leading(make({2, 1}, b2)) == 0);
}

TEST_CASE("inc is the odometer step") {
  CHECK(inc(make({1, 1}, b2), 0) == make({2, 1}, b2));
  CHECK(inc(make({1, 1}, b2), 1) == make({0, 2}, b2));
  CHECK(inc(make({1, 1}, b2), 2) == make({0, 0, 1}, b2));
  CHECK(inc(make({}, b2), 0) == make({1}, b2));
  CHECK(inc(make({2, 2}, b3), 2) == make({0, 0, 1}, b3));
  CHECK_THROWS_AS(inc(make({0, 1}, b2), 1), std::domain_error);
  CHECK_THROWS_AS(inc(make({1, 0, 1}, b2), 2), std::domain_error);
  for (const partition& p : oracle::brute_enumerate(20, b2))
    for (std::size_t i = 0; i <= leading(p); ++i)
      CHECK(value(inc(p, i)) == 21);
}

TEST_CASE("shot vectors follow the closed recurrence") {
  CHECK(shots(make({1, 0, 2}, b2), 9) == shot_vector({4, 2}));
  CHECK(shots(make({0, 1, 1}, b2), 6) == shot_vector({3, 1}));
  CHECK(shots(make({9}, b2), 9) == shot_vector{});
  CHECK(shots(make({}, b2), 0) == shot_vector{});
  CHECK(shots(make({0, 0, 1}, b2), 4) == shot_vector({2, 1}));
  CHECK_THROWS_AS(shots(make({1, 0, 2}, b2), 8), std::invalid_argument);
  CHECK_THROWS_AS(shots(make({3}, b2), 9), std::invalid_argument);
}

TEST_CASE("shot vectors determine the partition") {
  CHECK(partition_from_shots(9, shot_vector({4, 2}), b2) == make({1, 0, 2}, b2));
  CHECK(partition_from_shots(5, shot_vector{}, b2) == make({5}, b2));
  CHECK_THROWS_AS(partition_from_shots(0, shot_vector({1}), b2), std::invalid_argument);
  CHECK_THROWS_AS(partition_from_shots(4, shot_vector({2, 2}), b2), std::invalid_argument);
  for (value_t n : {0ull, 1ull, 12ull, 25ull})
    for (const partition& p : oracle::brute_enumerate(n, b3))
      CHECK(partition_from_shots(n, shots(p, n), b3) == p);
}

TEST_CASE("componentwise shot operations pad with zeros") {
  const shot_vector a({3});
  const shot_vector b({2, 1});
  CHECK(component_min(a, b) == shot_vector({2}));
  CHECK(component_max(a, b) == shot_vector({3, 1}));
  CHECK(dominates(b, shot_vector({2})));
  CHECK(!dominates(a, b));
  CHECK(!dominates(b, a));
  CHECK(dominates(a, a));
  CHECK(shot_vector({1, 0, 0}) == shot_vector({1}));
}
