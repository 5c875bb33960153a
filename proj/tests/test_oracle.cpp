#include <doctest.h>

#include <algorithm>

#include "bpart/oracle.hpp"
#include "bpart/partition.hpp"

using namespace bpart;

namespace {
const basis b2{2};
const basis b3{3};
}  // namespace

TEST_CASE("brute enumeration lists every representation once") {
  auto r4 = oracle::brute_enumerate(4, b2);
  std::vector<partition> want4 = {
      partition({0, 0, 1}, b2), partition({0, 2}, b2), partition({2, 1}, b2),
      partition({4}, b2)};
  std::sort(want4.begin(), want4.end());
  CHECK(r4 == want4);

  auto r6 = oracle::brute_enumerate(6, b2);
  CHECK(r6.size() == 6);
  CHECK(std::is_sorted(r6.begin(), r6.end()));
  CHECK(std::adjacent_find(r6.begin(), r6.end()) == r6.end());
  for (const partition& p : r6) CHECK(value(p) == 6);

  auto r0 = oracle::brute_enumerate(0, b3);
  CHECK(r0.size() == 1);
  CHECK(r0[0].length() == 0);
}

TEST_CASE("brute counts match known sequences") {
  const uint64_t binary[] = {1, 1, 2, 2, 4, 4, 6, 6, 10, 10, 14,
                             14, 20, 20, 26, 26, 36, 36, 46, 46, 60};
  for (value_t n = 0; n <= 20; ++n) CHECK(oracle::brute_count(n, b2) == binary[n]);
  const uint64_t ternary[] = {1, 1, 1, 2, 2, 2, 3, 3, 3, 5, 5,
                              5, 7, 7, 7, 9, 9, 9, 12, 12, 12};
  for (value_t n = 0; n <= 20; ++n) CHECK(oracle::brute_count(n, b3) == ternary[n]);
  CHECK(oracle::brute_count(30, b2) == 166);
  CHECK(oracle::brute_count(30, b3) == 28);
}

TEST_CASE("brute reachability explores raw firing chains") {
  CHECK(oracle::brute_leq(partition({0, 2}, b2), partition({4}, b2), 4));
  CHECK(!oracle::brute_leq(partition({4}, b2), partition({0, 2}, b2), 4));
  CHECK(oracle::brute_leq(partition({6}, b2), partition({6}, b2), 6));
  CHECK(!oracle::brute_leq(partition({0, 3}, b2), partition({2, 0, 1}, b2), 6));
  CHECK(!oracle::brute_leq(partition({2, 0, 1}, b2), partition({0, 3}, b2), 6));
  CHECK_THROWS_AS(oracle::brute_leq(partition({4}, b2), partition({5}, b2), 4),
                  std::invalid_argument);
  CHECK_THROWS_AS(oracle::brute_leq(partition({3}, b2), partition({3}, b3), 3),
                  std::invalid_argument);
}

TEST_CASE("budgets stop runaway searches") {
  CHECK_THROWS_AS(oracle::brute_enumerate(400, b2, 100), cap_exceeded);
  CHECK_THROWS_AS(oracle::brute_leq(partition({0, 0, 0, 0, 0, 0, 0, 0, 1}, b2),
                                    partition({256}, b2), 256, 10),
                  cap_exceeded);
}
