#pragma once

// Exact counts of power representations, through several independent
// formulas that the test suite plays against each other:
//   - a two-term recurrence on n,
//   - a prefix-sum form,
//   - a two-parameter recursion counting tree levels below a given root shape,
//   - counts refined by the exact number of parts.

#include <cstdint>
#include <unordered_map>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "bpart/partition.hpp"

namespace bpart {

using bignum = boost::multiprecision::cpp_int;

/// Memoizing count store for one basis. Counts are exact at any size.
class count_cache {
 public:
  explicit count_cache(basis b) : b_(b) {}

  basis base() const { return b_; }

  /// Number of representations of n: count(n-1) plus, when b divides n,
  /// count(n/b). O(n) time and memory on first use, then table lookup.
  const bignum& count(value_t n);

  /// Same number as the prefix sum of counts up to n/b.
  bignum count_sum_form(value_t n);

  /// Number of nodes at depth l in the subtree hanging off a branch point
  /// of order k in the infinite expansion tree (equals the count of
  /// representations of l when k is large enough). l below 0 gives 0.
  const bignum& subtree_level_count(std::int64_t l, unsigned k);

  /// count(n) recovered through the tree recursion.
  bignum count_via_tree(value_t n);

  /// Number of representations of n with exactly l parts (last part nonzero).
  /// l must be at least 1.
  bignum count_exact_parts(value_t n, unsigned l);

 private:
  unsigned clamp_order(std::int64_t l, unsigned k) const;

  basis b_;
  std::vector<bignum> counts_;
  std::unordered_map<std::uint64_t, bignum> levels_;
  bignum zero_;
};

/// One-shot helpers for callers without a cache to keep.
bignum count(value_t n, basis b);
bignum count_exact_parts(value_t n, unsigned l, basis b);

}  // namespace bpart
