#pragma once

// The infinite expansion tree whose depth-d slice is exactly the set of
// representations of d. Supports streaming level generation and the
// level-walk enumeration that lists all representations of n in time linear
// in the size of the output.

#include <optional>
#include <vector>

#include "bpart/partition.hpp"

namespace bpart {

/// Largest k with b^k dividing i. Throws std::domain_error for i = 0.
unsigned carry(value_t i, basis b);

/// The sons of t in the expansion tree: [inc(t,0), ..., inc(t,leading(t))].
std::vector<partition> children(const partition& t);

/// All sons of all members, left to right.
std::vector<partition> next_level(const std::vector<partition>& members);

/// Walks tree levels starting from {()} at depth 0; the members at depth d
/// are exactly the representations of d. Advancing past a cumulative total of
/// `cap` generated members throws cap_exceeded.
class level_stream {
 public:
  explicit level_stream(basis b, std::size_t cap = default_node_cap)
      : b_(b), cap_(cap), produced_(1), depth_(0), members_{partition({}, b)} {}

  value_t depth() const { return depth_; }
  const std::vector<partition>& members() const { return members_; }

  void advance();

 private:
  basis b_;
  std::size_t cap_;
  std::size_t produced_;
  value_t depth_;
  std::vector<partition> members_;
};

/// Levels 0..max_depth as member lists.
std::vector<std::vector<partition>> levels(basis b, value_t max_depth,
                                           std::size_t cap = default_node_cap);

/// Calls fn once per representation of n, walking tails level by level:
/// the tail e at depth l yields (n - b*l, e_0, e_1, ...). Levels run from 0
/// through n/b, so the first partition seen is (n) and the last is canonical.
template <class F>
void for_each_partition(value_t n, basis b, F&& fn,
                        std::size_t cap = default_node_cap) {
  const value_t bb = b.value();
  const value_t max_level = n / bb;
  std::size_t produced = 0;
  std::vector<partition> level{partition({}, b)};
  for (value_t l = 0;; ++l) {
    for (const partition& e : level) {
      if (++produced > cap) throw cap_exceeded("enumeration cap exceeded");
      std::vector<part_t> parts;
      parts.reserve(e.length() + 1);
      parts.push_back(static_cast<part_t>(n - bb * l));
      parts.insert(parts.end(), e.parts().begin(), e.parts().end());
      fn(partition(std::move(parts), b));
    }
    if (l == max_level) break;
    level = next_level(level);
  }
}

/// All representations of n, in level order.
std::vector<partition> enumerate(value_t n, basis b,
                                 std::size_t cap = default_node_cap);

/// The i-th node of the rightmost branch (i >= 1): the canonical
/// representation of i-1. It has carry(i)+1 sons.
partition rightmost_branch(basis b, value_t i);

/// When t has exactly k leading zeros followed by a part above b-1, t roots a
/// subtree of order k+1 (its shape depends only on k); otherwise nothing.
std::optional<unsigned> subtree_order(const partition& t);

}  // namespace bpart
