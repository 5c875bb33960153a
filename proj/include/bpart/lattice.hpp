#pragma once

// The covering order on the representations of n: diagram construction
// (direct breadth-first closure and the incremental n -> n+1 procedure),
// meet/join through shot vectors, prefix classes, and the disjoint block
// decomposition by trailing powers.

#include <compare>
#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "bpart/partition.hpp"

namespace bpart {

struct hasse_edge {
  std::uint32_t from;
  std::uint32_t to;
  std::uint32_t position;
  friend auto operator<=>(const hasse_edge&, const hasse_edge&) = default;
};

/// Covering diagram of all representations of n. Nodes are indexed in
/// breadth-first discovery order from (n); edge (u,v,i) means
/// fire(nodes[u], i) == nodes[v]. Immutable once built.
class hasse_diagram {
 public:
  hasse_diagram(basis b, value_t n, std::vector<partition> nodes,
                std::vector<hasse_edge> edges);

  basis base() const { return b_; }
  value_t n() const { return n_; }
  const std::vector<partition>& nodes() const { return nodes_; }
  const std::vector<hasse_edge>& edges() const { return edges_; }
  std::optional<std::size_t> index_of(const partition& p) const;

 private:
  basis b_;
  value_t n_;
  std::vector<partition> nodes_;
  std::vector<hasse_edge> edges_;
  std::unordered_map<partition, std::uint32_t, partition_hash> index_;
};

/// Breadth-first closure of successors from (n). Throws cap_exceeded past
/// `cap` nodes.
hasse_diagram build_hasse(value_t n, basis b, std::size_t cap = default_node_cap);

/// True when p is reachable from q by firings; decided by comparing shot
/// vectors componentwise. Both must represent n (std::invalid_argument).
bool leq(const partition& p, const partition& q, value_t n);

/// Least upper bound: the partition whose shot vector is the componentwise
/// minimum. Both operands must represent n.
partition join(const partition& p, const partition& q, value_t n);

/// Greatest lower bound, componentwise maximum.
partition meet(const partition& p, const partition& q, value_t n);

/// Nodes whose first i parts all equal b-1.
std::vector<partition> prefix_class(const hasse_diagram& d, std::size_t i);

/// Drop the first i parts of p, which must all equal b-1; the tail represents
/// (n+1)/b^i - 1. Requires b^i | (n+1), value(p) == n.
partition strip_prefix(const partition& p, std::size_t i, value_t n);

/// Diagram of n+1 built from the diagram of n without recomputing from
/// scratch: map everything through inc(.,0), then add the missing successors
/// stage by stage. Output is identical to build_hasse(n+1, b).
hasse_diagram incremental_next(const hasse_diagram& d);

struct decompose_block {
  std::size_t shift;  // number of leading zero parts in the block's members
  std::vector<partition> members;
};

/// Splits the representations of n (n >= 1) into disjoint blocks, one per
/// power b^i dividing n: the block for i collects (0^i, t_0+1, t_1, ...) over
/// all representations t of n/b^i - 1. For n = 0 returns no blocks.
std::vector<decompose_block> decompose(value_t n, basis b);

/// Exhaustively checks both distributivity laws over all node triples.
/// Throws cap_exceeded when the diagram has more than `cap` nodes.
bool check_distributive(const hasse_diagram& d, std::size_t cap = 300);

/// The order embedding into the diagram of n+1: node i maps to
/// inc(nodes[i], 0), which keeps the shot vector and therefore meets, joins
/// and the order.
std::vector<partition> embed_into_next(const hasse_diagram& d);

}  // namespace bpart
