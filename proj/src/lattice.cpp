#include "bpart/lattice.hpp"

#include <algorithm>
#include <deque>

#include "bpart/tree.hpp"

namespace bpart {

hasse_diagram::hasse_diagram(basis b, value_t n, std::vector<partition> nodes,
                             std::vector<hasse_edge> edges)
    : b_(b), n_(n), nodes_(std::move(nodes)), edges_(std::move(edges)) {
  index_.reserve(nodes_.size());
  for (std::size_t i = 0; i < nodes_.size(); ++i)
    index_.emplace(nodes_[i], static_cast<std::uint32_t>(i));
}

std::optional<std::size_t> hasse_diagram::index_of(const partition& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

hasse_diagram build_hasse(value_t n, basis b, std::size_t cap) {
  std::vector<partition> nodes{partition::single(n, b)};
  std::vector<hasse_edge> edges;
  std::unordered_map<partition, std::uint32_t, partition_hash> index;
  index.emplace(nodes[0], 0);
  for (std::size_t u = 0; u < nodes.size(); ++u) {
    const partition p = nodes[u];
    for (std::size_t i = 0; i < p.length(); ++i) {
      if (p.part(i) < b.value()) continue;
      partition q = fire(p, i);
      auto [it, inserted] = index.emplace(q, static_cast<std::uint32_t>(nodes.size()));
      if (inserted) {
        if (nodes.size() >= cap) throw cap_exceeded("diagram node cap exceeded");
        nodes.push_back(std::move(q));
      }
      edges.push_back({static_cast<std::uint32_t>(u), it->second,
                       static_cast<std::uint32_t>(i)});
    }
  }
  return hasse_diagram(b, n, std::move(nodes), std::move(edges));
}

bool leq(const partition& p, const partition& q, value_t n) {
  if (!(p.base() == q.base()))
    throw std::invalid_argument("leq: operands use different bases");
  return dominates(shots(p, n), shots(q, n));
}

partition join(const partition& p, const partition& q, value_t n) {
  if (!(p.base() == q.base()))
    throw std::invalid_argument("join: operands use different bases");
  return partition_from_shots(n, component_min(shots(p, n), shots(q, n)), p.base());
}

partition meet(const partition& p, const partition& q, value_t n) {
  if (!(p.base() == q.base()))
    throw std::invalid_argument("meet: operands use different bases");
  return partition_from_shots(n, component_max(shots(p, n), shots(q, n)), p.base());
}

std::vector<partition> prefix_class(const hasse_diagram& d, std::size_t i) {
  std::vector<partition> out;
  for (const partition& p : d.nodes())
    if (leading(p) >= i) out.push_back(p);
  return out;
}

partition strip_prefix(const partition& p, std::size_t i, value_t n) {
  if (value(p) != n) throw std::invalid_argument("strip_prefix: p does not represent n");
  if (leading(p) < i)
    throw std::domain_error("strip_prefix: first parts must equal basis-1");
  const value_t b = p.base().value();
  value_t scale = 1;
  for (std::size_t j = 0; j < i; ++j) {
    if (scale > (n + 1) / b) throw std::domain_error("strip_prefix: power does not divide n+1");
    scale *= b;
  }
  if ((n + 1) % scale != 0)
    throw std::domain_error("strip_prefix: power does not divide n+1");
  std::vector<part_t> tail(p.parts().begin() + static_cast<std::ptrdiff_t>(std::min(i, p.length())),
                           p.parts().end());
  return partition(std::move(tail), p.base());
}

namespace {

// Renumbers nodes into breadth-first discovery order from the top node so the
// result is indistinguishable from a direct build.
hasse_diagram canonicalize(basis b, value_t n, std::vector<partition> nodes,
                           std::vector<hasse_edge> edges) {
  std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> out_edges(nodes.size());
  for (const hasse_edge& e : edges) out_edges[e.from].push_back({e.position, e.to});
  for (auto& adj : out_edges) std::sort(adj.begin(), adj.end());

  std::size_t top = 0;
  const partition top_node = partition::single(n, b);
  while (top < nodes.size() && !(nodes[top] == top_node)) ++top;
  if (top == nodes.size()) throw std::logic_error("diagram lost its top node");

  constexpr std::uint32_t unseen = 0xffffffffu;
  std::vector<std::uint32_t> renum(nodes.size(), unseen);
  std::vector<std::uint32_t> order;
  order.reserve(nodes.size());
  renum[top] = 0;
  order.push_back(static_cast<std::uint32_t>(top));
  for (std::size_t head = 0; head < order.size(); ++head) {
    for (auto [pos, to] : out_edges[order[head]]) {
      if (renum[to] != unseen) continue;
      renum[to] = static_cast<std::uint32_t>(order.size());
      order.push_back(to);
    }
  }
  if (order.size() != nodes.size())
    throw std::logic_error("diagram is not connected from its top node");

  std::vector<partition> new_nodes;
  new_nodes.reserve(nodes.size());
  for (std::uint32_t old : order) new_nodes.push_back(std::move(nodes[old]));
  for (hasse_edge& e : edges) e = {renum[e.from], renum[e.to], e.position};
  std::sort(edges.begin(), edges.end());
  return hasse_diagram(b, n, std::move(new_nodes), std::move(edges));
}

}  // namespace

hasse_diagram incremental_next(const hasse_diagram& d) {
  const basis b = d.base();
  const value_t next_n = d.n() + 1;

  // Every node and every covering edge survives the odometer map p -> inc(p,0).
  std::vector<partition> nodes;
  nodes.reserve(d.nodes().size());
  for (const partition& p : d.nodes()) nodes.push_back(inc(p, 0));
  std::vector<hasse_edge> edges = d.edges();
  std::unordered_map<partition, std::uint32_t, partition_hash> index;
  index.reserve(nodes.size() * 2);
  for (std::size_t i = 0; i < nodes.size(); ++i)
    index.emplace(nodes[i], static_cast<std::uint32_t>(i));

  // What the map misses: stage by stage, scan the last layer for successors
  // that are not yet present, insert them, and connect each insertion to all
  // of its already-present neighbors (the later endpoint of an edge always
  // does the connecting, so nothing is added twice).
  std::vector<std::uint32_t> layer(nodes.size());
  for (std::size_t i = 0; i < nodes.size(); ++i) layer[i] = static_cast<std::uint32_t>(i);
  while (!layer.empty()) {
    std::vector<std::uint32_t> added;
    for (std::uint32_t u : layer) {
      const partition p = nodes[u];
      for (std::size_t i = 0; i < p.length(); ++i) {
        if (p.part(i) < b.value()) continue;
        partition q = fire(p, i);
        if (index.contains(q)) continue;
        const auto qi = static_cast<std::uint32_t>(nodes.size());
        index.emplace(q, qi);
        for (std::size_t t = 1; t < q.length(); ++t) {
          if (q.part(t) == 0) continue;
          if (auto it = index.find(unfire(q, t)); it != index.end())
            edges.push_back({it->second, qi, static_cast<std::uint32_t>(t - 1)});
        }
        for (std::size_t j = 0; j < q.length(); ++j) {
          if (q.part(j) < b.value()) continue;
          if (auto it = index.find(fire(q, j)); it != index.end())
            edges.push_back({qi, it->second, static_cast<std::uint32_t>(j)});
        }
        nodes.push_back(std::move(q));
        added.push_back(qi);
      }
    }
    layer = std::move(added);
  }

  return canonicalize(b, next_n, std::move(nodes), std::move(edges));
}

std::vector<decompose_block> decompose(value_t n, basis b) {
  std::vector<decompose_block> out;
  if (n == 0) return out;
  const value_t bb = b.value();
  value_t scale = 1;
  for (std::size_t i = 0;; ++i) {
    decompose_block block{i, {}};
    for (const partition& t : enumerate(n / scale - 1, b)) {
      std::vector<part_t> restored(i, static_cast<part_t>(bb - 1));
      restored.insert(restored.end(), t.parts().begin(), t.parts().end());
      block.members.push_back(inc(partition(std::move(restored), b), i));
    }
    out.push_back(std::move(block));
    if ((n / scale) % bb != 0) break;
    scale *= bb;
  }
  return out;
}

bool check_distributive(const hasse_diagram& d, std::size_t cap) {
  const std::size_t count = d.nodes().size();
  if (count > cap) throw cap_exceeded("distributivity check cap exceeded");

  std::vector<shot_vector> sv;
  sv.reserve(count);
  for (const partition& p : d.nodes()) sv.push_back(shots(p, d.n()));

  // Tabulate meets and joins as node indices; a reconstruction falling
  // outside the node set would disprove closure, hence the lattice claim.
  std::vector<std::uint32_t> joins(count * count);
  std::vector<std::uint32_t> meets(count * count);
  for (std::size_t u = 0; u < count; ++u) {
    for (std::size_t v = 0; v < count; ++v) {
      auto ji = d.index_of(partition_from_shots(d.n(), component_min(sv[u], sv[v]), d.base()));
      auto mi = d.index_of(partition_from_shots(d.n(), component_max(sv[u], sv[v]), d.base()));
      if (!ji || !mi) return false;
      joins[u * count + v] = static_cast<std::uint32_t>(*ji);
      meets[u * count + v] = static_cast<std::uint32_t>(*mi);
    }
  }

  for (std::size_t a = 0; a < count; ++a)
    for (std::size_t x = 0; x < count; ++x)
      for (std::size_t y = 0; y < count; ++y) {
        const std::uint32_t jxy = joins[x * count + y];
        const std::uint32_t mxy = meets[x * count + y];
        if (meets[joins[a * count + x] * count + joins[a * count + y]] !=
            joins[a * count + mxy])
          return false;
        if (joins[meets[a * count + x] * count + meets[a * count + y]] !=
            meets[a * count + jxy])
          return false;
      }
  return true;
}

std::vector<partition> embed_into_next(const hasse_diagram& d) {
  std::vector<partition> out;
  out.reserve(d.nodes().size());
  for (const partition& p : d.nodes()) out.push_back(inc(p, 0));
  return out;
}

}  // namespace bpart
