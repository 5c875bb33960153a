#include "bpart/verify.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <optional>
#include <random>
#include <set>

#include "bpart/cfg.hpp"
#include "bpart/counting.hpp"
#include "bpart/io.hpp"
#include "bpart/lattice.hpp"
#include "bpart/oracle.hpp"
#include "bpart/tree.hpp"

namespace bpart {
namespace {

struct acc {
  explicit acc(std::string name_) : name(std::move(name_)) {}
  std::string name;
  bool ok = true;
  std::string detail;
};

void fail(acc& a, value_t n, const std::string& msg) {
  if (!a.ok) return;
  a.ok = false;
  a.detail = "n=" + std::to_string(n) + ": " + msg;
}

std::vector<partition> sorted(std::vector<partition> v) {
  std::sort(v.begin(), v.end());
  return v;
}

std::size_t zero_prefix(const partition& p) {
  std::size_t z = 0;
  while (z < p.length() && p.part(z) == 0) ++z;
  return z;
}

void check_diagram(acc& a, const hasse_diagram& d) {
  const value_t n = d.n();
  const auto& nodes = d.nodes();
  if (!(nodes[0] == partition::single(n, d.base())))
    return fail(a, n, "node 0 is not (n)");
  std::vector<char> has_in(nodes.size(), 0), has_out(nodes.size(), 0);
  for (const hasse_edge& e : d.edges()) {
    has_in[e.to] = 1;
    has_out[e.from] = 1;
    if (!(fire(nodes[e.from], e.position) == nodes[e.to]))
      return fail(a, n, "edge does not match a firing");
  }
  std::size_t expected_edges = 0;
  for (const partition& p : nodes) {
    if (value(p) != n) return fail(a, n, "node " + to_string(p) + " has wrong value");
    expected_edges += successors(p).size();
  }
  if (expected_edges != d.edges().size())
    return fail(a, n, "edge count differs from total successor count");
  std::size_t sources = 0, sinks = 0;
  std::size_t sink_at = 0;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (!has_in[i]) ++sources;
    if (!has_out[i]) {
      ++sinks;
      sink_at = i;
    }
  }
  if (sources != 1 || has_in[0])
    return fail(a, n, "top node is not the unique source");
  if (sinks != 1 || !(nodes[sink_at] == canonical(n, d.base())))
    return fail(a, n, "canonical form is not the unique sink");
}

void check_order(acc& a, const hasse_diagram& d, std::size_t budget) {
  const auto& nodes = d.nodes();
  for (std::size_t u = 0; u < nodes.size() && a.ok; ++u)
    for (std::size_t v = 0; v < nodes.size(); ++v) {
      const bool fast = leq(nodes[u], nodes[v], d.n());
      const bool slow = oracle::brute_leq(nodes[u], nodes[v], d.n(), budget);
      if (fast != slow) {
        fail(a, d.n(), "leq(" + to_string(nodes[u]) + ", " + to_string(nodes[v]) +
                           ") = " + (fast ? "true" : "false") + " but reachability says otherwise");
        return;
      }
    }
}

void check_bounds(acc& a, const hasse_diagram& d) {
  const value_t n = d.n();
  const auto& nodes = d.nodes();
  std::vector<shot_vector> sv;
  sv.reserve(nodes.size());
  for (const partition& p : nodes) sv.push_back(shots(p, n));
  for (std::size_t u = 0; u < nodes.size() && a.ok; ++u)
    for (std::size_t v = u; v < nodes.size() && a.ok; ++v) {
      const partition j = join(nodes[u], nodes[v], n);
      const partition m = meet(nodes[u], nodes[v], n);
      if (!d.index_of(j) || !d.index_of(m))
        return fail(a, n, "meet or join left the node set");
      const shot_vector sj = shots(j, n);
      const shot_vector sm = shots(m, n);
      if (!dominates(sv[u], sj) || !dominates(sv[v], sj))
        return fail(a, n, "join is not an upper bound");
      if (!dominates(sm, sv[u]) || !dominates(sm, sv[v]))
        return fail(a, n, "meet is not a lower bound");
      for (std::size_t w = 0; w < nodes.size(); ++w) {
        if (dominates(sv[u], sv[w]) && dominates(sv[v], sv[w]) && !dominates(sj, sv[w]))
          return fail(a, n, "join is not the least upper bound of " + to_string(nodes[u]) +
                              " and " + to_string(nodes[v]));
        if (dominates(sv[w], sv[u]) && dominates(sv[w], sv[v]) && !dominates(sv[w], sm))
          return fail(a, n, "meet is not the greatest lower bound of " + to_string(nodes[u]) +
                              " and " + to_string(nodes[v]));
      }
    }
}

void check_blocks(acc& a, const hasse_diagram& d) {
  const value_t n = d.n();
  const auto blocks = decompose(n, d.base());
  std::set<partition> seen;
  value_t scale = 1;
  for (const decompose_block& block : blocks) {
    if (n % scale != 0) return fail(a, n, "block shift does not divide n");
    for (const partition& p : block.members) {
      if (!d.index_of(p)) return fail(a, n, to_string(p) + " is not a partition of n");
      if (zero_prefix(p) != block.shift)
        return fail(a, n, to_string(p) + " has the wrong zero prefix for its block");
      if (!seen.insert(p).second) return fail(a, n, to_string(p) + " appears in two blocks");
    }
    scale *= d.base().value();
  }
  if (seen.size() != d.nodes().size())
    return fail(a, n, "blocks cover " + std::to_string(seen.size()) + " of " +
                        std::to_string(d.nodes().size()) + " partitions");
}

void check_chipgame(acc& a, const hasse_diagram& d) {
  const value_t n = d.n();
  const basis b = d.base();
  std::set<std::vector<chips_t>> seen;
  std::deque<cfg_config> frontier;
  const cfg_config start = initial_config(n, b);
  seen.insert(start.chips());
  frontier.push_back(start);
  std::set<partition> images;
  while (!frontier.empty() && a.ok) {
    const cfg_config c = frontier.front();
    frontier.pop_front();
    chips_t total = 0;
    for (const chips_t& x : c.chips()) total += x;
    if (total != n) return fail(a, n, "chips are not conserved");
    const partition p = to_partition(c);
    images.insert(p);
    chips_t degree = 1;
    for (std::size_t i = 0; i < c.chips().size(); ++i) {
      degree *= b.value();
      const bool pre_chip = c.chips()[i] >= degree;
      const bool pre_part = p.part(i) >= b.value();
      if (pre_chip != pre_part)
        return fail(a, n, "firing preconditions diverge at vertex " + std::to_string(i) +
                            " of " + to_string(p));
      if (!pre_chip) continue;
      const cfg_config next = fire_vertex(c, i);
      if (!(to_partition(next) == fire(p, i)))
        return fail(a, n, "chip firing does not commute with part firing at " + to_string(p));
      if (seen.insert(next.chips()).second) frontier.push_back(next);
    }
  }
  if (!a.ok) return;
  const std::set<partition> node_set(d.nodes().begin(), d.nodes().end());
  if (images != node_set || seen.size() != node_set.size())
    fail(a, n, "reachable configurations are not in bijection with partitions");
}

void check_exact_parts(acc& a, const hasse_diagram& d, count_cache& cache,
                       const std::vector<partition>& brute) {
  const value_t n = d.n();
  std::map<std::size_t, std::uint64_t> by_length;
  for (const partition& p : brute) ++by_length[p.length()];
  const std::size_t max_len = canonical(n, d.base()).length();
  bignum total = 0;
  for (std::size_t l = 1; l <= max_len; ++l) {
    const bignum got = cache.count_exact_parts(n, static_cast<unsigned>(l));
    const auto it = by_length.find(l);
    const std::uint64_t expected = it == by_length.end() ? 0 : it->second;
    if (got != expected) {
      fail(a, n, "length " + std::to_string(l) + ": formula gives " + got.str() +
                     ", brute force " + std::to_string(expected));
      return;
    }
    total += got;
  }
  if (cache.count_exact_parts(n, static_cast<unsigned>(max_len + 1)) != 0)
    return fail(a, n, "nonzero count past the maximum length");
  if (total != cache.count(n))
    fail(a, n, "length counts add to " + total.str() + ", not " + cache.count(n).str());
}

void check_shot_replay(acc& a, const hasse_diagram& d) {
  const value_t n = d.n();
  for (const partition& p : d.nodes())
    if (!(partition_from_shots(n, shots(p, n), d.base()) == p))
      return fail(a, n, "shot roundtrip broke at " + to_string(p));
  std::mt19937 rng(static_cast<std::uint32_t>(n * 2654435761ull + d.base().value()));
  for (int rep = 0; rep < 4; ++rep) {
    partition cur = partition::single(n, d.base());
    std::vector<value_t> fired;
    while (true) {
      std::vector<std::size_t> eligible;
      for (std::size_t i = 0; i < cur.length(); ++i)
        if (cur.part(i) >= d.base().value()) eligible.push_back(i);
      if (eligible.empty() || (rng() & 7u) == 0) break;
      const std::size_t i = eligible[rng() % eligible.size()];
      if (fired.size() <= i) fired.resize(i + 1, 0);
      ++fired[i];
      cur = fire(cur, i);
    }
    if (!(shot_vector(fired) == shots(cur, n)))
      return fail(a, n, "replayed firing counts disagree with the closed form at " +
                          to_string(cur));
  }
}

void check_embedding(acc& a, const hasse_diagram& d) {
  const value_t n = d.n();
  const auto& nodes = d.nodes();
  const std::vector<partition> lifted = embed_into_next(d);
  for (std::size_t u = 0; u < nodes.size(); ++u)
    if (!(shots(lifted[u], n + 1) == shots(nodes[u], n)))
      return fail(a, n, "lifting changed the shot vector of " + to_string(nodes[u]));
  for (std::size_t u = 0; u < nodes.size() && a.ok; ++u)
    for (std::size_t v = u; v < nodes.size(); ++v) {
      if (!(join(lifted[u], lifted[v], n + 1) == inc(join(nodes[u], nodes[v], n), 0)) ||
          !(meet(lifted[u], lifted[v], n + 1) == inc(meet(nodes[u], nodes[v], n), 0))) {
        fail(a, n, "lifting does not preserve meet/join of " + to_string(nodes[u]) +
                       " and " + to_string(nodes[v]));
        return;
      }
    }
}

}  // namespace

std::vector<check_result> run_verification(const verify_options& opt) {
  const basis b = opt.b;
  count_cache cache(b);
  acc diagram{"diagram-invariants"};
  acc enumeration{"enumeration-agreement"};
  acc counts{"count-agreement"};
  acc order{"order-vs-reachability"};
  acc bounds{"meet-join-bounds"};
  acc distrib{"distributivity"};
  acc incremental{"incremental-build"};
  acc blocks{"block-decomposition"};
  acc chipgame{"chip-simulation"};
  acc exact{"exact-part-counts"};
  acc shotrep{"shot-replay"};
  acc embed{"order-embedding"};

  std::optional<hasse_diagram> prev;
  for (value_t n = 0; n <= opt.max_n; ++n) {
    hasse_diagram d = build_hasse(n, b, opt.budget);
    const std::vector<partition> brute = oracle::brute_enumerate(n, b, opt.budget);

    if (diagram.ok) check_diagram(diagram, d);

    if (enumeration.ok) {
      const std::vector<partition> walked = sorted(enumerate(n, b, opt.budget));
      if (std::adjacent_find(walked.begin(), walked.end()) != walked.end())
        fail(enumeration, n, "tree walk produced a duplicate");
      else if (walked != brute)
        fail(enumeration, n, "tree walk disagrees with brute force");
      else if (sorted(d.nodes()) != brute)
        fail(enumeration, n, "diagram nodes disagree with brute force");
    }

    if (counts.ok) {
      const bignum& c = cache.count(n);
      const bignum s = cache.count_sum_form(n);
      const bignum t = cache.count_via_tree(n);
      const std::uint64_t bc = oracle::brute_count(n, b, opt.budget);
      if (c != s || c != t || c != bc || c != d.nodes().size())
        fail(counts, n, "recurrence=" + c.str() + " sum=" + s.str() + " tree=" + t.str() +
                            " brute=" + std::to_string(bc) +
                            " nodes=" + std::to_string(d.nodes().size()));
    }

    if (order.ok && n <= opt.order_max_n) check_order(order, d, opt.budget);
    if (bounds.ok && n <= opt.order_max_n) check_bounds(bounds, d);

    if (distrib.ok && d.nodes().size() <= opt.distributive_cap &&
        !check_distributive(d, opt.distributive_cap))
      fail(distrib, n, "a triple violates a distributivity law");

    if (incremental.ok && prev) {
      const hasse_diagram rebuilt = incremental_next(*prev);
      if (!(rebuilt.nodes() == d.nodes()))
        fail(incremental, n, "incremental node list differs from direct build");
      else if (!(rebuilt.edges() == d.edges()))
        fail(incremental, n, "incremental edge list differs from direct build");
    }

    if (blocks.ok && n >= 1) check_blocks(blocks, d);
    if (chipgame.ok && n <= opt.cfg_max_n) check_chipgame(chipgame, d);
    if (exact.ok && n >= 1) check_exact_parts(exact, d, cache, brute);
    if (shotrep.ok) check_shot_replay(shotrep, d);
    if (embed.ok && n <= opt.order_max_n) check_embedding(embed, d);

    prev.emplace(std::move(d));
  }

  std::vector<check_result> out;
  for (const acc* a : {&diagram, &enumeration, &counts, &order, &bounds, &distrib,
                       &incremental, &blocks, &chipgame, &exact, &shotrep, &embed})
    out.push_back({a->name, a->ok, a->detail});
  return out;
}

}  // namespace bpart
