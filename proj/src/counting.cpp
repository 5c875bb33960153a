#include "bpart/counting.hpp"

#include <limits>

#include "bpart/tree.hpp"

namespace bpart {
namespace {

// Packs (l, k) into one cache key; clamped k never exceeds 64.
std::uint64_t level_key(std::int64_t l, unsigned k) {
  return (static_cast<std::uint64_t>(l) << 8) | k;
}

}  // namespace

const bignum& count_cache::count(value_t n) {
  if (n >= counts_.size()) {
    const value_t b = b_.value();
    counts_.reserve(n + 1);
    if (counts_.empty()) counts_.push_back(1);
    for (value_t i = counts_.size(); i <= n; ++i) {
      bignum c = counts_[i - 1];
      if (i % b == 0) c += counts_[i / b];
      counts_.push_back(std::move(c));
    }
  }
  return counts_[n];
}

bignum count_cache::count_sum_form(value_t n) {
  value_t m = n / b_.value();
  count(m);
  bignum total = 0;
  for (value_t i = 0; i <= m; ++i) total += counts_[i];
  return total;
}

// Smallest k' with b^{k'-1} >= l, but never above k. At or below that
// threshold the level counts no longer depend on k.
unsigned count_cache::clamp_order(std::int64_t l, unsigned k) const {
  const value_t b = b_.value();
  unsigned kp = 1;
  value_t pow = 1;
  while (kp < k && pow < static_cast<value_t>(l)) {
    if (pow > std::numeric_limits<value_t>::max() / b) return kp + 1;
    pow *= b;
    ++kp;
  }
  return kp;
}

const bignum& count_cache::subtree_level_count(std::int64_t l, unsigned k) {
  if (k == 0) throw std::invalid_argument("subtree_level_count: order must be positive");
  if (l < 0) return zero_;
  const value_t b = b_.value();

  const std::uint64_t root = level_key(l, clamp_order(l, k));
  if (auto it = levels_.find(root); it != levels_.end()) return it->second;

  // Evaluated iteratively; the dependency chains are linear in l, which would
  // overflow the call stack for large arguments if done by recursion.
  std::vector<std::uint64_t> work{root};
  while (!work.empty()) {
    const std::uint64_t cur = work.back();
    if (levels_.contains(cur)) {
      work.pop_back();
      continue;
    }
    const auto cl = static_cast<std::int64_t>(cur >> 8);
    const auto ck = static_cast<unsigned>(cur & 0xff);

    if (cl < static_cast<std::int64_t>(b)) {
      levels_.emplace(cur, 1);
      work.pop_back();
      continue;
    }

    value_t pow = 1;
    for (unsigned i = 1; i < ck; ++i) pow *= b;
    const value_t span = std::min<value_t>(pow, static_cast<value_t>(cl));

    bool ready = true;
    bignum total = 0;
    auto add_term = [&](std::int64_t tl, unsigned tk) {
      if (tl < 0) return;
      const std::uint64_t dep = level_key(tl, clamp_order(tl, tk));
      auto it = levels_.find(dep);
      if (it == levels_.end()) {
        ready = false;
        work.push_back(dep);
      } else if (ready) {
        total += it->second;
      }
    };

    if (static_cast<value_t>(cl) <= pow) {
      total = 1;
    } else {
      add_term(cl - static_cast<std::int64_t>(pow), ck);
    }
    for (value_t i = b; i <= span; i += b)
      for (unsigned j = 1; j <= carry(i, b_); ++j)
        add_term(cl - static_cast<std::int64_t>(i), j);

    if (ready) {
      levels_.emplace(cur, std::move(total));
      work.pop_back();
    }
  }
  return levels_.at(root);
}

bignum count_cache::count_via_tree(value_t n) {
  if (n > static_cast<value_t>(std::numeric_limits<std::int64_t>::max()))
    throw std::overflow_error("count_via_tree: n too large");
  const unsigned k = n >= 64 ? 64u : static_cast<unsigned>(n > 0 ? n : 1);
  return subtree_level_count(static_cast<std::int64_t>(n), k);
}

bignum count_cache::count_exact_parts(value_t n, unsigned l) {
  if (l == 0) throw std::invalid_argument("count_exact_parts: need at least one part");
  const value_t b = b_.value();
  value_t pow = 1;
  for (unsigned i = 1; i < l; ++i) {
    if (pow > n / b) return 0;
    pow *= b;
  }
  if (pow > n) return 0;
  const value_t rest = n - pow;
  if (rest > static_cast<value_t>(std::numeric_limits<std::int64_t>::max()))
    throw std::overflow_error("count_exact_parts: n too large");
  return subtree_level_count(static_cast<std::int64_t>(rest), l);
}

bignum count(value_t n, basis b) {
  count_cache cache(b);
  return cache.count(n);
}

bignum count_exact_parts(value_t n, unsigned l, basis b) {
  count_cache cache(b);
  return cache.count_exact_parts(n, l);
}

}  // namespace bpart
