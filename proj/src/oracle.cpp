#include "bpart/oracle.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

namespace bpart::oracle {
namespace {

void search(value_t rest, std::size_t pos, value_t power, unsigned b,
            std::vector<part_t>& digits, std::vector<partition>& out,
            std::size_t budget, basis base) {
  if (pos == 0) {
    if (out.size() >= budget) throw cap_exceeded("brute_enumerate budget exceeded");
    digits[0] = rest;
    out.emplace_back(digits, base);
    return;
  }
  for (value_t c = rest / power; ; --c) {
    digits[pos] = c;
    search(rest - c * power, pos - 1, power / b, b, digits, out, budget, base);
    if (c == 0) break;
  }
}

struct vec_hash {
  std::size_t operator()(const std::vector<part_t>& v) const {
    std::size_t h = 14695981039346656037ull;
    for (part_t x : v) h = (h ^ x) * 1099511628211ull;
    return h;
  }
};

}  // namespace

std::vector<partition> brute_enumerate(value_t n, basis b, std::size_t budget) {
  std::size_t top = 0;
  value_t power = 1;
  while (power <= n / b.value()) {
    power *= b.value();
    ++top;
  }
  std::vector<part_t> digits(top + 1, 0);
  std::vector<partition> out;
  search(n, top, power, b.value(), digits, out, budget, b);
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t brute_count(value_t n, basis b, std::size_t budget) {
  return brute_enumerate(n, b, budget).size();
}

bool brute_leq(const partition& p, const partition& q, value_t n, std::size_t budget) {
  if (value(p) != n || value(q) != n || !(p.base() == q.base()))
    throw std::invalid_argument("brute_leq: operands must represent n in one basis");
  const part_t b = p.base().value();
  std::unordered_set<std::vector<part_t>, vec_hash> seen;
  std::deque<std::vector<part_t>> frontier;
  seen.insert(q.parts());
  frontier.push_back(q.parts());
  while (!frontier.empty()) {
    std::vector<part_t> cur = std::move(frontier.front());
    frontier.pop_front();
    if (cur == p.parts()) return true;
    for (std::size_t i = 0; i < cur.size(); ++i) {
      if (cur[i] < b) continue;
      std::vector<part_t> next = cur;
      next[i] -= b;
      if (i + 1 == next.size()) next.push_back(0);
      next[i + 1] += 1;
      while (!next.empty() && next.back() == 0) next.pop_back();
      if (seen.insert(next).second) {
        if (seen.size() > budget) throw cap_exceeded("brute_leq budget exceeded");
        frontier.push_back(std::move(next));
      }
    }
  }
  return false;
}

}  // namespace bpart::oracle
