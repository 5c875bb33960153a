#include "bpart/tree.hpp"

namespace bpart {

unsigned carry(value_t i, basis b) {
  if (i == 0) throw std::domain_error("carry: undefined at 0");
  unsigned k = 0;
  while (i % b.value() == 0) {
    i /= b.value();
    ++k;
  }
  return k;
}

std::vector<partition> children(const partition& t) {
  const std::size_t l = leading(t);
  std::vector<partition> sons;
  sons.reserve(l + 1);
  for (std::size_t i = 0; i <= l; ++i) sons.push_back(inc(t, i));
  return sons;
}

std::vector<partition> next_level(const std::vector<partition>& members) {
  std::vector<partition> out;
  for (const partition& t : members)
    for (partition& son : children(t)) out.push_back(std::move(son));
  return out;
}

void level_stream::advance() {
  std::vector<partition> next = next_level(members_);
  produced_ += next.size();
  if (produced_ > cap_) throw cap_exceeded("level stream cap exceeded");
  members_ = std::move(next);
  ++depth_;
}

std::vector<std::vector<partition>> levels(basis b, value_t max_depth,
                                           std::size_t cap) {
  level_stream stream(b, cap);
  std::vector<std::vector<partition>> out;
  out.push_back(stream.members());
  while (stream.depth() < max_depth) {
    stream.advance();
    out.push_back(stream.members());
  }
  return out;
}

std::vector<partition> enumerate(value_t n, basis b, std::size_t cap) {
  std::vector<partition> out;
  for_each_partition(n, b, [&](partition p) { out.push_back(std::move(p)); }, cap);
  return out;
}

partition rightmost_branch(basis b, value_t i) {
  if (i == 0) throw std::domain_error("rightmost_branch: positions start at 1");
  return canonical(i - 1, b);
}

std::optional<unsigned> subtree_order(const partition& t) {
  std::size_t zeros = 0;
  while (zeros < t.length() && t.part(zeros) == 0) ++zeros;
  if (zeros == t.length()) return std::nullopt;
  if (t.part(zeros) <= t.base().value() - 1) return std::nullopt;
  return static_cast<unsigned>(zeros) + 1;
}

}  // namespace bpart
