#include "bpart/partition.hpp"

#include <algorithm>

namespace bpart {

bool dominates(const shot_vector& a, const shot_vector& b) {
  std::size_t len = std::max(a.length(), b.length());
  for (std::size_t i = 0; i < len; ++i)
    if (a.at(i) < b.at(i)) return false;
  return true;
}

shot_vector component_min(const shot_vector& a, const shot_vector& b) {
  std::size_t len = std::max(a.length(), b.length());
  std::vector<value_t> out(len);
  for (std::size_t i = 0; i < len; ++i) out[i] = std::min(a.at(i), b.at(i));
  return shot_vector(std::move(out));
}

shot_vector component_max(const shot_vector& a, const shot_vector& b) {
  std::size_t len = std::max(a.length(), b.length());
  std::vector<value_t> out(len);
  for (std::size_t i = 0; i < len; ++i) out[i] = std::max(a.at(i), b.at(i));
  return shot_vector(std::move(out));
}

value_t value(const partition& p) {
  value_t b = p.base().value();
  value_t total = 0;
  value_t power = 1;
  for (std::size_t i = 0; i < p.length(); ++i) {
    if (i > 0 && __builtin_mul_overflow(power, b, &power))
      throw std::overflow_error("partition value exceeds 64 bits");
    value_t term;
    if (__builtin_mul_overflow(p.part(i), power, &term) ||
        __builtin_add_overflow(total, term, &total))
      throw std::overflow_error("partition value exceeds 64 bits");
  }
  return total;
}

partition canonical(value_t n, basis b) {
  std::vector<part_t> parts;
  for (value_t rest = n; rest != 0; rest /= b.value())
    parts.push_back(rest % b.value());
  return partition(std::move(parts), b);
}

partition fire(const partition& p, std::size_t i) {
  if (i >= p.length()) throw std::out_of_range("fire: no part at position");
  part_t b = p.base().value();
  if (p.part(i) < b) throw std::domain_error("fire: part below basis");
  std::vector<part_t> parts = p.parts();
  parts[i] -= b;
  if (i + 1 == parts.size()) parts.push_back(0);
  parts[i + 1] += 1;
  return partition(std::move(parts), p.base());
}

partition unfire(const partition& p, std::size_t i) {
  if (i == 0 || i >= p.length()) throw std::out_of_range("unfire: bad position");
  if (p.part(i) == 0) throw std::domain_error("unfire: empty part");
  std::vector<part_t> parts = p.parts();
  parts[i - 1] += p.base().value();
  parts[i] -= 1;
  return partition(std::move(parts), p.base());
}

std::vector<partition> successors(const partition& p) {
  std::vector<partition> out;
  for (std::size_t i = 0; i < p.length(); ++i)
    if (p.part(i) >= p.base().value()) out.push_back(fire(p, i));
  return out;
}

std::vector<partition> predecessors(const partition& p) {
  std::vector<partition> out;
  for (std::size_t i = 1; i < p.length(); ++i)
    if (p.part(i) >= 1) out.push_back(unfire(p, i));
  return out;
}

std::size_t leading(const partition& p) {
  part_t top = p.base().value() - 1;
  std::size_t i = 0;
  while (i < p.length() && p.part(i) == top) ++i;
  return i;
}

partition inc(const partition& p, std::size_t i) {
  if (leading(p) < i) throw std::domain_error("inc: first parts must equal basis-1");
  std::vector<part_t> parts = p.parts();
  if (parts.size() < i + 1) parts.resize(i + 1, 0);
  std::fill(parts.begin(), parts.begin() + static_cast<std::ptrdiff_t>(i), 0);
  parts[i] += 1;
  return partition(std::move(parts), p.base());
}

shot_vector shots(const partition& p, value_t n) {
  value_t b = p.base().value();
  std::vector<value_t> s;
  value_t prev = n;
  for (std::size_t i = 0; prev != 0 || i < p.length(); ++i) {
    part_t pi = p.part(i);
    if (prev < pi || (prev - pi) % b != 0)
      throw std::invalid_argument("shots: partition does not represent n");
    prev = (prev - pi) / b;
    s.push_back(prev);
  }
  return shot_vector(std::move(s));
}

partition partition_from_shots(value_t n, const shot_vector& s, basis b) {
  value_t bb = b.value();
  std::vector<part_t> parts(s.length() + 1);
  value_t prev = n;
  for (std::size_t i = 0; i <= s.length(); ++i) {
    value_t scaled;
    if (__builtin_mul_overflow(s.at(i), bb, &scaled))
      throw std::invalid_argument("shot vector not realizable");
    if (prev < scaled) throw std::invalid_argument("shot vector not realizable");
    parts[i] = prev - scaled;
    prev = s.at(i);
  }
  return partition(std::move(parts), b);
}

}  // namespace bpart
