#include "bpart/cfg.hpp"

#include <limits>

namespace bpart {

cfg_config initial_config(value_t n, basis b) {
  std::vector<chips_t> chips;
  if (n > 0) chips.emplace_back(n);
  return cfg_config(b, n, std::move(chips));
}

cfg_config fire_vertex(const cfg_config& c, std::size_t i) {
  if (i >= c.chips().size()) throw std::out_of_range("fire_vertex: no chips at vertex");
  chips_t degree = boost::multiprecision::pow(chips_t(c.base().value()),
                                              static_cast<unsigned>(i + 1));
  if (c.chips()[i] < degree) throw std::domain_error("fire_vertex: not enough chips");
  std::vector<chips_t> chips = c.chips();
  if (i + 1 == chips.size()) chips.emplace_back(0);
  chips[i] -= degree;
  chips[i + 1] += degree;
  return cfg_config(c.base(), c.n(), std::move(chips));
}

partition to_partition(const cfg_config& c) {
  std::vector<part_t> parts;
  parts.reserve(c.chips().size());
  chips_t power = 1;
  for (std::size_t i = 0; i < c.chips().size(); ++i) {
    if (i > 0) power *= c.base().value();
    chips_t q = c.chips()[i] / power;
    if (q * power != c.chips()[i])
      throw std::invalid_argument("to_partition: chips not a multiple of the vertex scale");
    if (q > std::numeric_limits<part_t>::max())
      throw std::overflow_error("to_partition: scaled chip count too large for a part");
    parts.push_back(static_cast<part_t>(q));
  }
  return partition(std::move(parts), c.base());
}

}  // namespace bpart
