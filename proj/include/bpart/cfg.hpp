#pragma once

// Chip-firing encoding of the same dynamics: chips live on a line of
// vertices with b^{i+1} parallel edges from vertex i to vertex i+1, and a
// vertex holding at least its out-degree may send one chip along each
// outgoing edge. Scaling chip counts by b^-i recovers the partition moves.

#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "bpart/partition.hpp"

namespace bpart {

using chips_t = boost::multiprecision::cpp_int;

/// Chip placement on the vertex line. chips()[i] is a multiple of b^i;
/// the total over all vertices stays equal to n under firing.
class cfg_config {
 public:
  cfg_config(basis b, value_t n, std::vector<chips_t> chips)
      : b_(b), n_(n), chips_(std::move(chips)) {
    while (!chips_.empty() && chips_.back() == 0) chips_.pop_back();
  }

  basis base() const { return b_; }
  value_t n() const { return n_; }
  const std::vector<chips_t>& chips() const { return chips_; }

  friend bool operator==(const cfg_config& a, const cfg_config& b) {
    return a.b_ == b.b_ && a.n_ == b.n_ && a.chips_ == b.chips_;
  }
  friend bool operator<(const cfg_config& a, const cfg_config& b) {
    return a.chips_ < b.chips_;
  }

 private:
  basis b_;
  value_t n_;
  std::vector<chips_t> chips_;
};

/// All n chips on vertex 0.
cfg_config initial_config(value_t n, basis b);

/// Vertex i sends one chip along each of its b^{i+1} outgoing edges.
/// Throws std::out_of_range when vertex i holds no chips,
/// std::domain_error when it holds fewer than b^{i+1}.
cfg_config fire_vertex(const cfg_config& c, std::size_t i);

/// Scale vertex i by b^-i. Throws std::invalid_argument when some chip
/// count is not the required multiple, std::overflow_error when a scaled
/// entry does not fit a part.
partition to_partition(const cfg_config& c);

}  // namespace bpart
