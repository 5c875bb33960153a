#pragma once

// Representations of a nonnegative integer as a sum of powers of a basis b,
// with unrestricted digits, and the firing dynamics that connect them.

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace bpart {

using part_t = std::uint64_t;
using value_t = std::uint64_t;

// Node budget for enumerations and diagram builds.
inline constexpr std::size_t default_node_cap = 2'000'000;

/// Thrown when an enumeration or diagram build exceeds its node budget.
class cap_exceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Radix of the power representation. Bases below 2 are rejected.
class basis {
 public:
  explicit basis(unsigned b) : b_(b) {
    if (b < 2) throw std::invalid_argument("basis must be at least 2");
  }
  unsigned value() const { return b_; }
  friend bool operator==(basis, basis) = default;

 private:
  unsigned b_;
};

/// A tuple of nonnegative parts (p_0,...,p_{k-1}) with value sum p_i * b^i.
/// Normalized: no trailing zero parts; the representation of 0 is the empty
/// tuple. The constructor trims, so any digit vector is accepted.
class partition {
 public:
  partition(std::vector<part_t> parts, basis b) : parts_(std::move(parts)), b_(b) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  }

  /// The one-part representation (n); the empty tuple when n is 0.
  static partition single(value_t n, basis b) {
    return n == 0 ? partition({}, b) : partition({n}, b);
  }

  const std::vector<part_t>& parts() const { return parts_; }
  basis base() const { return b_; }
  std::size_t length() const { return parts_.size(); }

  /// Part at position i, zero beyond the stored length.
  part_t part(std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }

  friend bool operator==(const partition& a, const partition& b) {
    return a.b_ == b.b_ && a.parts_ == b.parts_;
  }
  friend bool operator<(const partition& a, const partition& b) {
    return a.parts_ < b.parts_;
  }

 private:
  std::vector<part_t> parts_;
  basis b_;
};

struct partition_hash {
  std::size_t operator()(const partition& p) const {
    std::size_t h = 0x9e3779b97f4a7c15ull ^ p.base().value();
    for (part_t x : p.parts()) h = (h ^ x) * 0x100000001b3ull;
    return h;
  }
};

/// Per-position firing counts on a path from (n). Trailing zeros are trimmed;
/// comparisons and componentwise min/max pad with zeros on the right.
class shot_vector {
 public:
  shot_vector() = default;
  explicit shot_vector(std::vector<value_t> shots) : shots_(std::move(shots)) {
    while (!shots_.empty() && shots_.back() == 0) shots_.pop_back();
  }

  const std::vector<value_t>& shots() const { return shots_; }
  std::size_t length() const { return shots_.size(); }
  value_t at(std::size_t i) const { return i < shots_.size() ? shots_[i] : 0; }

  friend bool operator==(const shot_vector&, const shot_vector&) = default;

 private:
  std::vector<value_t> shots_;
};

/// True when a_i >= b_i at every position.
bool dominates(const shot_vector& a, const shot_vector& b);
shot_vector component_min(const shot_vector& a, const shot_vector& b);
shot_vector component_max(const shot_vector& a, const shot_vector& b);

/// Sum p_i * b^i. Throws std::overflow_error instead of wrapping.
value_t value(const partition& p);

/// The unique representation of n with every part below b.
partition canonical(value_t n, basis b);

/// Remove b units from part i, add one unit to part i+1 (extending the tuple
/// when i is the last position). Keeps the value.
/// Throws std::out_of_range when i is not a stored position,
/// std::domain_error when part i is below b.
partition fire(const partition& p, std::size_t i);

/// Inverse rewriting: add b units to part i-1, remove one from part i, so that
/// fire(unfire(p, i), i-1) == p.
/// Throws std::out_of_range when i is 0 or not a stored position,
/// std::domain_error when part i is 0.
partition unfire(const partition& p, std::size_t i);

/// All fire(p, i), ascending i. Empty exactly for the canonical representation.
std::vector<partition> successors(const partition& p);

/// All q with p among successors(q), ascending unfired position.
std::vector<partition> predecessors(const partition& p);

/// Number of leading parts equal to b-1.
std::size_t leading(const partition& p);

/// Flip the first i parts from b-1 to 0 and add one unit at position i
/// (odometer step); the value grows by exactly 1. Requires the first i parts
/// to equal b-1, else throws std::domain_error.
partition inc(const partition& p, std::size_t i);

/// Firing counts accumulated on any path from (n) to p, computed by the closed
/// recurrence s_0 = (n - p_0)/b, s_i = (s_{i-1} - p_i)/b. Throws
/// std::invalid_argument when value(p) != n (a division goes inexact or
/// negative).
shot_vector shots(const partition& p, value_t n);

/// Unique partition of n with the given shot vector. Throws
/// std::invalid_argument when some reconstructed part would be negative.
partition partition_from_shots(value_t n, const shot_vector& s, basis b);

}  // namespace bpart
