#pragma once

// Brute-force reference implementations used to cross-check the fast paths.
// Everything here works by exhaustive digit search or explicit graph search
// and deliberately shares no logic with the rest of the library.

#include <cstdint>

#include "bpart/partition.hpp"

namespace bpart::oracle {

// Element budget for the brute-force searches.
inline constexpr std::size_t default_budget = 1'000'000;

/// Every digit vector (p_0,...,p_k) with sum p_i * b^i == n, found by trying
/// all digit choices from the highest power down. Sorted lexicographically.
/// Throws cap_exceeded when more than `budget` elements would be produced.
std::vector<partition> brute_enumerate(value_t n, basis b,
                                       std::size_t budget = default_budget);

/// Number of representations of n, by exhaustive search.
std::uint64_t brute_count(value_t n, basis b, std::size_t budget = default_budget);

/// True when p is reachable from q by repeatedly moving b units from some
/// position i to one unit at position i+1 (breadth-first search on raw digit
/// vectors). Requires value(p) == value(q) == n.
/// Throws cap_exceeded when more than `budget` vectors get visited.
bool brute_leq(const partition& p, const partition& q, value_t n,
               std::size_t budget = default_budget);

}  // namespace bpart::oracle
