#pragma once

// Text, JSON and DOT renderings. The textual partition form is little-endian
// comma-separated parts ("p0,p1,..."); the empty partition renders as "0".

#include <string>
#include <string_view>

#include <json.hpp>

#include "bpart/lattice.hpp"
#include "bpart/partition.hpp"

namespace bpart {

std::string to_string(const partition& p);
std::string to_string(const shot_vector& s);

/// Parses "p0,p1,...". Trailing zero parts are dropped, so "0" is the empty
/// partition. Throws std::invalid_argument on anything else.
partition parse_partition(std::string_view text, basis b);

/// { "basis": b, "n": n, "nodes": [[p0,...],...], "edges": [[u,v,i],...] }
nlohmann::ordered_json hasse_to_json(const hasse_diagram& d);

/// One vertex per node labeled with its textual form, one arrow per covering
/// pair labeled with the fired position.
std::string hasse_to_dot(const hasse_diagram& d);

nlohmann::ordered_json partitions_to_json(const std::vector<partition>& ps);

/// { "basis": b, "levels": [[[p0,...],...],...] }
nlohmann::ordered_json levels_to_json(basis b,
                                      const std::vector<std::vector<partition>>& levels);

/// The expansion tree down to the given levels, parents joined to sons in
/// birth order.
std::string tree_to_dot(basis b, const std::vector<std::vector<partition>>& levels);

}  // namespace bpart
