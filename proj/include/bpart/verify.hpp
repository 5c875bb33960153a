#pragma once

// Cross-validation: plays the independent implementations against each other
// (brute force vs firing closure vs tree walk vs counting formulas vs the
// chip encoding) over a range of n and reports one result per check.

#include <string>
#include <vector>

#include "bpart/partition.hpp"

namespace bpart {

struct verify_options {
  basis b;
  value_t max_n = 30;
  // Exhaustive pairwise order checks are cubic in diagram size, so they stop
  // at this n; the remaining checks are cheap enough to run everywhere.
  value_t order_max_n = 20;
  value_t cfg_max_n = 30;
  std::size_t distributive_cap = 300;
  std::size_t budget = default_node_cap;
};

struct check_result {
  std::string name;
  bool passed;
  std::string detail;  // first counterexample when failed
};

std::vector<check_result> run_verification(const verify_options& opt);

}  // namespace bpart
