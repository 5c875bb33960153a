#include <doctest.h>

#include "bpart/verify.hpp"

using namespace bpart;

TEST_CASE("cross validation passes over a small range") {
  for (unsigned bv : {2u, 3u}) {
    verify_options opt{basis(bv)};
    opt.max_n = 10;
    opt.order_max_n = 10;
    opt.cfg_max_n = 10;
    const auto results = run_verification(opt);
    CHECK(results.size() == 12);
    for (const check_result& r : results) {
      INFO(r.name, ": ", r.detail);
      CHECK(r.passed);
    }
  }
}
