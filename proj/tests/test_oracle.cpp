#include <doctest.h>

#include "rhorep/braid.hpp"
#include "rhorep/oracle.hpp"
#include "support.hpp"

using namespace rhorep;

TEST_CASE("float R-hat agrees with the exact one") {
  for (int r : {2, 3, 4, 5, 6}) CHECK(oracle::max_diff(oracle::to_complex(rhat_pair(r)), oracle::rhat_pair(r)) < 1e-12);
}

TEST_CASE("float model satisfies the braid relation on its own") {
  for (int r : {3, 4}) {
    auto a = oracle::sigma(3, 2, r, 1), b = oracle::sigma(3, 2, r, 2);
    CHECK(oracle::max_diff(a * b * a, b * a * b) < 1e-10);
  }
}

TEST_CASE("cell comparison on the dimension grid") {
  for (int r : {3, 4, 5})
    for (int n = 2; n <= 5; ++n)
      for (int l = 0; l <= std::min(3, r - 1); ++l) {
        oracle::FloatCheck fc = oracle::check_cell(n, l, r);
        CHECK(fc.worst < 1e-9);
        CHECK(fc.entries > 0);
      }
}

TEST_CASE("max_diff edge cases") {
  oracle::ZMatrix a = oracle::ZMatrix::Zero(2, 2), b = oracle::ZMatrix::Zero(2, 3);
  CHECK(std::isinf(oracle::max_diff(a, b)));
  CHECK(oracle::max_diff(oracle::ZMatrix(0, 0), oracle::ZMatrix(0, 0)) == 0.0);
  a(1, 0) = {0.0, 2.0};
  CHECK(oracle::max_diff(a, oracle::ZMatrix::Zero(2, 2)) == doctest::Approx(2.0));
}
