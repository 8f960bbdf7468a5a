#include <doctest.h>

#include "ctop/coding.hpp"

using namespace ctop;

TEST_CASE("pairing is a bijection on an initial segment") {
  CHECK(pair_decode(pair_encode(3, 4)) == std::pair<Nat, Nat>{3, 4});
  CHECK(pair_encode(0, 0) == 0);
  for (Nat n = 0; n < (1 << 16); ++n) {
    const auto [a, b] = pair_decode(n);
    CHECK(pair_encode(a, b) == n);
  }
}

TEST_CASE("pairing is injective on small arguments") {
  std::set<Nat> seen;
  for (Nat a = 0; a < 64; ++a)
    for (Nat b = 0; b < 64; ++b) CHECK(seen.insert(pair_encode(a, b)).second);
}

TEST_CASE("set codes round-trip") {
  CHECK(set_decode(0).empty());
  CHECK(set_decode(5) == std::set<Nat>{0, 2});
  CHECK(set_encode({0, 2}) == 5);
  for (Nat n = 0; n < (1 << 16); ++n) CHECK(set_encode(set_decode(n)) == n);
}

TEST_CASE("set codes reject out-of-range elements") {
  CHECK_THROWS_AS(set_encode({64}), input_error);
}
