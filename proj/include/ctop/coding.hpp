#pragma once

#include <cmath>
#include <cstdint>
#include <set>
#include <utility>

#include "ctop/report.hpp"

namespace ctop {

using Nat = std::uint64_t;

// Canonical codings shared by all modules and by the instance file format.
// pair_encode is the Cantor pairing; set codes identify a finite set with the
// positions of the 1-bits of the code. Both are fixed once and bit-stable.

// Cantor pairing (a, b) -> (a+b)(a+b+1)/2 + b.
inline Nat pair_encode(Nat a, Nat b) {
  const Nat s = a + b;
  if (s < a || s > (Nat{1} << 32))
    throw input_error("input.capacity", "pair code out of range");
  return s * (s + 1) / 2 + b;
}

inline std::pair<Nat, Nat> pair_decode(Nat n) {
  // Largest s with s(s+1)/2 <= n, found from a float seed and corrected.
  Nat s = static_cast<Nat>((std::sqrt(8.0 * static_cast<double>(n) + 1.0) - 1.0) / 2.0);
  while (s * (s + 1) / 2 > n) --s;
  while ((s + 1) * (s + 2) / 2 <= n) ++s;
  const Nat b = n - s * (s + 1) / 2;
  return {s - b, b};
}

// Code of a finite subset of {0..63}: the positions of 1-bits.
inline Nat set_encode(const std::set<Nat>& s) {
  Nat code = 0;
  for (Nat e : s) {
    if (e >= 64) throw input_error("input.capacity", "set code element out of range");
    code |= Nat{1} << e;
  }
  return code;
}

inline std::set<Nat> set_decode(Nat code) {
  std::set<Nat> s;
  for (Nat e = 0; code != 0; ++e, code >>= 1)
    if (code & 1) s.insert(e);
  return s;
}

}  // namespace ctop
