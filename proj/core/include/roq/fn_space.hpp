#pragma once

#include <cstdint>
#include <vector>

#include "roq/class_function.hpp"

namespace roq {

// The invariant space of f(s^(1+p^n)) = f(s) inside the class functions,
// described by the permutation sigma it induces on class ids
// (c -> class of rep(c)^(1+p^n)).
//
// fixed_count is the number of sigma-fixed classes and equals l_n;
// orbit_count is the number of sigma-cycles and equals the dimension of the
// solution space. The two genuinely differ in general (C_9, n=1: 3 vs 5);
// both are reported, neither is coerced to the other.
struct FnSpace {
  CGroup group;
  std::uint32_t n = 1;
  std::vector<std::uint32_t> sigma;  // permutation of class ids
  std::uint64_t fixed_count = 0;     // = l_n
  std::uint64_t orbit_count = 0;     // = dim of the invariant space
};

// Builds sigma and cross-checks at construction: fixed_count against the
// l-sequence of the decomposition path, and orbit_count against the exact
// kernel dimension of (sigma* - identity) on class functions. Both checks
// throw Errc::internal on mismatch. Desk scale (dense exact rank in the
// class count).
FnSpace fn_space(CGroup g, std::uint32_t n);

}  // namespace roq
