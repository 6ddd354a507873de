#pragma once

#include <cstdint>

#include "roq/class_function.hpp"

namespace roq {

// Action of a p-adic unit on class functions through its component
// zeta mod p^r, where p^r is a multiple of the group exponent:
// the image of f sends s to f(s^zeta).
struct UnitAction {
  std::uint64_t zeta = 1;
  std::uint64_t modulus = 1;  // p^r
};

// Throws BadModulus if the modulus is not a p-power multiple of the group
// exponent or gcd(zeta, p) != 1.
ClassFunction zeta_apply(const UnitAction& z, const ClassFunction& f);

}  // namespace roq
