#pragma once

#include <cstdint>
#include <vector>

namespace roq {

// A permutation of {0,...,degree-1}, stored as its image vector.
// Composition acts on the left: (a*b)(i) = a(b(i)).
using Point = std::uint16_t;
using Perm = std::vector<Point>;

constexpr std::size_t kMaxDegree = 65535;  // Point is 16-bit

Perm perm_identity(std::size_t degree);
bool perm_is_bijection(const Perm& a);
Perm perm_compose(const Perm& a, const Perm& b);
Perm perm_inverse(const Perm& a);

// Order of the permutation = lcm of its cycle lengths.
std::uint64_t perm_order(const Perm& a);

}  // namespace roq
