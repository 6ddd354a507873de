#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <vector>

namespace roq {

// Exact scalar domain for the class-function layer. Everything downstream
// of here is equality-testable with zero tolerance.
using Rat = boost::multiprecision::cpp_rational;
using Int = boost::multiprecision::cpp_int;

using RatMatrix = std::vector<std::vector<Rat>>;

// Rank by Gaussian elimination over the rationals (exact).
std::size_t rational_rank(RatMatrix m);

inline std::size_t kernel_dimension(RatMatrix m) {
  std::size_t cols = m.empty() ? 0 : m[0].size();
  return cols - rational_rank(std::move(m));
}

}  // namespace roq
