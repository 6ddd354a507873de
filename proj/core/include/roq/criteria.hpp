#pragma once

#include <cstddef>

#include "roq/biset.hpp"
#include "roq/rational.hpp"

namespace roq {

// Rationality-criterion checks for the class-function functor.

// For a group with noncyclic center, the Moebius-weighted sum of
// Inf o Def over all subgroups Z of E = omega1(center) annihilates every
// class function. Evaluates the sum through the biset machinery on every
// basis function and returns the largest absolute value seen (exactly 0 on
// success). Throws CyclicCenter if the precondition fails.
Rat vanishing_sum(CGroup g);

struct RankReport {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::size_t rank = 0;
  bool full_rank() const { return rank == cols; }
};

// For E normal elementary abelian of rank 2 and Z <= E central of order p,
// the stacked map CF(G) -> CF(C_G(E)) + CF(G/Z) assembled from the
// restriction and deflation bisets; reports its exact rank (full rank =
// trivial kernel = injectivity). Throws BadConfiguration on bad (E, Z).
RankReport res_def_injectivity(CGroup g, const Subgroup& e, const Subgroup& z);

}  // namespace roq
