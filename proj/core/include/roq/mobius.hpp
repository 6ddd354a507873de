#pragma once

#include <cstdint>
#include <vector>

#include "roq/rational.hpp"
#include "roq/subgroup.hpp"

namespace roq {

// Subgroup lattice of an elementary abelian group with Moebius values
// mu(1, Z). Closed form for rank r: (-1)^r * p^(r(r-1)/2), cross-checked on
// construction against the recursive poset computation
// (sum of mu(1, W) over W <= Z is zero for Z != 1).
struct ElementaryAbelianLattice {
  std::vector<RankedSubgroup> subgroups;
  std::vector<std::int64_t> mu;
};

ElementaryAbelianLattice mobius_lattice(const Subgroup& e);

// Max over z in E of | sum over subgroups Z containing z of mu(1,Z)/|Z| |.
// Zero whenever rank(E) >= 2.
Rat mobius_lemma_max_deviation(const Subgroup& e,
                               const ElementaryAbelianLattice& lat);

}  // namespace roq
