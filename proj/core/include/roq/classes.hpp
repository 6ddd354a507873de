#pragma once

#include <cstdint>
#include <vector>

#include "roq/group.hpp"

namespace roq {

// Conjugacy-class partition. Classes are numbered by their minimal member
// (ascending), so class 0 is {identity} and the representative of each class
// is its smallest element index. Deterministic for a given GroupTable.
struct ClassData {
  std::vector<std::uint32_t> class_of;  // element index -> class id
  std::vector<ElemIndex> reps;          // class id -> minimal member
  std::vector<std::uint32_t> sizes;

  std::size_t count() const { return reps.size(); }
};

// Orbits of the conjugation action of the generators.
ClassData conjugacy_classes(const GroupTable& g);

}  // namespace roq
