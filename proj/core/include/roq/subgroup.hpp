#pragma once

#include <cstdint>
#include <vector>

#include "roq/group.hpp"

namespace roq {

// A subgroup given by its sorted member indices in the parent table.
struct Subgroup {
  GroupPtr parent;
  std::vector<ElemIndex> members;  // sorted, contains 0

  std::size_t size() const { return members.size(); }
  bool contains(ElemIndex i) const;
};

Subgroup trivial_subgroup(GroupPtr g);
Subgroup whole_group(GroupPtr g);
Subgroup subgroup_closure(GroupPtr g, const std::vector<ElemIndex>& gens);

Subgroup center(GroupPtr g);
Subgroup centralizer(GroupPtr g, const Subgroup& s);
// Elements of the center with x^p = 1.
Subgroup omega1_center(GroupPtr g);

bool is_normal(const Subgroup& n);
bool is_subgroup_of(const Subgroup& a, const Subgroup& b);

struct QuotientResult {
  GroupPtr quotient;                    // regular action on the cosets of N
  std::vector<ElemIndex> projection;    // parent element -> quotient element
};

// Throws NotNormal / NotSubgroup.
QuotientResult quotient(GroupPtr g, const Subgroup& n);

// Realize a subgroup as a GroupTable of its own (same points), with the
// member map back into the parent.
struct SubgroupGroup {
  GroupPtr group;
  std::vector<ElemIndex> to_parent;  // subgroup element -> parent element
};
SubgroupGroup subgroup_as_group(const Subgroup& h);

struct RankedSubgroup {
  Subgroup sub;
  int rank;  // log_p |sub|
};

// All subgroups of an elementary abelian subgroup, viewed as subspaces of a
// rank-r space over F_p. Requires rank <= 4. Deterministic ordering:
// by size, then lexicographically by member list.
std::vector<RankedSubgroup> elementary_abelian_subgroups(const Subgroup& e);

}  // namespace roq
