#pragma once

#include <memory>
#include <vector>

#include "roq/classes.hpp"
#include "roq/group.hpp"
#include "roq/rational.hpp"

namespace roq {

// A group bundled with its conjugacy-class data. The class-function layer
// passes these around so that class ids always refer to one fixed partition.
struct ClassedGroup {
  GroupPtr group;
  ClassData classes;

  std::size_t class_count() const { return classes.count(); }
  std::size_t order() const { return group->order(); }
};

using CGroup = std::shared_ptr<const ClassedGroup>;

CGroup make_classed(GroupPtr g);

bool same_classed_group(const CGroup& a, const CGroup& b);

// Central function with exact rational values, one per conjugacy class.
struct ClassFunction {
  CGroup group;
  std::vector<Rat> values;
};

ClassFunction zero_function(CGroup g);
ClassFunction constant_function(CGroup g, const Rat& v);
// Indicator of a single class.
ClassFunction basis_function(CGroup g, std::uint32_t class_id);

bool operator==(const ClassFunction& a, const ClassFunction& b);

}  // namespace roq
