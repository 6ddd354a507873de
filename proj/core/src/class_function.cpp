#include "roq/class_function.hpp"

#include "roq/errors.hpp"

namespace roq {

CGroup make_classed(GroupPtr g) {
  auto cg = std::make_shared<ClassedGroup>();
  cg->classes = conjugacy_classes(*g);
  cg->group = std::move(g);
  return cg;
}

bool same_classed_group(const CGroup& a, const CGroup& b) {
  return a.get() == b.get() || same_group(*a->group, *b->group);
}

ClassFunction zero_function(CGroup g) {
  std::vector<Rat> v(g->class_count(), Rat(0));
  return ClassFunction{std::move(g), std::move(v)};
}

ClassFunction constant_function(CGroup g, const Rat& value) {
  std::vector<Rat> v(g->class_count(), value);
  return ClassFunction{std::move(g), std::move(v)};
}

ClassFunction basis_function(CGroup g, std::uint32_t class_id) {
  if (class_id >= g->class_count())
    fail(Errc::bad_parameter, "class id out of range");
  ClassFunction f = zero_function(std::move(g));
  f.values[class_id] = 1;
  return f;
}

bool operator==(const ClassFunction& a, const ClassFunction& b) {
  return same_classed_group(a.group, b.group) && a.values == b.values;
}

}  // namespace roq
