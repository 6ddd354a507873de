#include "roq/classes.hpp"

namespace roq {

ClassData conjugacy_classes(const GroupTable& g) {
  const std::size_t n = g.order();
  ClassData cd;
  cd.class_of.assign(n, UINT32_MAX);

  std::vector<ElemIndex> stack;
  // Ascending sweep: each class is first entered at its minimal member, so
  // class ids are ordered by minimal member and reps are minimal.
  for (ElemIndex start = 0; start < n; ++start) {
    if (cd.class_of[start] != UINT32_MAX) continue;
    std::uint32_t cid = static_cast<std::uint32_t>(cd.reps.size());
    cd.reps.push_back(start);
    cd.class_of[start] = cid;
    std::uint32_t size = 1;
    stack.assign(1, start);
    while (!stack.empty()) {
      ElemIndex x = stack.back();
      stack.pop_back();
      for (ElemIndex gen : g.generators()) {
        ElemIndex y = g.mul(g.mul(gen, x), g.inv(gen));
        if (cd.class_of[y] == UINT32_MAX) {
          cd.class_of[y] = cid;
          ++size;
          stack.push_back(y);
        }
      }
    }
    cd.sizes.push_back(size);
  }
  return cd;
}

}  // namespace roq
