#include "roq/perm.hpp"

#include <numeric>

#include "roq/errors.hpp"

namespace roq {

Perm perm_identity(std::size_t degree) {
  Perm p(degree);
  for (std::size_t i = 0; i < degree; ++i) p[i] = static_cast<Point>(i);
  return p;
}

bool perm_is_bijection(const Perm& a) {
  std::vector<bool> seen(a.size(), false);
  for (Point v : a) {
    if (v >= a.size() || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

Perm perm_compose(const Perm& a, const Perm& b) {
  if (a.size() != b.size())
    fail(Errc::degree_mismatch, "composing permutations of different degree");
  Perm r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[b[i]];
  return r;
}

Perm perm_inverse(const Perm& a) {
  Perm r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[a[i]] = static_cast<Point>(i);
  return r;
}

std::uint64_t perm_order(const Perm& a) {
  std::vector<bool> seen(a.size(), false);
  std::uint64_t ord = 1;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (seen[i]) continue;
    std::uint64_t len = 0;
    std::size_t j = i;
    while (!seen[j]) {
      seen[j] = true;
      j = a[j];
      ++len;
    }
    ord = std::lcm(ord, len);
  }
  return ord;
}

}  // namespace roq
