#include "roq/mobius.hpp"

#include <algorithm>

#include "roq/errors.hpp"

namespace roq {

ElementaryAbelianLattice mobius_lattice(const Subgroup& e) {
  ElementaryAbelianLattice lat;
  lat.subgroups = elementary_abelian_subgroups(e);
  const std::uint64_t p = e.parent->prime();
  const std::size_t n = lat.subgroups.size();

  lat.mu.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    int r = lat.subgroups[i].rank;
    std::int64_t v = 1;
    for (int j = 0; j < r * (r - 1) / 2; ++j) v *= static_cast<std::int64_t>(p);
    lat.mu[i] = (r % 2 == 0) ? v : -v;
  }

  // Recursive poset Moebius as the cross-check: mu(1,1) = 1 and the values
  // below any Z != 1 sum to zero.
  std::vector<std::int64_t> rec(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    std::int64_t below = 0;
    for (std::size_t j = 0; j < i; ++j) {
      const auto& wj = lat.subgroups[j].sub.members;
      const auto& zi = lat.subgroups[i].sub.members;
      if (wj.size() < zi.size() &&
          std::includes(zi.begin(), zi.end(), wj.begin(), wj.end()))
        below += rec[j];
    }
    rec[i] = (i == 0) ? 1 : -below;
  }
  if (rec != lat.mu)
    fail(Errc::internal, "closed-form Moebius disagrees with the poset recursion");
  return lat;
}

Rat mobius_lemma_max_deviation(const Subgroup& e,
                               const ElementaryAbelianLattice& lat) {
  Rat worst(0);
  for (ElemIndex z : e.members) {
    Rat sum(0);
    for (std::size_t i = 0; i < lat.subgroups.size(); ++i)
      if (lat.subgroups[i].sub.contains(z))
        sum += Rat(lat.mu[i], lat.subgroups[i].sub.size());
    if (abs(sum) > worst) worst = abs(sum);
  }
  return worst;
}

}  // namespace roq
