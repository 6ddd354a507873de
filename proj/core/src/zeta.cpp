#include "roq/zeta.hpp"

#include <numeric>

#include "roq/errors.hpp"

namespace roq {

ClassFunction zeta_apply(const UnitAction& z, const ClassFunction& f) {
  const GroupTable& g = *f.group->group;
  const std::uint64_t p = g.prime();
  const std::uint64_t expo = exponent(g);

  std::uint64_t m = z.modulus;
  if (m == 0 || m % expo != 0)
    fail(Errc::bad_modulus, "modulus is not a multiple of the group exponent");
  if (p != 1) {
    std::uint64_t mm = m;
    while (mm % p == 0) mm /= p;
    if (mm != 1) fail(Errc::bad_modulus, "modulus is not a power of p");
    if (z.zeta % p == 0) fail(Errc::bad_modulus, "zeta is not a unit");
  }

  const ClassData& cd = f.group->classes;
  std::int64_t e = static_cast<std::int64_t>(z.zeta % m);
  ClassFunction out = zero_function(f.group);
  for (std::uint32_t c = 0; c < cd.count(); ++c) {
    ElemIndex img = power(g, cd.reps[c], e);
    out.values[c] = f.values[cd.class_of[img]];
  }
  return out;
}

}  // namespace roq
