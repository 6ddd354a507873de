#include "roq/fn_space.hpp"

#include "roq/decompose.hpp"
#include "roq/errors.hpp"
#include "roq/rational.hpp"

namespace roq {

FnSpace fn_space(CGroup g, std::uint32_t n) {
  if (n == 0) fail(Errc::bad_parameter, "n must be positive");
  const GroupTable& gt = *g->group;
  const ClassData& cd = g->classes;
  const std::uint64_t p = gt.prime();
  const std::uint64_t expo = exponent(gt);
  const std::size_t k = cd.count();

  // 1 + p^n reduced mod the exponent; element orders all divide it.
  std::uint64_t pn = 1 % expo;
  for (std::uint32_t i = 0; i < n; ++i) pn = (pn * (p % expo)) % expo;
  std::uint64_t e = (1 + pn) % expo;

  FnSpace fs;
  fs.n = n;
  fs.sigma.resize(k);
  for (std::uint32_t c = 0; c < k; ++c)
    fs.sigma[c] = cd.class_of[power(gt, cd.reps[c], static_cast<std::int64_t>(e))];

  std::vector<bool> seen(k, false);
  for (std::uint32_t c = 0; c < k; ++c) {
    if (fs.sigma[c] == c) ++fs.fixed_count;
    if (!seen[c]) {
      ++fs.orbit_count;
      std::uint32_t x = c;
      while (!seen[x]) {
        seen[x] = true;
        x = fs.sigma[x];
      }
    }
  }
  if (!seen.empty()) {
    // sigma must be a bijection (s -> s^(1+p^n) is, on a p-group).
    std::vector<bool> image(k, false);
    for (std::uint32_t c = 0; c < k; ++c) {
      if (image[fs.sigma[c]])
        fail(Errc::internal, "power map is not a bijection on classes");
      image[fs.sigma[c]] = true;
    }
  }

  // Cross-check 1: the fixed-class count is l_n from the decomposition path.
  if (gt.order() > 1 && p != 2) {
    LSequence ls = l_sequence(gt, cd);
    std::uint64_t ln = n < ls.values.size() ? ls.values[n] : ls.values.back();
    if (fs.fixed_count != ln)
      fail(Errc::internal, "fixed-class count disagrees with the l-sequence");
  }

  // Cross-check 2: orbit count = dim ker(sigma* - id), by exact rank.
  RatMatrix m(k, std::vector<Rat>(k, Rat(0)));
  for (std::uint32_t c = 0; c < k; ++c) {
    m[c][fs.sigma[c]] += 1;  // (sigma* f)(c) = f(sigma(c))
    m[c][c] -= 1;
  }
  if (k - rational_rank(std::move(m)) != fs.orbit_count)
    fail(Errc::internal, "orbit count disagrees with the kernel dimension");

  fs.group = std::move(g);
  return fs;
}

}  // namespace roq
