#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "roq/classes.hpp"
#include "roq/decompose.hpp"
#include "roq/group.hpp"

namespace roq {

// Independent cross-checks that share no code path with the minimal-index
// loop: these never call minimal_power_index, l_sequence or the
// Decomposition arithmetic.

// Direct evaluation of l_n: count classes whose representative satisfies
// rep^(1+p^n) ~ rep, one fresh power per class.
std::uint64_t l_direct(const GroupTable& g, const ClassData& cd,
                       std::uint32_t n);

// O(m, n) = number of orbits of multiplication by (1+p^n) on Z/p^m, built by
// brute-force orbit enumeration; O(0, n) = 1. The closed form
//   p^min(m,n) + max(0, m-n) * p^(n-1) * (p-1)
// is checked against the table by closed_form_agrees(); the table itself is
// the source of truth.
class OrbitCountTable {
 public:
  OrbitCountTable(std::uint64_t p, std::uint32_t max_m, std::uint32_t max_n);
  std::uint64_t p() const { return p_; }
  std::uint64_t at(std::uint32_t m, std::uint32_t n) const;
  bool closed_form_agrees() const;

 private:
  std::uint64_t p_;
  std::uint32_t max_m_, max_n_;
  std::vector<std::uint64_t> o_;  // (max_m+1) x max_n
};

// Decomposition of an abelian group from element orders alone:
// a_m = #{elements of order p^m} / (p^(m-1)(p-1)). Throws NotAbelian;
// a non-exact division aborts with DivisibilityViolation (it would mean a
// broken group table, not bad input).
Decomposition abelian_oracle(const GroupTable& g);

struct ProductCheckEntry {
  std::uint32_t n;
  std::uint64_t product_value;   // l_n(G x H), computed on the product
  std::uint64_t factor_product;  // l_n(G) * l_n(H)
};

struct ProductCheckReport {
  std::vector<ProductCheckEntry> entries;
  bool pass = false;
};

// l_n(G x H) = l_n(G) l_n(H) for all n up to the exponent of the product,
// all three sides evaluated by l_direct.
ProductCheckReport product_check(const GroupTable& g, const GroupTable& h);

struct RankConsistencyEntry {
  std::uint32_t n;
  std::uint64_t orbit_count;  // cycles of c -> class(rep^(1+p^n))
  std::uint64_t predicted;    // 1 + sum a_m (O(m,n) - O(m-1,n))
};

struct RankConsistencyReport {
  std::vector<RankConsistencyEntry> entries;
  bool pass = false;
};

// Instantiates the splitting of the invariant spaces over the summands with
// orbit counts: the sigma-orbit count on classes must equal the prediction
// from the decomposition multiplicities and the brute-force orbit table.
RankConsistencyReport rank_consistency(const GroupTable& g,
                                       const ClassData& cd,
                                       const Decomposition& d);

}  // namespace roq
