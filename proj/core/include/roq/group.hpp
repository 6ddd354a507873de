#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "roq/errors.hpp"
#include "roq/perm.hpp"

namespace roq {

using ElemIndex = std::uint32_t;

// A concrete finite p-group: the full element enumeration of a permutation
// group, in breadth-first closure order from its generators. Element 0 is
// always the identity. Immutable after construction; safe to share across
// threads.
//
// The trivial group is stored with prime() == 1 ("no prime"); every
// nontrivial table has prime-power order for a genuine prime.
class GroupTable {
 public:
  std::size_t degree() const { return degree_; }
  std::size_t order() const { return elements_.size(); }
  std::uint64_t prime() const { return p_; }
  const Perm& element(ElemIndex i) const { return elements_[i]; }
  const std::vector<Perm>& elements() const { return elements_; }
  const std::vector<ElemIndex>& generators() const { return generators_; }

  // Product of elements i and j (composition of permutations).
  ElemIndex mul(ElemIndex i, ElemIndex j) const;
  ElemIndex inv(ElemIndex i) const { return inverses_[i]; }

  std::optional<ElemIndex> find(const Perm& q) const;
  // As find(), but the permutation must be a member.
  ElemIndex index_of(const Perm& q) const;

  GroupTable(const GroupTable&) = delete;
  GroupTable& operator=(const GroupTable&) = delete;

 private:
  GroupTable() = default;
  void generator_indices_resolve(const std::vector<Perm>& gens);
  friend class GroupBuilder;

  std::size_t degree_ = 0;
  std::uint64_t p_ = 1;
  std::vector<Perm> elements_;
  std::vector<ElemIndex> generators_;
  std::vector<ElemIndex> inverses_;
  // Open-addressing hash index over elements_ (no key copies).
  std::vector<std::uint32_t> buckets_;
  std::uint32_t bucket_mask_ = 0;
};

using GroupPtr = std::shared_ptr<const GroupTable>;

constexpr std::size_t kDefaultElementCap = 20000;

// Closure of the generators under composition, breadth-first, identity first.
// p = 0 means "infer the prime from the closure order". Throws NotAPGroup,
// DegreeMismatch or SizeLimit.
GroupPtr close_generators(const std::vector<Perm>& gens, std::uint64_t p,
                          std::size_t cap = kDefaultElementCap);

GroupPtr trivial_group();

// i^e by square-and-multiply; negative exponents go through the inverse.
ElemIndex power(const GroupTable& g, ElemIndex i, std::int64_t e);

// Least e >= 1 with i^e = identity. Read off the permutation's cycle
// structure, so this does not touch the multiplication tables.
std::uint64_t element_order(const GroupTable& g, ElemIndex i);

// Max of the element orders (the lcm, for a p-group).
std::uint64_t exponent(const GroupTable& g);

bool is_abelian(const GroupTable& g);

// G x H on degree(G) + degree(H) points. Throws PrimeMismatch when both
// factors are nontrivial with different primes.
GroupPtr direct_product(const GroupTable& g, const GroupTable& h);

bool same_group(const GroupTable& a, const GroupTable& b);

}  // namespace roq
