#include "roq/group.hpp"

#include <algorithm>
#include <cstring>
#include <deque>
#include <string>

namespace roq {

namespace {

std::uint64_t hash_perm(const Perm& p) {
  // FNV-1a over the image bytes.
  std::uint64_t h = 1469598103934665603ULL;
  for (Point v : p) {
    h ^= static_cast<std::uint64_t>(v);
    h *= 1099511628211ULL;
  }
  return h;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// order = p^k for exactly one prime p, or 0 if not a prime power.
std::uint64_t prime_power_base(std::uint64_t order) {
  if (order < 2) return 0;
  std::uint64_t p = 2;
  while (order % p != 0) {
    ++p;
    if (p * p > order) {
      p = order;  // order itself is prime
      break;
    }
  }
  std::uint64_t n = order;
  while (n % p == 0) n /= p;
  return n == 1 ? p : 0;
}

}  // namespace

class GroupBuilder {
 public:
  static GroupPtr closure(const std::vector<Perm>& gens, std::uint64_t p,
                          std::size_t cap);
  static GroupPtr trivial();

 private:
  static void build_index(GroupTable& g);
  static std::uint32_t probe(const GroupTable& g, const Perm& q);
};

std::uint32_t GroupBuilder::probe(const GroupTable& g, const Perm& q) {
  // Returns a bucket holding q's index, or the first empty bucket.
  std::uint64_t h = hash_perm(q);
  std::uint32_t b = static_cast<std::uint32_t>(h) & g.bucket_mask_;
  while (true) {
    std::uint32_t slot = g.buckets_[b];
    if (slot == UINT32_MAX || g.elements_[slot] == q) return b;
    b = (b + 1) & g.bucket_mask_;
  }
}

void GroupBuilder::build_index(GroupTable& g) {
  std::size_t want = 2;
  while (want < g.elements_.size() * 2) want <<= 1;
  g.buckets_.assign(want, UINT32_MAX);
  g.bucket_mask_ = static_cast<std::uint32_t>(want - 1);
  for (std::uint32_t i = 0; i < g.elements_.size(); ++i)
    g.buckets_[probe(g, g.elements_[i])] = i;
}

GroupPtr GroupBuilder::trivial() {
  auto g = std::shared_ptr<GroupTable>(new GroupTable());
  g->degree_ = 1;
  g->p_ = 1;
  g->elements_.push_back(perm_identity(1));
  g->inverses_.push_back(0);
  build_index(*g);
  return g;
}

GroupPtr GroupBuilder::closure(const std::vector<Perm>& gens, std::uint64_t p,
                               std::size_t cap) {
  if (cap < 1) fail(Errc::bad_parameter, "element cap must be >= 1");
  if (gens.empty()) return trivial();

  std::size_t degree = gens[0].size();
  if (degree > kMaxDegree) fail(Errc::size_limit, "degree exceeds 65535");
  for (const Perm& g : gens) {
    if (g.size() != degree)
      fail(Errc::degree_mismatch, "generators act on different point counts");
    if (!perm_is_bijection(g))
      fail(Errc::bad_parameter, "generator is not a permutation");
  }
  if (p != 0) {
    if (!is_prime(p)) fail(Errc::bad_parameter, "p must be prime");
    for (const Perm& g : gens) {
      std::uint64_t o = perm_order(g);
      while (o % p == 0) o /= p;
      if (o != 1)
        fail(Errc::not_a_p_group, "generator order is not a power of p");
    }
  }

  auto table = std::shared_ptr<GroupTable>(new GroupTable());
  GroupTable& g = *table;
  g.degree_ = degree;
  g.elements_.push_back(perm_identity(degree));

  // Seed the hash index big enough for the cap so we never rehash mid-walk.
  std::size_t want = 2;
  while (want < (cap + 1) * 2) want <<= 1;
  g.buckets_.assign(want, UINT32_MAX);
  g.bucket_mask_ = static_cast<std::uint32_t>(want - 1);
  g.buckets_[probe(g, g.elements_[0])] = 0;

  // Breadth-first closure in deterministic order: elements in discovery
  // order, generators in the order given.
  for (std::uint32_t at = 0; at < g.elements_.size(); ++at) {
    for (const Perm& gen : gens) {
      Perm next = perm_compose(g.elements_[at], gen);
      std::uint32_t b = probe(g, next);
      if (g.buckets_[b] != UINT32_MAX) continue;
      if (g.elements_.size() >= cap)
        fail(Errc::size_limit,
             "closure exceeds the element cap (" + std::to_string(cap) + ")");
      g.buckets_[b] = static_cast<std::uint32_t>(g.elements_.size());
      g.elements_.push_back(std::move(next));
    }
  }

  std::uint64_t order = g.elements_.size();
  if (order == 1) {
    g.p_ = 1;
  } else {
    std::uint64_t base = prime_power_base(order);
    if (base == 0)
      fail(Errc::not_a_p_group,
           "closure order " + std::to_string(order) + " is not a prime power");
    if (p != 0 && base != p)
      fail(Errc::not_a_p_group, "closure order " + std::to_string(order) +
                                    " is not a power of " + std::to_string(p));
    g.p_ = base;
  }

  g.generator_indices_resolve(gens);
  g.inverses_.resize(order);
  for (std::uint32_t i = 0; i < order; ++i)
    g.inverses_[i] = g.index_of(perm_inverse(g.elements_[i]));
  return table;
}

void GroupTable::generator_indices_resolve(const std::vector<Perm>& gens) {
  generators_.clear();
  for (const Perm& gen : gens) generators_.push_back(index_of(gen));
}

ElemIndex GroupTable::mul(ElemIndex i, ElemIndex j) const {
  return index_of(perm_compose(elements_[i], elements_[j]));
}

std::optional<ElemIndex> GroupTable::find(const Perm& q) const {
  std::uint64_t h = hash_perm(q);
  std::uint32_t b = static_cast<std::uint32_t>(h) & bucket_mask_;
  while (true) {
    std::uint32_t slot = buckets_[b];
    if (slot == UINT32_MAX) return std::nullopt;
    if (elements_[slot] == q) return slot;
    b = (b + 1) & bucket_mask_;
  }
}

ElemIndex GroupTable::index_of(const Perm& q) const {
  auto i = find(q);
  if (!i) fail(Errc::internal, "permutation is not a group member");
  return *i;
}

GroupPtr close_generators(const std::vector<Perm>& gens, std::uint64_t p,
                          std::size_t cap) {
  return GroupBuilder::closure(gens, p, cap);
}

GroupPtr trivial_group() { return GroupBuilder::trivial(); }

ElemIndex power(const GroupTable& g, ElemIndex i, std::int64_t e) {
  if (e < 0) {
    i = g.inv(i);
    e = -e;
  }
  ElemIndex acc = 0;
  ElemIndex base = i;
  std::uint64_t k = static_cast<std::uint64_t>(e);
  while (k > 0) {
    if (k & 1) acc = g.mul(acc, base);
    k >>= 1;
    if (k) base = g.mul(base, base);
  }
  return acc;
}

std::uint64_t element_order(const GroupTable& g, ElemIndex i) {
  return perm_order(g.element(i));
}

std::uint64_t exponent(const GroupTable& g) {
  std::uint64_t m = 1;
  for (std::uint32_t i = 0; i < g.order(); ++i)
    m = std::max(m, element_order(g, i));
  return m;
}

bool is_abelian(const GroupTable& g) {
  // Generators commuting pairwise is enough.
  for (ElemIndex a : g.generators())
    for (ElemIndex b : g.generators())
      if (g.mul(a, b) != g.mul(b, a)) return false;
  return true;
}

GroupPtr direct_product(const GroupTable& g, const GroupTable& h) {
  if (g.prime() != 1 && h.prime() != 1 && g.prime() != h.prime())
    fail(Errc::prime_mismatch, "direct product of groups with different p");
  std::size_t dg = g.degree();
  std::size_t dh = h.degree();
  if (dg + dh > kMaxDegree) fail(Errc::size_limit, "product degree too large");

  std::vector<Perm> gens;
  for (ElemIndex gi : g.generators()) {
    Perm q = g.element(gi);
    q.reserve(dg + dh);
    for (std::size_t i = 0; i < dh; ++i) q.push_back(static_cast<Point>(dg + i));
    gens.push_back(std::move(q));
  }
  for (ElemIndex hi : h.generators()) {
    Perm q = perm_identity(dg + dh);
    const Perm& hp = h.element(hi);
    for (std::size_t i = 0; i < dh; ++i)
      q[dg + i] = static_cast<Point>(dg + hp[i]);
    gens.push_back(std::move(q));
  }
  std::uint64_t p = g.prime() != 1 ? g.prime() : h.prime();
  std::size_t cap = std::max<std::size_t>(kDefaultElementCap,
                                          g.order() * h.order());
  return close_generators(gens, p == 1 ? 0 : p, cap);
}

bool same_group(const GroupTable& a, const GroupTable& b) {
  if (&a == &b) return true;
  return a.degree() == b.degree() && a.order() == b.order() &&
         a.elements() == b.elements();
}

}  // namespace roq
