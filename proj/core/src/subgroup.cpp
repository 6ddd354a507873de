#include "roq/subgroup.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <string>

namespace roq {

bool Subgroup::contains(ElemIndex i) const {
  return std::binary_search(members.begin(), members.end(), i);
}

Subgroup trivial_subgroup(GroupPtr g) { return Subgroup{std::move(g), {0}}; }

Subgroup whole_group(GroupPtr g) {
  std::vector<ElemIndex> all(g->order());
  for (std::uint32_t i = 0; i < all.size(); ++i) all[i] = i;
  return Subgroup{std::move(g), std::move(all)};
}

Subgroup subgroup_closure(GroupPtr g, const std::vector<ElemIndex>& gens) {
  std::set<ElemIndex> seen{0};
  std::vector<ElemIndex> stack{0};
  while (!stack.empty()) {
    ElemIndex x = stack.back();
    stack.pop_back();
    for (ElemIndex h : gens) {
      ElemIndex y = g->mul(x, h);
      if (seen.insert(y).second) stack.push_back(y);
    }
  }
  return Subgroup{std::move(g), {seen.begin(), seen.end()}};
}

Subgroup center(GroupPtr g) {
  std::vector<ElemIndex> out;
  for (ElemIndex x = 0; x < g->order(); ++x) {
    bool central = true;
    for (ElemIndex gen : g->generators())
      if (g->mul(x, gen) != g->mul(gen, x)) {
        central = false;
        break;
      }
    if (central) out.push_back(x);
  }
  return Subgroup{std::move(g), std::move(out)};
}

Subgroup centralizer(GroupPtr g, const Subgroup& s) {
  std::vector<ElemIndex> out;
  for (ElemIndex x = 0; x < g->order(); ++x) {
    bool commutes = true;
    for (ElemIndex m : s.members)
      if (g->mul(x, m) != g->mul(m, x)) {
        commutes = false;
        break;
      }
    if (commutes) out.push_back(x);
  }
  return Subgroup{std::move(g), std::move(out)};
}

Subgroup omega1_center(GroupPtr g) {
  Subgroup z = center(g);
  std::int64_t p = static_cast<std::int64_t>(g->prime());
  std::vector<ElemIndex> out;
  for (ElemIndex x : z.members)
    if (power(*g, x, p) == 0) out.push_back(x);
  return Subgroup{std::move(g), std::move(out)};
}

bool is_normal(const Subgroup& n) {
  const GroupTable& g = *n.parent;
  for (ElemIndex gen : g.generators()) {
    ElemIndex gi = g.inv(gen);
    for (ElemIndex m : n.members)
      if (!n.contains(g.mul(g.mul(gen, m), gi))) return false;
  }
  return true;
}

bool is_subgroup_of(const Subgroup& a, const Subgroup& b) {
  return std::includes(b.members.begin(), b.members.end(), a.members.begin(),
                       a.members.end());
}

QuotientResult quotient(GroupPtr g, const Subgroup& n) {
  if (n.parent.get() != g.get() && !same_group(*n.parent, *g))
    fail(Errc::not_subgroup, "subgroup belongs to a different table");
  if (!is_normal(n))
    fail(Errc::not_normal, "conjugation by a generator moves the subgroup");

  const std::size_t order = g->order();
  const std::size_t qorder = order / n.size();
  std::vector<std::uint32_t> coset_of(order, UINT32_MAX);
  std::vector<ElemIndex> coset_rep;
  for (ElemIndex x = 0; x < order; ++x) {
    if (coset_of[x] != UINT32_MAX) continue;
    std::uint32_t cid = static_cast<std::uint32_t>(coset_rep.size());
    coset_rep.push_back(x);
    for (ElemIndex m : n.members) coset_of[g->mul(x, m)] = cid;
  }

  // Left multiplication on cosets as a permutation of coset ids.
  auto coset_perm = [&](ElemIndex x) {
    Perm q(qorder);
    for (std::size_t c = 0; c < qorder; ++c)
      q[c] = static_cast<Point>(coset_of[g->mul(x, coset_rep[c])]);
    return q;
  };

  std::vector<Perm> qgens;
  for (ElemIndex gen : g->generators()) qgens.push_back(coset_perm(gen));
  GroupPtr q = close_generators(qgens, qorder == 1 ? 0 : g->prime(),
                                std::max(kDefaultElementCap, qorder));
  if (q->order() != qorder)
    fail(Errc::internal, "quotient closure has the wrong order");

  std::vector<ElemIndex> projection(order);
  for (ElemIndex x = 0; x < order; ++x)
    projection[x] = q->index_of(coset_perm(x));
  return QuotientResult{std::move(q), std::move(projection)};
}

SubgroupGroup subgroup_as_group(const Subgroup& h) {
  const GroupTable& g = *h.parent;
  // Greedy small generating set: grow the closure until it covers h.
  std::vector<ElemIndex> gens;
  std::set<ElemIndex> covered{0};
  for (ElemIndex m : h.members) {
    if (covered.count(m)) continue;
    gens.push_back(m);
    std::vector<ElemIndex> stack(covered.begin(), covered.end());
    while (!stack.empty()) {
      ElemIndex x = stack.back();
      stack.pop_back();
      for (ElemIndex hgen : gens) {
        ElemIndex y = g.mul(x, hgen);
        if (covered.insert(y).second) stack.push_back(y);
      }
    }
  }
  std::vector<Perm> gperms;
  for (ElemIndex m : gens) gperms.push_back(g.element(m));
  if (gperms.empty()) gperms.push_back(perm_identity(g.degree()));
  GroupPtr sub = close_generators(gperms, h.size() == 1 ? 0 : g.prime(),
                                  std::max(kDefaultElementCap, h.size()));
  if (sub->order() != h.size())
    fail(Errc::not_subgroup, "member list is not closed under products");
  std::vector<ElemIndex> to_parent(sub->order());
  for (ElemIndex i = 0; i < sub->order(); ++i)
    to_parent[i] = g.index_of(sub->element(i));
  return SubgroupGroup{std::move(sub), std::move(to_parent)};
}

std::vector<RankedSubgroup> elementary_abelian_subgroups(const Subgroup& e) {
  const GroupTable& g = *e.parent;
  const std::uint64_t p = g.prime();
  if (e.size() == 1)
    return {RankedSubgroup{trivial_subgroup(e.parent), 0}};

  for (ElemIndex m : e.members) {
    if (m == 0) continue;
    if (element_order(g, m) != p)
      fail(Errc::not_elementary_abelian, "member of order != p");
    for (ElemIndex m2 : e.members)
      if (g.mul(m, m2) != g.mul(m2, m))
        fail(Errc::not_elementary_abelian, "members do not commute");
  }
  int rank = 0;
  std::uint64_t sz = 1;
  while (sz < e.size()) {
    sz *= p;
    ++rank;
  }
  if (sz != e.size())
    fail(Errc::not_elementary_abelian, "size is not a power of p");
  if (rank > 4) fail(Errc::size_limit, "subspace enumeration capped at rank 4");

  // Span-growing enumeration of all subspaces, deduplicated by member list.
  std::set<std::vector<ElemIndex>> subs;
  std::vector<std::vector<ElemIndex>> frontier;
  subs.insert({0});
  frontier.push_back({0});
  while (!frontier.empty()) {
    std::vector<std::vector<ElemIndex>> next;
    for (const auto& s : frontier) {
      for (ElemIndex m : e.members) {
        if (std::binary_search(s.begin(), s.end(), m)) continue;
        std::set<ElemIndex> span(s.begin(), s.end());
        for (std::uint64_t k = 1; k < p; ++k) {
          ElemIndex mk = power(g, m, static_cast<std::int64_t>(k));
          for (ElemIndex x : s) span.insert(g.mul(x, mk));
        }
        std::vector<ElemIndex> t(span.begin(), span.end());
        if (subs.insert(t).second) next.push_back(std::move(t));
      }
    }
    frontier = std::move(next);
  }

  std::vector<std::vector<ElemIndex>> ordered(subs.begin(), subs.end());
  std::sort(ordered.begin(), ordered.end(),
            [](const auto& a, const auto& b) {
              if (a.size() != b.size()) return a.size() < b.size();
              return a < b;
            });
  std::vector<RankedSubgroup> out;
  for (auto& members : ordered) {
    int r = 0;
    std::uint64_t s = 1;
    while (s < members.size()) {
      s *= p;
      ++r;
    }
    out.push_back(RankedSubgroup{Subgroup{e.parent, std::move(members)}, r});
  }
  return out;
}

}  // namespace roq
