#include "roq/biset.hpp"

#include <utility>

namespace roq {

namespace {

void validate_actions(const BisetTable& b) {
  const GroupTable& q = *b.left_group()->group;
  const GroupTable& p = *b.right_group()->group;
  const std::uint32_t pts = b.points();

  for (std::uint32_t u = 0; u < pts; ++u) {
    if (b.left(0, u) != u || b.right(u, 0) != u)
      fail(Errc::bad_configuration, "identity moves a biset point");
  }
  // Compatibility on generators extends to all elements by induction on
  // word length, as does the commuting of the two actions.
  for (ElemIndex gen : q.generators()) {
    for (ElemIndex h = 0; h < q.order(); ++h) {
      ElemIndex gh = q.mul(gen, h);
      for (std::uint32_t u = 0; u < pts; ++u)
        if (b.left(gh, u) != b.left(gen, b.left(h, u)))
          fail(Errc::bad_configuration, "left action is not an action");
    }
  }
  for (ElemIndex gen : p.generators()) {
    for (ElemIndex x = 0; x < p.order(); ++x) {
      ElemIndex xg = p.mul(x, gen);
      for (std::uint32_t u = 0; u < pts; ++u)
        if (b.right(u, xg) != b.right(b.right(u, x), gen))
          fail(Errc::bad_configuration, "right action is not an action");
    }
  }
  for (ElemIndex qg : q.generators())
    for (ElemIndex pg : p.generators())
      for (std::uint32_t u = 0; u < pts; ++u)
        if (b.left(qg, b.right(u, pg)) != b.right(b.left(qg, u), pg))
          fail(Errc::bad_configuration, "left and right actions do not commute");
}

}  // namespace

BisetTable::BisetTable(CGroup left_group, CGroup right_group,
                       std::uint32_t points,
                       std::vector<std::uint32_t> left_action,
                       std::vector<std::uint32_t> right_action)
    : left_(std::move(left_group)),
      right_(std::move(right_group)),
      points_(points),
      left_action_(std::move(left_action)),
      right_action_(std::move(right_action)) {
  if (left_action_.size() != left_->order() * static_cast<std::size_t>(points_) ||
      right_action_.size() != static_cast<std::size_t>(points_) * right_->order())
    fail(Errc::bad_configuration, "action table size mismatch");
  validate_actions(*this);

  // Aggregate the double sum once: counts (c,d) = #{(u,x) : rep_c.u = u.x,
  // x in class d}. transfer() is then a plain matrix apply.
  const ClassData& cq = left_->classes;
  const ClassData& cp = right_->classes;
  counts_.assign(cq.count() * cp.count(), 0);
  for (std::uint32_t c = 0; c < cq.count(); ++c) {
    ElemIndex s = cq.reps[c];
    for (std::uint32_t u = 0; u < points_; ++u) {
      std::uint32_t target = left(s, u);
      for (ElemIndex x = 0; x < right_->order(); ++x)
        if (right(u, x) == target) ++counts_[c * cp.count() + cp.class_of[x]];
    }
  }
}

ClassFunction BisetTable::transfer(const ClassFunction& f) const {
  if (!same_classed_group(f.group, right_))
    fail(Errc::group_mismatch, "class function lives on the wrong group");
  const std::size_t kq = left_->class_count();
  const std::size_t kp = right_->class_count();
  ClassFunction out = zero_function(left_);
  const Rat scale = Rat(1, right_->order());
  for (std::size_t c = 0; c < kq; ++c) {
    Rat acc(0);
    for (std::size_t d = 0; d < kp; ++d) {
      std::int64_t n = counts_[c * kp + d];
      if (n != 0) acc += Rat(n) * f.values[d];
    }
    out.values[c] = acc * scale;
  }
  return out;
}

ClassFunction BisetTable::transfer_checked(const ClassFunction& f) const {
  if (!same_classed_group(f.group, right_))
    fail(Errc::group_mismatch, "class function lives on the wrong group");
  const GroupTable& q = *left_->group;
  const ClassData& cq = left_->classes;
  const ClassData& cp = right_->classes;
  std::vector<Rat> per_element(q.order(), Rat(0));
  for (ElemIndex s = 0; s < q.order(); ++s) {
    Rat acc(0);
    for (std::uint32_t u = 0; u < points_; ++u) {
      std::uint32_t target = left(s, u);
      for (ElemIndex x = 0; x < right_->order(); ++x)
        if (right(u, x) == target) acc += f.values[cp.class_of[x]];
    }
    per_element[s] = acc / Rat(right_->order());
  }
  for (ElemIndex s = 0; s < q.order(); ++s)
    if (per_element[s] != per_element[cq.reps[cq.class_of[s]]])
      fail(Errc::internal, "transfer image is not a central function");
  ClassFunction out = zero_function(left_);
  for (std::uint32_t c = 0; c < cq.count(); ++c)
    out.values[c] = per_element[cq.reps[c]];
  return out;
}

BisetTable identity_biset(CGroup p) {
  const GroupTable& g = *p->group;
  const std::uint32_t n = static_cast<std::uint32_t>(g.order());
  std::vector<std::uint32_t> act(static_cast<std::size_t>(n) * n);
  for (ElemIndex a = 0; a < n; ++a)
    for (ElemIndex b = 0; b < n; ++b) act[a * n + b] = g.mul(a, b);
  return BisetTable(p, p, n, act, act);
}

BisetTable iso_biset(CGroup p, CGroup q, const std::vector<ElemIndex>& iso) {
  const GroupTable& gp = *p->group;
  const GroupTable& gq = *q->group;
  if (gp.order() != gq.order() || iso.size() != gp.order())
    fail(Errc::bad_configuration, "isomorphism has the wrong size");
  std::vector<bool> seen(gq.order(), false);
  for (ElemIndex im : iso) {
    if (im >= gq.order() || seen[im])
      fail(Errc::bad_configuration, "isomorphism is not a bijection");
    seen[im] = true;
  }
  if (iso[0] != 0) fail(Errc::bad_configuration, "isomorphism moves identity");
  for (ElemIndex x = 0; x < gp.order(); ++x)
    for (ElemIndex y = 0; y < gp.order(); ++y)
      if (iso[gp.mul(x, y)] != gq.mul(iso[x], iso[y]))
        fail(Errc::bad_configuration, "map is not a homomorphism");

  const std::uint32_t n = static_cast<std::uint32_t>(gq.order());
  std::vector<std::uint32_t> left(static_cast<std::size_t>(n) * n);
  std::vector<std::uint32_t> right(static_cast<std::size_t>(n) * n);
  for (ElemIndex a = 0; a < n; ++a)
    for (std::uint32_t u = 0; u < n; ++u) left[a * n + u] = gq.mul(a, u);
  for (std::uint32_t u = 0; u < n; ++u)
    for (ElemIndex x = 0; x < n; ++x) right[u * n + x] = gq.mul(u, iso[x]);
  return BisetTable(std::move(q), std::move(p), n, std::move(left),
                    std::move(right));
}

namespace {

void require_same_parent(const CGroup& p, const Subgroup& h) {
  if (h.parent.get() != p->group.get() && !same_group(*h.parent, *p->group))
    fail(Errc::not_subgroup, "subgroup belongs to a different group");
}

}  // namespace

BisetTable restriction_biset(CGroup p, const Subgroup& h) {
  require_same_parent(p, h);
  SubgroupGroup sg = subgroup_as_group(h);
  CGroup hc = make_classed(sg.group);
  const GroupTable& g = *p->group;
  const std::uint32_t pts = static_cast<std::uint32_t>(g.order());
  std::vector<std::uint32_t> left(hc->order() * static_cast<std::size_t>(pts));
  std::vector<std::uint32_t> right(static_cast<std::size_t>(pts) * g.order());
  for (ElemIndex a = 0; a < hc->order(); ++a)
    for (std::uint32_t u = 0; u < pts; ++u)
      left[a * pts + u] = g.mul(sg.to_parent[a], u);
  for (std::uint32_t u = 0; u < pts; ++u)
    for (ElemIndex x = 0; x < g.order(); ++x)
      right[u * g.order() + x] = g.mul(u, x);
  return BisetTable(std::move(hc), std::move(p), pts, std::move(left),
                    std::move(right));
}

BisetTable induction_biset(CGroup p, const Subgroup& h) {
  require_same_parent(p, h);
  SubgroupGroup sg = subgroup_as_group(h);
  CGroup hc = make_classed(sg.group);
  const GroupTable& g = *p->group;
  const std::uint32_t pts = static_cast<std::uint32_t>(g.order());
  std::vector<std::uint32_t> left(g.order() * static_cast<std::size_t>(pts));
  std::vector<std::uint32_t> right(static_cast<std::size_t>(pts) * hc->order());
  for (ElemIndex a = 0; a < g.order(); ++a)
    for (std::uint32_t u = 0; u < pts; ++u) left[a * pts + u] = g.mul(a, u);
  for (std::uint32_t u = 0; u < pts; ++u)
    for (ElemIndex x = 0; x < hc->order(); ++x)
      right[u * hc->order() + x] = g.mul(u, sg.to_parent[x]);
  return BisetTable(std::move(p), std::move(hc), pts, std::move(left),
                    std::move(right));
}

BisetTable inflation_biset(CGroup p, const Subgroup& n) {
  require_same_parent(p, n);
  QuotientResult qr = quotient(p->group, n);
  CGroup qc = make_classed(qr.quotient);
  const GroupTable& gq = *qc->group;
  const std::uint32_t pts = static_cast<std::uint32_t>(gq.order());
  std::vector<std::uint32_t> left(p->order() * static_cast<std::size_t>(pts));
  std::vector<std::uint32_t> right(static_cast<std::size_t>(pts) * gq.order());
  for (ElemIndex a = 0; a < p->order(); ++a)
    for (std::uint32_t u = 0; u < pts; ++u)
      left[a * pts + u] = gq.mul(qr.projection[a], u);
  for (std::uint32_t u = 0; u < pts; ++u)
    for (ElemIndex x = 0; x < gq.order(); ++x)
      right[u * gq.order() + x] = gq.mul(u, x);
  return BisetTable(std::move(p), std::move(qc), pts, std::move(left),
                    std::move(right));
}

BisetTable deflation_biset(CGroup p, const Subgroup& n) {
  require_same_parent(p, n);
  QuotientResult qr = quotient(p->group, n);
  CGroup qc = make_classed(qr.quotient);
  const GroupTable& gq = *qc->group;
  const std::uint32_t pts = static_cast<std::uint32_t>(gq.order());
  std::vector<std::uint32_t> left(gq.order() * static_cast<std::size_t>(pts));
  std::vector<std::uint32_t> right(static_cast<std::size_t>(pts) * p->order());
  for (ElemIndex a = 0; a < gq.order(); ++a)
    for (std::uint32_t u = 0; u < pts; ++u) left[a * pts + u] = gq.mul(a, u);
  for (std::uint32_t u = 0; u < pts; ++u)
    for (ElemIndex x = 0; x < p->order(); ++x)
      right[u * p->order() + x] = gq.mul(u, qr.projection[x]);
  return BisetTable(std::move(qc), std::move(p), pts, std::move(left),
                    std::move(right));
}

BisetTable compose_bisets(const BisetTable& v, const BisetTable& u) {
  if (!same_classed_group(v.right_group(), u.left_group()))
    fail(Errc::group_mismatch, "bisets do not share the middle group");
  const GroupTable& q = *u.left_group()->group;
  const std::uint32_t nv = v.points();
  const std::uint32_t nu = u.points();
  const std::size_t pairs = static_cast<std::size_t>(nv) * nu;

  // Q-orbits of pairs under (a,b).q = (a.q, q^-1.b); sweep ascending so
  // orbit ids and representatives are deterministic.
  std::vector<std::uint32_t> orbit_of(pairs, UINT32_MAX);
  std::vector<std::pair<std::uint32_t, std::uint32_t>> reps;
  std::vector<std::size_t> stack;
  for (std::size_t start = 0; start < pairs; ++start) {
    if (orbit_of[start] != UINT32_MAX) continue;
    std::uint32_t oid = static_cast<std::uint32_t>(reps.size());
    reps.emplace_back(static_cast<std::uint32_t>(start / nu),
                      static_cast<std::uint32_t>(start % nu));
    orbit_of[start] = oid;
    stack.assign(1, start);
    while (!stack.empty()) {
      std::size_t id = stack.back();
      stack.pop_back();
      std::uint32_t a = static_cast<std::uint32_t>(id / nu);
      std::uint32_t b = static_cast<std::uint32_t>(id % nu);
      for (ElemIndex qe = 0; qe < q.order(); ++qe) {
        std::size_t nid = static_cast<std::size_t>(v.right(a, qe)) * nu +
                          u.left(q.inv(qe), b);
        if (orbit_of[nid] == UINT32_MAX) {
          orbit_of[nid] = oid;
          stack.push_back(nid);
        }
      }
    }
  }

  const std::uint32_t pts = static_cast<std::uint32_t>(reps.size());
  const CGroup& r = v.left_group();
  const CGroup& p = u.right_group();
  std::vector<std::uint32_t> left(r->order() * static_cast<std::size_t>(pts));
  std::vector<std::uint32_t> right(static_cast<std::size_t>(pts) * p->order());
  for (ElemIndex re = 0; re < r->order(); ++re)
    for (std::uint32_t o = 0; o < pts; ++o)
      left[re * pts + o] =
          orbit_of[static_cast<std::size_t>(v.left(re, reps[o].first)) * nu +
                   reps[o].second];
  for (std::uint32_t o = 0; o < pts; ++o)
    for (ElemIndex x = 0; x < p->order(); ++x)
      right[o * p->order() + x] =
          orbit_of[static_cast<std::size_t>(reps[o].first) * nu +
                   u.right(reps[o].second, x)];
  return BisetTable(r, p, pts, std::move(left), std::move(right));
}

}  // namespace roq
