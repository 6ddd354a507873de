#pragma once

#include <cstdint>
#include <vector>

#include "roq/class_function.hpp"
#include "roq/subgroup.hpp"

namespace roq {

// A finite (Q,P)-biset with explicit action tables. Validated on
// construction: both actions are genuine group actions and they commute
// (checked on generators, which extends to all elements).
//
// transfer() is the induced map CF(P) -> CF(Q),
//   f |-> ( s |-> 1/|P| * sum over u in U, x in P with s.u = u.x of f(x) ),
// realized by an integer pair-count matrix aggregated per class and built
// once from the full double sum. The raw action tables are kept so tests can
// evaluate the sum at every element independently.
class BisetTable {
 public:
  BisetTable(CGroup left_group, CGroup right_group, std::uint32_t points,
             std::vector<std::uint32_t> left_action,
             std::vector<std::uint32_t> right_action);

  const CGroup& left_group() const { return left_; }
  const CGroup& right_group() const { return right_; }
  std::uint32_t points() const { return points_; }

  std::uint32_t left(ElemIndex q, std::uint32_t u) const {
    return left_action_[static_cast<std::size_t>(q) * points_ + u];
  }
  std::uint32_t right(std::uint32_t u, ElemIndex x) const {
    return right_action_[static_cast<std::size_t>(u) * right_->order() + x];
  }

  // CF(P) -> CF(Q) through the class-aggregated double sum.
  ClassFunction transfer(const ClassFunction& f) const;

  // Same map, but evaluated independently at every element of Q from the raw
  // double sum; asserts the result is central. Used as a cross-check.
  ClassFunction transfer_checked(const ClassFunction& f) const;

  // Pair counts aggregated by class: entry (c, d) counts pairs (u, x) with
  // rep(c).u = u.x over x in class d.
  const std::vector<std::int64_t>& count_matrix() const { return counts_; }

 private:
  CGroup left_, right_;
  std::uint32_t points_;
  std::vector<std::uint32_t> left_action_;   // |Q| x points
  std::vector<std::uint32_t> right_action_;  // points x |P|
  std::vector<std::int64_t> counts_;         // k(Q) x k(P)
};

// Elementary bisets. Underlying sets are P itself or the quotient P/N with
// the evident actions.
BisetTable identity_biset(CGroup p);
// iso maps P element indices to Q element indices; must be an isomorphism.
BisetTable iso_biset(CGroup p, CGroup q, const std::vector<ElemIndex>& iso);
BisetTable restriction_biset(CGroup p, const Subgroup& h);
BisetTable induction_biset(CGroup p, const Subgroup& h);
BisetTable inflation_biset(CGroup p, const Subgroup& n);
BisetTable deflation_biset(CGroup p, const Subgroup& n);

// V x_Q U: the (R,P)-biset of Q-orbits of V x U under (v,u).q = (v.q, q^-1.u).
BisetTable compose_bisets(const BisetTable& v, const BisetTable& u);

}  // namespace roq
