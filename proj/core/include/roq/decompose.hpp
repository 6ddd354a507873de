#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "roq/classes.hpp"
#include "roq/group.hpp"

namespace roq {

// The counts l_0..l_r, where p^r is the group exponent: l_n is the number of
// conjugacy classes whose representative s satisfies s^(1+p^n) ~ s, and
// l_0 = 1 by convention. Non-decreasing for odd p; l_r = class count.
struct LSequence {
  std::uint64_t p = 1;
  std::vector<std::uint64_t> values;
};

// Multiset of cyclic-edge summands: pairs (p^m, a_m) with a_m > 0, sorted by
// p^m ascending, plus an implicit trivial summand of multiplicity 1.
struct Decomposition {
  std::uint64_t p = 1;
  std::uint64_t order = 1;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> summands;
};

// Smallest p^n (n >= 1) such that rep(c)^(1+p^n) lies back in class c,
// maintained by repeated p-th powers of u = rep^(p^n) exactly as in the
// per-class loop this algorithm is built around. c must not be the identity
// class. Throws NonTermination if n would exceed log_p(order), which can
// only happen with corrupted ClassData.
std::uint64_t minimal_power_index(const GroupTable& g, const ClassData& cd,
                                  std::uint32_t c);

// l-sequence via minimal power indices and cumulative counting (valid for
// odd p by monotonicity of the conjugacy condition in n). Rejects p = 2.
LSequence l_sequence(const GroupTable& g, const ClassData& cd);
LSequence l_sequence(const GroupTable& g);

// Baseline for benchmarking: per n, scan every element s, compute s^(1+p^n)
// from scratch and test conjugacy by scanning the member list of s's class.
// No minimal-index loop, no incremental powers. Same result as l_sequence.
LSequence l_sequence_naive(const GroupTable& g, const ClassData& cd);

// Decomposition into edges of cyclic groups for odd p:
//   a_m = (l_m - l_{m-1}) / (p^{m-1} (p-1)).
// The multiplicities are also recomputed by the counting form (number of
// classes with minimal power index exactly p^m, rescaled) and the two are
// cross-asserted. Throws OddPrimeRequired for p = 2, DivisibilityViolation
// if the division is not exact (an internal bug, not bad input).
Decomposition decompose(const GroupTable& g, const ClassData& cd);
Decomposition decompose(const GroupTable& g);

// Reference list format, e.g. "[ [ 1, 1 ], [ 3, 4 ], [ 9, 4 ] ]".
std::string render_gap(const Decomposition& d);
// {"p":3,"order":81,"summands":[{"q":1,"mult":1},...]}, summands by q asc.
std::string render_json(const Decomposition& d);

}  // namespace roq
