#include "roq/decompose.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace roq {

namespace {

std::uint32_t log_base(std::uint64_t p, std::uint64_t v) {
  std::uint32_t n = 0;
  while (v > 1) {
    v /= p;
    ++n;
  }
  return n;
}

void require_odd_p_group(const GroupTable& g) {
  if (g.order() == 1) return;
  if (g.prime() == 2)
    fail(Errc::odd_prime_required, "the order must be odd");
}

// Minimal power index per non-identity class, in class order (index 0 of the
// result corresponds to class 1).
std::vector<std::uint64_t> minimal_indices(const GroupTable& g,
                                           const ClassData& cd) {
  std::vector<std::uint64_t> out;
  out.reserve(cd.count() - 1);
  for (std::uint32_t c = 1; c < cd.count(); ++c)
    out.push_back(minimal_power_index(g, cd, c));
  return out;
}

LSequence l_from_minimal(const GroupTable& g,
                         const std::vector<std::uint64_t>& mins) {
  const std::uint64_t p = g.prime();
  LSequence ls;
  ls.p = p;
  std::uint32_t r = log_base(p, exponent(g));
  // Cumulative counting: a class with minimal index p^k is conjugacy-stable
  // under 1+p^n for every n >= k (monotonicity, odd p).
  std::vector<std::uint64_t> by_n(r + 2, 0);
  for (std::uint64_t pm : mins) {
    std::uint32_t n = log_base(p, pm);
    if (n <= r) ++by_n[n];
  }
  ls.values.assign(r + 1, 1);
  std::uint64_t acc = 1;
  for (std::uint32_t n = 1; n <= r; ++n) {
    acc += by_n[n];
    ls.values[n] = acc;
  }
  return ls;
}

}  // namespace

std::uint64_t minimal_power_index(const GroupTable& g, const ClassData& cd,
                                  std::uint32_t c) {
  if (c == 0 || c >= cd.count())
    fail(Errc::bad_parameter, "class id out of range or identity class");
  const std::uint64_t p = g.prime();
  const ElemIndex y = cd.reps[c];
  std::uint64_t pn = 1;
  ElemIndex u = y;
  while (true) {
    pn *= p;
    u = power(g, u, static_cast<std::int64_t>(p));
    ElemIndex z = g.mul(y, u);
    if (cd.class_of[z] == c) return pn;
    if (pn > g.order())
      fail(Errc::non_termination,
           "power index exceeded the group order; class data is corrupt");
  }
}

LSequence l_sequence(const GroupTable& g, const ClassData& cd) {
  require_odd_p_group(g);
  if (g.order() == 1) return LSequence{1, {1}};
  return l_from_minimal(g, minimal_indices(g, cd));
}

LSequence l_sequence(const GroupTable& g) {
  return l_sequence(g, conjugacy_classes(g));
}

LSequence l_sequence_naive(const GroupTable& g, const ClassData& cd) {
  require_odd_p_group(g);
  if (g.order() == 1) return LSequence{1, {1}};
  const std::uint64_t p = g.prime();
  const std::uint32_t r = log_base(p, exponent(g));
  LSequence ls;
  ls.p = p;
  ls.values.assign(r + 1, 1);
  // Member lists per class, for the scan-based conjugacy test.
  std::vector<std::vector<ElemIndex>> members(cd.count());
  for (ElemIndex x = 0; x < g.order(); ++x)
    members[cd.class_of[x]].push_back(x);

  std::uint64_t pn = 1;
  for (std::uint32_t n = 1; n <= r; ++n) {
    pn *= p;
    std::vector<bool> hit(cd.count(), false);
    for (ElemIndex s = 0; s < g.order(); ++s) {
      Perm z = g.element(power(g, s, static_cast<std::int64_t>(pn + 1)));
      for (ElemIndex m : members[cd.class_of[s]]) {
        if (g.element(m) == z) {
          hit[cd.class_of[s]] = true;
          break;
        }
      }
    }
    std::uint64_t count = 0;
    for (bool b : hit) count += b ? 1 : 0;
    ls.values[n] = count;
  }
  return ls;
}

Decomposition decompose(const GroupTable& g, const ClassData& cd) {
  if (g.order() == 1) return Decomposition{1, 1, {}};
  require_odd_p_group(g);
  const std::uint64_t p = g.prime();

  std::vector<std::uint64_t> mins = minimal_indices(g, cd);
  LSequence ls = l_from_minimal(g, mins);

  Decomposition d;
  d.p = p;
  d.order = g.order();
  for (std::uint32_t m = 1; m < ls.values.size(); ++m) {
    std::uint64_t diff = ls.values[m] - ls.values[m - 1];
    std::uint64_t div = 1;
    for (std::uint32_t i = 1; i < m; ++i) div *= p;
    div *= (p - 1);
    if (diff % div != 0)
      fail(Errc::divisibility_violation,
           "p^(m-1)(p-1) does not divide l_m - l_(m-1)");
    if (diff > 0) {
      std::uint64_t pm = 1;
      for (std::uint32_t i = 0; i < m; ++i) pm *= p;
      d.summands.emplace_back(pm, diff / div);
    }
  }

  // Counting form, as in the per-class reference loop: a_n from the number
  // of classes whose minimal index is exactly p^n.
  std::map<std::uint64_t, std::uint64_t> counted;
  for (std::uint64_t pm : mins) ++counted[pm];
  std::vector<std::pair<std::uint64_t, std::uint64_t>> alt;
  for (auto [pm, cnt] : counted) {
    std::uint64_t num = cnt * p;
    std::uint64_t den = (p - 1) * pm;
    if (num % den != 0)
      fail(Errc::divisibility_violation,
           "counting form multiplicity is not integral");
    alt.emplace_back(pm, num / den);
  }
  if (alt != d.summands)
    fail(Errc::internal,
         "difference form and counting form disagree on the multiplicities");
  return d;
}

Decomposition decompose(const GroupTable& g) {
  if (g.order() == 1) return Decomposition{1, 1, {}};
  require_odd_p_group(g);
  return decompose(g, conjugacy_classes(g));
}

std::string render_gap(const Decomposition& d) {
  std::ostringstream os;
  os << "[ [ 1, 1 ]";
  for (auto [pm, a] : d.summands) os << ", [ " << pm << ", " << a << " ]";
  os << " ]";
  return os.str();
}

std::string render_json(const Decomposition& d) {
  std::ostringstream os;
  os << "{\"p\":" << d.p << ",\"order\":" << d.order
     << ",\"summands\":[{\"q\":1,\"mult\":1}";
  for (auto [pm, a] : d.summands)
    os << ",{\"q\":" << pm << ",\"mult\":" << a << "}";
  os << "]}";
  return os.str();
}

}  // namespace roq
