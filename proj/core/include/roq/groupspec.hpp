#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "roq/group.hpp"

namespace roq {

// Group-specification language:
//   spec := term { "x" term }
//   term := "C(" int ")" | "EA(" int "," int ")" | "Ab(" int ",[" int {"," int} "])"
//         | "ES+(" int ")" | "M(" int "," int ")" | "SD(" int "," int "," int "," int ")"
//         | "perm:" path | "table:" path
// Whitespace is insignificant except inside paths (a path runs to the next
// whitespace or end of input). M(p,k) is sugar for the modular group
// SD(p, k-1, 1, 1+p^(k-2)) and is desugared at parse time.
struct GroupSpec {
  enum class Kind {
    cyclic,            // q
    abelian,           // p, type_seq
    elem_abelian,      // p, rank
    extraspecial,      // p (exponent-p type)
    semidirect,        // p, m, k, u:  <a,b | a^(p^m), b^(p^k), bab^-1 = a^u>
    product,           // children[0] x children[1]
    perm_file,         // path
    table_file,        // path
  };

  Kind kind = Kind::cyclic;
  std::uint64_t q = 1;  // cyclic
  std::uint64_t p = 0, rank = 0, m = 0, k = 0, u = 0;
  std::vector<std::uint64_t> type_seq;
  std::string path;
  std::vector<GroupSpec> children;

  friend bool operator==(const GroupSpec&, const GroupSpec&) = default;
};

// Throws SyntaxError (with position) or BadParameter. p = 2 is accepted
// here; the decomposition layer rejects it.
GroupSpec parse_spec(const std::string& text);

// Canonical text for an AST; render/parse round-trips to an equal AST.
std::string render_spec(const GroupSpec& spec);

// Realize the specified group as a GroupTable.
GroupPtr build(const GroupSpec& spec, std::size_t cap = kDefaultElementCap);

// One generator per line in disjoint-cycle notation with 1-based points,
// e.g. "(1 2 3)(4 5 6)"; blank lines and '#' comments ignored.
std::vector<Perm> read_perm_file(const std::string& path);
std::vector<Perm> parse_perm_lines(const std::string& text);

// "order N" then N rows of N 0-based indices; row i col j = index of i*j;
// element 0 must be the identity.
GroupPtr read_table_file(const std::string& path,
                         std::size_t cap = kDefaultElementCap);

}  // namespace roq
