#pragma once

#include <stdexcept>
#include <string>

namespace roq {

// Error categories. The CLI maps these onto exit codes: domain rejections
// (odd_prime_required, not_a_p_group) exit 2, invariant violations
// (divisibility_violation, non_termination, internal) exit 3, everything
// else is an input/usage problem and exits 1.
enum class Errc {
  not_a_p_group,
  degree_mismatch,
  size_limit,
  not_normal,
  not_subgroup,
  prime_mismatch,
  not_elementary_abelian,
  not_abelian,
  syntax_error,
  bad_parameter,
  io_error,
  odd_prime_required,
  divisibility_violation,
  group_mismatch,
  bad_modulus,
  cyclic_center,
  bad_configuration,
  non_termination,
  internal,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace roq
