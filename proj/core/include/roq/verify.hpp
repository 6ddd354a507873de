#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "roq/group.hpp"
#include "roq/groupspec.hpp"

namespace roq {

enum class CheckStatus { pass, fail, skip };

struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::pass;
  std::string detail;
};

struct VerifyOptions {
  bool criterion_checks = false;  // vanishing sum, injectivity, Moebius lemma
  bool biset_checks = false;      // composition law, unit action
  std::size_t cap = kDefaultElementCap;
  std::uint64_t rng_seed = 0x5eed5eedULL;
};

// Per-group checks: two-formula agreement, class-count identity,
// monotonicity + stabilization against the direct per-n evaluation, the
// abelian oracle when applicable, the product check when the spec is a
// product, and rank consistency. Criterion/biset suites are added on demand
// and skip themselves on groups where they do not apply or are too large.
std::vector<CheckResult> verify_group(const GroupSpec& spec,
                                      const VerifyOptions& opts);

// Runs verify_group over the whole built-in corpus plus the corpus product
// pairs. Group names are prefixed to the check names.
std::vector<CheckResult> verify_corpus(const VerifyOptions& opts);

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace roq
