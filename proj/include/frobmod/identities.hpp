// Copyright 2026 The frobmod Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef FROBMOD_IDENTITIES_HPP_
#define FROBMOD_IDENTITIES_HPP_

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace frobmod {

/// Outcome of one exhaustive or randomized identity suite.
struct SuiteResult {
  std::string name;
  std::uint64_t cases = 0;
  std::uint64_t failures = 0;
  std::string detail;  // first failure, if any

  bool ok() const { return failures == 0 && cases > 0; }
};

using FieldList = std::vector<std::pair<std::uint32_t, unsigned>>;

/// (p, n) with p^n <= max_q: every n >= 2, plus n = 1 for p <= 31.
FieldList small_fields(std::uint64_t max_q);

/// Divisor sum against closed form on random pairs, p in {2, 3, 5}, degrees <= 8.
SuiteResult suite_t_identity(std::uint64_t seed, std::uint64_t cases);
/// Exhaustive order tallies against the polynomial totient.
SuiteResult suite_count_by_order(const FieldList& fields);
/// Character orders: basis test against the definitional test, and tallies.
SuiteResult suite_char_orders(const FieldList& fields);
/// Character-sum indicator against the gcd test, all elements and all pairs.
SuiteResult suite_indicator(const FieldList& fields);
/// gcd freeness test against the definitional oracle, all elements and pairs.
SuiteResult suite_freeness_oracle(const FieldList& fields);
/// Pair counts lie in the main-theorem interval; positivity criterion implies a
/// positive count.
SuiteResult suite_main_theorem(const FieldList& fields);
/// Weil bound on random nonsingular polynomials of degree <= 6.
SuiteResult suite_weil(std::uint64_t seed, std::uint64_t cases, std::uint64_t max_q);
/// Linear curves: no normal point when b = 0 or p | n; constructive point for
/// every normal alpha when p does not divide n.
SuiteResult suite_linear_curves(const FieldList& fields);

struct IdentityConfig {
  std::uint64_t seed = 20240601;
  std::uint64_t t_cases = 10000;
  std::uint64_t weil_cases = 1000;
  std::uint64_t oracle_max_q = 1024;
};

std::vector<SuiteResult> run_identity_suites(const IdentityConfig& cfg);

}  // namespace frobmod

#endif  // FROBMOD_IDENTITIES_HPP_
