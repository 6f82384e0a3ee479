// Copyright 2026 The frobmod Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef FROBMOD_SIEVEBOUND_HPP_
#define FROBMOD_SIEVEBOUND_HPP_

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "frobmod/freeness.hpp"

namespace frobmod {

/// W(x^n - 1) and W((x^n - 1)/(x - 1)).
struct WPair {
  mpz_class w;
  mpz_class wq;
};

/// Counts irreducible factors through multiplicative orders; no factoring.
WPair w_exact(std::uint32_t p, std::uint64_t n);

/// (a, b) with W(x^n - 1) <= 2^((n + a)/b).
std::pair<unsigned, unsigned> lemma_params(std::uint32_t p);
double w_lemma_bound(std::uint32_t p, std::uint64_t n);

/// p^(n/2 - 2) >= W(x^n - 1) W((x^n - 1)/(x - 1)), either with exact W values
/// or with the lemma bound and W((x^n - 1)/(x - 1)) <= min(bound, 2^(n - 1)).
bool check_main_ineq(std::uint32_t p, std::uint64_t n, bool exact);

/// Largest n >= 2 failing the lemma-bound inequality for p (0 if none up to the cap).
std::uint64_t lemma_failure_nmax(std::uint32_t p, std::uint64_t cap = 4096);

struct ScanOptions {
  unsigned jobs = 1;
  unsigned shard_index = 0;
  unsigned shard_count = 1;
};

struct ScanReport {
  std::uint64_t n_min = 0, n_max = 0, p_max = 0;
  bool exact = true;
  /// (n, p), sorted.
  std::vector<std::pair<std::uint64_t, std::uint32_t>> pairs;
  std::map<std::uint64_t, std::uint64_t> counts;
  double seconds = 0;

  std::uint32_t largest_prime(std::uint64_t n) const;
};

/// Primes p <= p_max (restricted to the shard) and n in [n_min, n_max] failing
/// check_main_ineq.
ScanReport scan_failures(std::uint64_t n_min, std::uint64_t n_max, std::uint32_t p_max, bool exact,
                         const ScanOptions& opts = {});

/// Pairs (n, p), n >= n_min, failing the lemma-bound inequality. Finite for
/// n_min >= 5: past p = 29 the bound only improves with p.
std::vector<std::pair<std::uint64_t, std::uint32_t>> lemma_candidates(std::uint64_t n_min);

/// Exact failures among lemma_candidates(n_min), restricted to the shard.
ScanReport candidate_scan(std::uint64_t n_min, const ScanOptions& opts = {});

/// Sieve decomposition of rad((x^n - 1)/(x - 1)) (first) and rad(x^n - 1) (second).
SievePlan build_sieve_plan(std::uint32_t p, std::uint64_t n);

struct SieveCheck {
  SievePlan plan;
  bool pass_2u = false;   // (deg f - 1) W W (2u/delta + 2) form
  bool pass_uv = false;   // ((u + v)/delta + 2) form
  double lhs = 0;         // p^(n/2 - 1)
  double rhs_2u = 0;
  double rhs_uv = 0;
};

/// p^(n/2 - 1) >= p W(k1) W(k2) (2u/delta + 2), decided exactly by squaring.
bool check_sieve_ineq(std::uint32_t p, std::uint64_t n);
SieveCheck sieve_check_details(std::uint32_t p, std::uint64_t n);

/// All primes up to limit.
std::vector<std::uint32_t> primes_up_to(std::uint32_t limit);

}  // namespace frobmod

#endif  // FROBMOD_SIEVEBOUND_HPP_
