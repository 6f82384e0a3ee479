// Copyright 2026 The frobmod Authors
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>

#include "doctest.h"
#include "frobmod/arithfun.hpp"
#include "frobmod/sievebound.hpp"
#include "test_util.hpp"

using namespace frobmod;
using testutil::to_poly;
using testutil::to_vec;

namespace {

mpz_class zpow(std::uint64_t b, std::uint64_t e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), b, e);
  return r;
}

// W from trial-division factoring.
std::pair<mpz_class, mpz_class> w_oracle(std::uint32_t p, unsigned n) {
  auto fac = oracle::factor(oracle::xn_minus_one(p, n), p);
  std::size_t r = fac.size();
  std::size_t rq = r - (n % p != 0 ? 1 : 0);
  return {mpz_class(1) << r, mpz_class(1) << rq};
}

}  // namespace

TEST_CASE("w_exact against trial division") {
  for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
    for (unsigned n = 1; n <= (p == 2 ? 12u : 7u); ++n) {
      auto [w, wq] = w_oracle(p, n);
      WPair got = w_exact(p, n);
      CHECK(got.w == w);
      CHECK(got.wq == wq);
    }
  }
  CHECK(w_exact(1000003, 4).w == w_count(Poly::xn_minus_one(1000003, 4)));
}

TEST_CASE("exact inequality against direct comparison") {
  for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
    for (unsigned n = 2; n <= (p == 2 ? 12u : 7u); ++n) {
      auto [w, wq] = w_oracle(p, n);
      bool want = zpow(p, n) >= (w * wq) * (w * wq) * zpow(p, 4);
      CHECK(check_main_ineq(p, n, true) == want);
    }
  }
}

TEST_CASE("lemma parameters") {
  CHECK(lemma_params(2) == std::pair<unsigned, unsigned>{14, 5});
  CHECK(lemma_params(3) == std::pair<unsigned, unsigned>{20, 4});
  CHECK(lemma_params(5) == std::pair<unsigned, unsigned>{18, 3});
  CHECK(lemma_params(23) == std::pair<unsigned, unsigned>{22, 2});
  CHECK(lemma_params(29).second == 1);
}

TEST_CASE("lemma bound dominates the exact W") {
  for (std::uint32_t p : {2u, 3u, 5u, 7u, 11u}) {
    for (unsigned n = 1; n <= 40; ++n) {
      double exact = std::log2(w_exact(p, n).w.get_d());
      CHECK(exact <= std::log2(w_lemma_bound(p, n)) + 1e-9);
    }
  }
}

TEST_CASE("lemma bound implies exact inequality") {
  for (std::uint32_t p : primes_up_to(200)) {
    for (unsigned n = 2; n <= 60; ++n) {
      if (check_main_ineq(p, n, false)) CHECK(check_main_ineq(p, n, true));
    }
  }
}

TEST_CASE("largest failing n per prime bracket") {
  CHECK(lemma_failure_nmax(2) == 75);
  CHECK(lemma_failure_nmax(3) == 45);
  std::uint64_t m = 0;
  for (std::uint32_t p : {11u, 13u, 17u, 19u, 23u}) m = std::max(m, lemma_failure_nmax(p));
  CHECK(m == 24);
  CHECK(lemma_failure_nmax(29) == 20);
}

TEST_CASE("n = 5 exact scan") {
  ScanReport r = scan_failures(5, 5, 290000, true);
  CHECK(r.pairs.size() == 5779);
  CHECK(r.counts.at(5) == 5779);
  CHECK(std::is_sorted(r.pairs.begin(), r.pairs.end()));
  // Every failure past the scan limit would need p^(1/2) < W W <= 4.
  CHECK(r.largest_prime(5) < 290000);
}

TEST_CASE("n >= 6 spot rows") {
  ScanReport r = candidate_scan(6);
  auto row = [&](std::uint64_t n) {
    std::vector<std::uint32_t> out;
    for (const auto& [nn, p] : r.pairs) {
      if (nn == n) out.push_back(p);
    }
    return out;
  };
  CHECK(row(7) == std::vector<std::uint32_t>{2, 3, 13, 29, 43, 71, 113, 127, 197, 211, 239, 281, 337, 379});
  CHECK(row(11) == std::vector<std::uint32_t>{23});
  CHECK(row(26) == std::vector<std::uint32_t>{3});
  CHECK(row(6).size() == 168);
  // Candidates really are exhaustive: no exact failures outside them.
  ScanReport direct = scan_failures(6, 30, 2500, true);
  CHECK(direct.pairs == r.pairs);
}

TEST_CASE("scan shards merge to the full scan") {
  ScanReport full = scan_failures(5, 9, 5000, true);
  std::vector<std::pair<std::uint64_t, std::uint32_t>> merged;
  for (unsigned i = 0; i < 3; ++i) {
    ScanOptions o;
    o.shard_index = i;
    o.shard_count = 3;
    o.jobs = 2;
    auto part = scan_failures(5, 9, 5000, true, o).pairs;
    merged.insert(merged.end(), part.begin(), part.end());
  }
  std::sort(merged.begin(), merged.end());
  CHECK(merged == full.pairs);
  CHECK_THROWS_AS(scan_failures(5, 9, 100, true, ScanOptions{1, 3, 3}), std::invalid_argument);
}

TEST_CASE("sieve plan decomposes both radicals") {
  for (auto [p, n] : std::vector<std::pair<std::uint32_t, std::uint64_t>>{{2, 5}, {2, 6}, {3, 6}, {5, 8}, {7, 6}, {13, 12}}) {
    SievePlan plan = build_sieve_plan(p, n);
    Poly rad2 = factor_xn1(p, n).radical();
    Poly rad1 = n % p ? rad2 / Poly(p, {p - 1, 1}) : rad2;
    Poly a = plan.k, b = plan.big_k;
    mpq_class delta = 1;
    for (const auto& f : plan.sieved_f) {
      a = a * f;
      delta -= mpq_class(1, zpow(p, f.degree()));
    }
    for (const auto& f : plan.sieved_F) {
      b = b * f;
      delta -= mpq_class(1, zpow(p, f.degree()));
    }
    CHECK(a == rad1);
    CHECK(b == rad2);
    CHECK(delta == plan.delta);
    CHECK(plan.delta > 0);
  }
}

TEST_CASE("sieve inequality worked case") {
  SieveCheck c = sieve_check_details(2, 5);
  CHECK(c.plan.u() == 1);
  CHECK(c.plan.v() == 2);
  CHECK(c.plan.delta == mpq_class(3, 8));
  CHECK_FALSE(c.pass_2u);
  // p^(n/2 - 1) >= p W W (2u/delta + 2), squared.
  for (auto [p, n] : std::vector<std::pair<std::uint32_t, std::uint64_t>>{{3, 8}, {7, 7}, {101, 6}}) {
    SieveCheck d = sieve_check_details(p, n);
    std::size_t r2 = factor_xn1(p, n).size(), r1 = n % p ? r2 - 1 : r2;
    mpq_class ww(zpow(2, r1 - d.plan.u() + r2 - d.plan.v()));
    mpq_class rhs = mpq_class(p) * ww * (mpq_class(2 * d.plan.u()) / d.plan.delta + 2);
    CHECK(d.pass_2u == (mpq_class(zpow(p, n)) >= mpq_class(zpow(p, 2)) * rhs * rhs));
    CHECK(check_sieve_ineq(p, n) == d.pass_2u);
  }
}

TEST_CASE("primes_up_to") {
  CHECK(primes_up_to(1).empty());
  CHECK(primes_up_to(30) == std::vector<std::uint32_t>{2, 3, 5, 7, 11, 13, 17, 19, 23, 29});
  CHECK(primes_up_to(290000).size() == 25224);
}
