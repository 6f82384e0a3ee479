// Copyright 2026 The frobmod Authors
// SPDX-License-Identifier: Apache-2.0

#include "frobmod/sievebound.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <stdexcept>
#include <thread>

#include "frobmod/arithfun.hpp"

namespace frobmod {

namespace {

mpz_class zpow(std::uint64_t base, std::uint64_t e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), base, e);
  return r;
}

void require_n(std::uint64_t n, const char* where) {
  if (n < 2) throw std::invalid_argument(std::string(where) + ": n must be at least 2");
}

}  // namespace

WPair w_exact(std::uint32_t p, std::uint64_t n) {
  require_prime(p, "w_exact");
  if (n == 0) throw std::invalid_argument("w_exact: n must be positive");
  std::uint64_t core = n;
  while (core % p == 0) core /= p;
  std::uint64_t k = 0;
  for (std::uint64_t d : integer_divisors(core)) k += euler_phi(d) / multiplicative_order(p, d);
  WPair w;
  w.w = zpow(2, k);
  w.wq = (n % p != 0) ? mpz_class(w.w / 2) : w.w;
  return w;
}

std::pair<unsigned, unsigned> lemma_params(std::uint32_t p) {
  if (p == 2) return {14, 5};
  if (p == 3) return {20, 4};
  if (p == 5) return {18, 3};
  if (p <= 23) return {p - 1, 2};
  return {0, 1};
}

double w_lemma_bound(std::uint32_t p, std::uint64_t n) {
  auto [a, b] = lemma_params(p);
  return std::exp2(static_cast<double>(n + a) / b);
}

bool check_main_ineq(std::uint32_t p, std::uint64_t n, bool exact) {
  require_n(n, "check_main_ineq");
  if (exact) {
    WPair w = w_exact(p, n);
    mpz_class rhs = w.w * w.wq;
    return zpow(p, n) >= rhs * rhs * zpow(p, 4);
  }
  auto [a, b] = lemma_params(p);
  // Compare in log2 units: (n/2 - 2) log2 p against E = (n+a)/b + min((n+a)/b, n-1).
  const double e1 = static_cast<double>(n + a) / b;
  const double lhs = (static_cast<double>(n) / 2.0 - 2.0) * std::log2(static_cast<double>(p));
  const double rhs = e1 + std::min(e1, static_cast<double>(n - 1));
  if (std::fabs(lhs - rhs) > 1e-6 * std::max(1.0, std::fabs(rhs))) return lhs >= rhs;
  // Near equality: p^((n-4) b) >= 2^(2 b E) after raising both sides to the power 2b.
  const std::uint64_t two_b_e = 2 * (n + a) + 2 * std::min<std::uint64_t>(n + a, b * (n - 1));
  return zpow(p, n * b) >= zpow(2, two_b_e) * zpow(p, 4 * b);
}

std::uint64_t lemma_failure_nmax(std::uint32_t p, std::uint64_t cap) {
  std::uint64_t last = 0;
  for (std::uint64_t n = 2; n <= cap; ++n) {
    if (!check_main_ineq(p, n, false)) last = n;
  }
  return last;
}

std::uint32_t ScanReport::largest_prime(std::uint64_t n) const {
  std::uint32_t best = 0;
  for (const auto& [nn, p] : pairs) {
    if (nn == n) best = std::max(best, p);
  }
  return best;
}

std::vector<std::uint32_t> primes_up_to(std::uint32_t limit) {
  std::vector<std::uint32_t> out;
  if (limit < 2) return out;
  std::vector<bool> comp(static_cast<std::size_t>(limit) + 1, false);
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (comp[i]) continue;
    out.push_back(static_cast<std::uint32_t>(i));
    for (std::uint64_t j = i * i; j <= limit; j += i) comp[j] = true;
  }
  return out;
}

ScanReport scan_failures(std::uint64_t n_min, std::uint64_t n_max, std::uint32_t p_max, bool exact,
                         const ScanOptions& opts) {
  require_n(n_min, "scan_failures");
  if (n_max < n_min) throw std::invalid_argument("scan_failures: empty n range");
  if (opts.shard_count == 0 || opts.shard_index >= opts.shard_count) {
    throw std::invalid_argument("scan_failures: invalid shard");
  }
  auto start = std::chrono::steady_clock::now();
  std::vector<std::uint32_t> primes;
  auto all = primes_up_to(p_max);
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (i % opts.shard_count == opts.shard_index) primes.push_back(all[i]);
  }
  const unsigned jobs = std::max(1u, opts.jobs);
  std::vector<std::vector<std::pair<std::uint64_t, std::uint32_t>>> found(jobs);
  auto worker = [&](unsigned w) {
    for (std::size_t i = w; i < primes.size(); i += jobs) {
      for (std::uint64_t n = n_min; n <= n_max; ++n) {
        if (!check_main_ineq(primes[i], n, exact)) found[w].emplace_back(n, primes[i]);
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < jobs; ++w) pool.emplace_back(worker, w);
  worker(0);
  for (auto& t : pool) t.join();

  ScanReport r;
  r.n_min = n_min;
  r.n_max = n_max;
  r.p_max = p_max;
  r.exact = exact;
  for (auto& v : found) r.pairs.insert(r.pairs.end(), v.begin(), v.end());
  std::sort(r.pairs.begin(), r.pairs.end());
  for (const auto& pr : r.pairs) ++r.counts[pr.first];
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::vector<std::pair<std::uint64_t, std::uint32_t>> lemma_candidates(std::uint64_t n_min) {
  if (n_min < 5) throw std::invalid_argument("lemma_candidates: n_min must be at least 5");
  constexpr std::uint64_t kCap = 1024;
  std::vector<std::pair<std::uint64_t, std::uint32_t>> out;
  for (std::uint32_t p = 2;; ++p) {
    if (!is_prime_u32(p)) continue;
    const std::uint64_t nmax = lemma_failure_nmax(p, kCap);
    if (p >= 29 && nmax < n_min) break;
    for (std::uint64_t n = n_min; n <= nmax; ++n) {
      if (!check_main_ineq(p, n, false)) out.emplace_back(n, p);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

ScanReport candidate_scan(std::uint64_t n_min, const ScanOptions& opts) {
  if (opts.shard_count == 0 || opts.shard_index >= opts.shard_count) {
    throw std::invalid_argument("candidate_scan: invalid shard");
  }
  auto start = std::chrono::steady_clock::now();
  auto cands = lemma_candidates(n_min);
  ScanReport r;
  r.n_min = n_min;
  r.exact = true;
  for (std::size_t i = opts.shard_index; i < cands.size(); i += opts.shard_count) {
    const auto& [n, p] = cands[i];
    r.n_max = std::max(r.n_max, n);
    r.p_max = std::max<std::uint64_t>(r.p_max, p);
    if (!check_main_ineq(p, n, true)) r.pairs.emplace_back(n, p);
  }
  for (const auto& pr : r.pairs) ++r.counts[pr.first];
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

SievePlan build_sieve_plan(std::uint32_t p, std::uint64_t n) {
  require_n(n, "build_sieve_plan");
  Factorization fx = factor_xn1(p, n);
  struct Cand {
    Poly f;
    int which;  // 0: first radical, 1: second radical
  };
  std::vector<Cand> pool;
  const Poly x_minus_1 = Poly::xn_minus_one(p, 1);
  for (const auto& fp : fx.factors()) {
    if (!(n % p != 0 && fp.factor == x_minus_1)) pool.push_back({fp.factor, 0});
    pool.push_back({fp.factor, 1});
  }
  std::stable_sort(pool.begin(), pool.end(), [](const Cand& a, const Cand& b) {
    if (a.f.degree() != b.f.degree()) return a.f.degree() > b.f.degree();
    if (canonical_less(a.f, b.f)) return true;
    if (canonical_less(b.f, a.f)) return false;
    return a.which < b.which;
  });
  SievePlan plan;
  plan.k = Poly::one(p);
  plan.big_k = Poly::one(p);
  plan.delta = 1;
  for (const auto& c : pool) {
    mpq_class share(1, zpow(p, static_cast<std::uint64_t>(c.f.degree())));
    share.canonicalize();
    if (plan.delta - share > 0) {
      plan.delta -= share;
      (c.which == 0 ? plan.sieved_f : plan.sieved_F).push_back(c.f);
    } else if (c.which == 0) {
      plan.k = plan.k * c.f;
    } else {
      plan.big_k = plan.big_k * c.f;
    }
  }
  return plan;
}

SieveCheck sieve_check_details(std::uint32_t p, std::uint64_t n) {
  SieveCheck out;
  out.plan = build_sieve_plan(p, n);
  const SievePlan& pl = out.plan;
  const std::size_t r2 = factor_xn1(p, n).size();
  const std::size_t r1 = n % p != 0 ? r2 - 1 : r2;
  mpz_class ww = zpow(2, (r1 - pl.u()) + (r2 - pl.v()));
  mpq_class c2u = mpq_class(static_cast<long>(2 * pl.u())) / pl.delta + 2;
  mpq_class cuv = mpq_class(static_cast<long>(pl.u() + pl.v())) / pl.delta + 2;
  mpq_class rhs_2u = mpq_class(p) * mpq_class(ww) * c2u;
  mpq_class rhs_uv = mpq_class(p) * mpq_class(ww) * cuv;
  // p^(n/2 - 1) >= rhs  <=>  p^n >= p^2 rhs^2.
  mpq_class lhs_sq(zpow(p, n));
  mpq_class p2(zpow(p, 2));
  out.pass_2u = lhs_sq >= p2 * rhs_2u * rhs_2u;
  out.pass_uv = lhs_sq >= p2 * rhs_uv * rhs_uv;
  out.lhs = std::pow(static_cast<double>(p), static_cast<double>(n) / 2.0 - 1.0);
  out.rhs_2u = rhs_2u.get_d();
  out.rhs_uv = rhs_uv.get_d();
  return out;
}

bool check_sieve_ineq(std::uint32_t p, std::uint64_t n) { return sieve_check_details(p, n).pass_2u; }

}  // namespace frobmod
