// Copyright 2026 The frobmod Authors
// SPDX-License-Identifier: Apache-2.0

#include <random>

#include "doctest.h"
#include "frobmod/arithfun.hpp"
#include "test_util.hpp"

using namespace frobmod;
using testutil::to_poly;
using testutil::to_vec;

namespace {

// T(f, g) summed over divisors found by exhaustive search, with brute Phi and mu.
mpq_class t_oracle(const oracle::Vec& f, const oracle::Vec& g, std::uint32_t p) {
  mpq_class s = 0;
  for (const auto& t : oracle::monic_divisors(f, p)) {
    oracle::Vec tg = oracle::divmod(t, oracle::gcd(t, g, p), p).first;
    int m = oracle::mu(tg, p);
    if (m == 0) continue;
    s += mpq_class(oracle::phi(t, p), oracle::phi(tg, p));
  }
  s.canonicalize();
  return s;
}

}  // namespace

TEST_CASE("divisor iterator visits every monic divisor once") {
  for (std::uint32_t p : {2u, 3u}) {
    for (unsigned n : {4u, 6u, 8u}) {
      Factorization fac = factor_xn1(p, n);
      DivisorIterator it(fac);
      std::set<oracle::Vec> seen;
      std::size_t steps = 0;
      for (; !it.done(); it.next(), ++steps) {
        Poly d = it.current();
        CHECK(d.is_monic());
        Poly rebuilt = Poly::one(p);
        for (std::size_t i = 0; i < fac.size(); ++i) {
          for (unsigned e = 0; e < it.exponents()[i]; ++e) rebuilt = rebuilt * fac.factors()[i].factor;
        }
        CHECK(rebuilt == d);
        seen.insert(to_vec(d));
      }
      CHECK(steps == it.count());
      std::vector<oracle::Vec> expect = oracle::monic_divisors(oracle::xn_minus_one(p, n), p);
      CHECK(seen == std::set<oracle::Vec>(expect.begin(), expect.end()));
      for (std::size_t i = 1; i < it.all().size(); ++i) CHECK(canonical_less(it.all()[i - 1], it.all()[i]));
    }
  }
}

TEST_CASE("Phi, mu and W against brute force") {
  std::mt19937_64 rng(5);
  for (std::uint32_t p : {2u, 3u, 5u}) {
    for (int it = 0; it < 60; ++it) {
      Poly f = testutil::random_poly(rng, p, p == 2 ? 9 : 6, true);
      CHECK(phi_q(f) == oracle::phi(to_vec(f), p));
      CHECK(mu_q(f) == oracle::mu(to_vec(f), p));
      CHECK(w_count(f) == mpz_class(1) << oracle::factor(to_vec(f), p).size());
      CHECK(poly_norm(f) == mpz_class(oracle::ipow(p, f.degree())));
    }
  }
}

TEST_CASE("totient worked values") {
  CHECK(phi_q(Poly(2, {1, 1, 0, 0, 0, 0, 1})) == phi_q(factor(Poly(2, {1, 1, 0, 0, 0, 0, 1}))));
  CHECK(phi_q(Poly::xn_minus_one(2, 6)) == 24);
  CHECK(phi_q(Poly::one(3)) == 1);
  CHECK(mu_q(Poly::one(3)) == 1);
  CHECK(mu_q(Poly::xn_minus_one(2, 2)) == 0);
  CHECK(w_count(Poly::xn_minus_one(2, 6)) == 4);
}

TEST_CASE("f_sub_g") {
  Poly a(2, {1, 1}), b(2, {1, 1, 1});
  CHECK(f_sub_g(a * a * b, a) == a * b);
  CHECK(f_sub_g(b, a) == b);
}

TEST_CASE("T(f, g) divisor sum matches exhaustive summation") {
  std::mt19937_64 rng(17);
  for (int it = 0; it < 150; ++it) {
    std::uint32_t p = std::vector<std::uint32_t>{2, 3, 5}[it % 3];
    Poly f = testutil::random_poly(rng, p, p == 2 ? 7 : 4, true);
    Poly g = testutil::random_poly(rng, p, 3, true);
    mpq_class want = t_oracle(to_vec(f), to_vec(g), p);
    CHECK(mpq_class(t_sum(f, g)) == want);
    CHECK(mpq_class(t_closed(f, g)) == want);
  }
}

TEST_CASE("T(f, g) closed form on random cases") {
  std::mt19937_64 rng(20240601);
  for (int it = 0; it < 3000; ++it) {
    std::uint32_t p = std::vector<std::uint32_t>{2, 3, 5}[it % 3];
    Poly f = testutil::random_poly(rng, p, 8, true);
    Poly g = testutil::random_poly(rng, p, 8, true);
    REQUIRE(t_sum(f, g) == t_closed(f, g));
  }
}

TEST_CASE("T(f, 1) is W(f)") {
  Poly f = Poly::xn_minus_one(3, 8);
  CHECK(t_closed(f, Poly::one(3)) == w_count(f));
}
