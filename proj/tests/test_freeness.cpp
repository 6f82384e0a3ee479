// Copyright 2026 The frobmod Authors
// SPDX-License-Identifier: Apache-2.0

#include <random>

#include "doctest.h"
#include "frobmod/arithfun.hpp"
#include "frobmod/freeness.hpp"
#include "frobmod/sievebound.hpp"
#include "test_util.hpp"

using namespace frobmod;
using testutil::elem_vec;
using testutil::to_poly;
using testutil::to_vec;

TEST_CASE("freeness pair construction") {
  auto ctx = FieldCtx::make(2, 4);
  Poly x1(2, {1, 1});
  auto s = FreenessSpec::make(*ctx, x1 * x1, x1);
  CHECK(s.f == x1 * x1);
  CHECK(s.g == x1);
  CHECK(s.f_sqfree == x1);
  CHECK(s.squarefree().f == x1);
  CHECK_THROWS_AS(FreenessSpec::make(*ctx, Poly(2, {1, 1, 1}), Poly::one(2)), std::invalid_argument);
  CHECK_THROWS_AS(FreenessSpec::make(*ctx, x1 * x1 * x1 * x1, x1), std::invalid_argument);
  // x^4 - 1 = (x+1)^4: 5 choices of g, then 5 - deg g choices of f.
  CHECK(FreenessSpec::all(*ctx).size() == 15);
}

TEST_CASE("gcd freeness test matches the definition") {
  for (auto [p, n] : std::vector<std::pair<std::uint32_t, unsigned>>{{2, 2}, {2, 3}, {2, 4}, {3, 2}, {2, 6}, {5, 2}}) {
    auto ctx = FieldCtx::make(p, n);
    oracle::Field F = testutil::oracle_field(*ctx);
    for (const auto& spec : FreenessSpec::all(*ctx)) {
      auto want = oracle::fg_free_set(F, to_vec(spec.f), to_vec(spec.g));
      auto table = fg_free_oracle_table(*ctx, spec);
      for (std::uint64_t i = 0; i < ctx->size(); ++i) {
        ExtElem a = ctx->from_index(i);
        bool w = want.count(i) > 0;
        CHECK_MESSAGE(is_fg_free(a, spec) == w, "f=" << spec.f.pretty() << " g=" << spec.g.pretty() << " i=" << i);
        CHECK(bool(table[i]) == w);
        CHECK(is_fg_free(a, spec.squarefree()) == w);
      }
    }
  }
}

TEST_CASE("freeness special cases") {
  auto ctx = FieldCtx::make(2, 4);
  auto normal = FreenessSpec::make(*ctx, ctx->xn1(), Poly::one(2));
  for (std::uint64_t i = 0; i < 16; ++i) {
    ExtElem a = ctx->from_index(i);
    CHECK(is_fg_free(a, normal) == is_normal(a));
  }
  auto everything = FreenessSpec::make(*ctx, Poly::one(2), Poly::one(2));
  for (std::uint64_t i = 0; i < 16; ++i) CHECK(is_fg_free(ctx->from_index(i), everything));
}

TEST_CASE("character-sum indicator is exactly the freeness indicator") {
  for (auto [p, n] : std::vector<std::pair<std::uint32_t, unsigned>>{{2, 3}, {2, 4}, {3, 2}, {5, 2}}) {
    auto ctx = FieldCtx::make(p, n);
    CharacterTable table(ctx);
    for (const auto& spec : FreenessSpec::all(*ctx)) {
      for (std::uint64_t i = 0; i < ctx->size(); ++i) {
        ExtElem a = ctx->from_index(i);
        CHECK(indicator_charsum(a, spec, table) == (is_fg_free(a, spec) ? 1 : 0));
      }
    }
  }
}

TEST_CASE("singular polynomials") {
  std::mt19937_64 rng(6);
  for (auto [p, n] : std::vector<std::pair<std::uint32_t, unsigned>>{{2, 3}, {3, 2}, {5, 1}}) {
    auto ctx = FieldCtx::make(p, n);
    for (int it = 0; it < 40; ++it) {
      std::vector<ExtElem> rc;
      int d = 1 + rng() % 3;
      for (int i = 0; i <= d; ++i) rc.push_back(ctx->from_index(rng() % ctx->size()));
      rc.back() = ctx->one();
      SingularWitness w{ExtPoly(ctx.get(), rc), ctx->from_index(rng() % ctx->size())};
      ExtPoly P = expand_witness(w);
      auto found = is_singular(P);
      REQUIRE(found.has_value());
      CHECK(expand_witness(*found) == P);
    }
    // x is never of the form r^p - r + delta.
    CHECK_FALSE(is_singular(ExtPoly::lift(*ctx, Poly(p, {0, 1}))).has_value());
  }
}

TEST_CASE("pair singularity") {
  auto ctx = FieldCtx::make(2, 3);
  ExtPoly x = ExtPoly::lift(*ctx, Poly(2, {0, 1}));
  ExtPoly x2 = ExtPoly::lift(*ctx, Poly(2, {0, 0, 1}));
  // x^2 + x is singular over F_2.
  auto w = is_pair_singular(x, x2);
  REQUIRE(w.has_value());
  CHECK(is_singular(x.scaled(w->first) + x2.scaled(w->second)).has_value());
  ExtPoly x3 = ExtPoly::lift(*ctx, Poly(2, {0, 0, 0, 1}));
  CHECK_FALSE(is_pair_singular(x, x3).has_value());
  CHECK(pair_max_degree(x, x3) == 3);
}

TEST_CASE("pair counts against brute force") {
  auto ctx = FieldCtx::make(2, 4);
  oracle::Field F = testutil::oracle_field(*ctx);
  ExtPoly h = ExtPoly::lift(*ctx, Poly(2, {0, 1}));
  ExtPoly H = ExtPoly::lift(*ctx, Poly(2, {1, 1, 0, 1}));
  auto specs = FreenessSpec::all(*ctx);
  for (std::size_t i = 0; i < specs.size(); i += 3) {
    for (std::size_t j = 0; j < specs.size(); j += 4) {
      auto s1 = oracle::fg_free_set(F, to_vec(specs[i].f), to_vec(specs[i].g));
      auto s2 = oracle::fg_free_set(F, to_vec(specs[j].f), to_vec(specs[j].g));
      std::uint64_t want = 0;
      for (std::uint64_t y = 0; y < 16; ++y) {
        ExtElem ey = ctx->from_index(y);
        want += s1.count(h.eval(ey).index()) && s2.count(H.eval(ey).index());
      }
      CHECK(count_free_pairs(h, H, specs[i], specs[j]) == want);
      CHECK(count_free_pairs(h, H, specs[i], specs[j], 3) == want);
    }
  }
}

TEST_CASE("bound interval exact comparisons") {
  BoundInterval b{10, 2, 2, 3};  // 10 +- 2 * 3
  CHECK(b.radius_sq() == 36);
  CHECK(b.contains(4));
  CHECK(b.contains(16));
  CHECK_FALSE(b.contains(17));
  CHECK(b.lower_positive());
  BoundInterval c{6, 2, 2, 3};
  CHECK_FALSE(c.lower_positive());
  BoundInterval d{mpq_class(3, 2), 1, 1, 2};  // 1.5 +- sqrt 2
  CHECK_FALSE(d.contains(0));
  CHECK(d.contains(1));
  CHECK(d.contains(2));
  CHECK_FALSE(d.contains(3));
  CHECK(d.lower_positive());
  CHECK(std::abs(d.radius_approx() - std::sqrt(2.0)) < 1e-12);
}

TEST_CASE("main bound contains every exhaustive count") {
  for (auto [p, n] : std::vector<std::pair<std::uint32_t, unsigned>>{{2, 3}, {2, 4}, {3, 2}, {5, 2}}) {
    auto ctx = FieldCtx::make(p, n);
    ExtPoly h = ExtPoly::lift(*ctx, Poly(p, {0, 1}));
    ExtPoly H = ExtPoly::lift(*ctx, Poly(p, {1, 1, 0, 1}));
    if (is_pair_singular(h, H)) continue;
    int md = pair_max_degree(h, H);
    auto specs = FreenessSpec::all(*ctx);
    for (const auto& s1 : specs) {
      for (const auto& s2 : specs) {
        BoundInterval b = main_bound(*ctx, s1, s2, md);
        auto count = count_free_pairs(h, H, s1, s2);
        CHECK(b.contains(count));
        if (b.lower_positive()) CHECK(count > 0);
      }
    }
  }
}

TEST_CASE("sieved bound is a lower bound on exhaustive counts") {
  std::mt19937_64 rng(41);
  for (auto [p, n] : std::vector<std::pair<std::uint32_t, unsigned>>{{2, 4}, {2, 5}, {2, 6}, {3, 2}, {3, 4}, {5, 2}}) {
    auto ctx = FieldCtx::make(p, n);
    ExtPoly h = ExtPoly::lift(*ctx, Poly(p, {0, 1}));
    ExtPoly H = ExtPoly::lift(*ctx, p == 2 ? Poly(p, {1, 1, 0, 1}) : Poly(p, {1, 1, 0, 0, 1}));
    REQUIRE_FALSE(is_pair_singular(h, H).has_value());
    int md = pair_max_degree(h, H);
    Poly x1 = Poly::xn_minus_one(p, 1);
    Poly xn1 = ctx->xn1();
    auto s1 = FreenessSpec::make(*ctx, n % p ? xn1 / x1 : xn1, Poly::one(p));
    auto s2 = FreenessSpec::make(*ctx, xn1, Poly::one(p));
    const auto count = count_free_pairs(h, H, s1, s2);

    auto check_plan = [&](const SievePlan& plan) {
      BoundInterval b = sieve_bound(*ctx, s1, s2, md, plan);
      mpq_class gap = b.center - mpq_class(count);
      CHECK((gap <= 0 || gap * gap <= b.radius_sq()));
      if (b.lower_positive()) CHECK(count > 0);
    };

    // Random splits of each radical into core and sieved primes.
    auto r1 = factor(s1.f).radical(), r2 = factor(s2.f).radical();
    for (int it = 0; it < 20; ++it) {
      SievePlan plan;
      plan.k = Poly::one(p);
      plan.big_k = Poly::one(p);
      plan.delta = 1;
      for (int which = 0; which < 2; ++which) {
        Factorization rad = factor(which ? r2 : r1);
        for (const auto& fp : rad.factors()) {
          if (rng() % 2) {
            (which ? plan.sieved_F : plan.sieved_f).push_back(fp.factor);
            plan.delta -= mpq_class(1, mpz_class(oracle::ipow(p, fp.factor.degree())));
          } else {
            (which ? plan.big_k : plan.k) = (which ? plan.big_k : plan.k) * fp.factor;
          }
        }
      }
      if (plan.delta <= 0) {
        CHECK_THROWS_AS(sieve_bound(*ctx, s1, s2, md, plan), std::invalid_argument);
        continue;
      }
      check_plan(plan);
    }
  }
}
