// Copyright 2026 The frobmod Authors
// SPDX-License-Identifier: Apache-2.0

#include <random>

#include "doctest.h"
#include "frobmod/curvesearch.hpp"
#include "frobmod/freeness.hpp"
#include "test_util.hpp"

using namespace frobmod;
using testutil::elem_vec;

namespace {

// Table-driven brute force over every f of exact degree deg.
std::set<std::vector<std::uint64_t>> brute_exceptions(const FieldCtx& ctx, unsigned deg) {
  oracle::Field F = testutil::oracle_field(ctx);
  const std::uint64_t q = F.q;
  const std::uint32_t p = F.p;
  std::vector<std::uint64_t> mul(q * q), add(q * q);
  std::vector<bool> normal(q), good(q, false);
  for (std::uint64_t a = 0; a < q; ++a) {
    normal[a] = F.normal(F.elem(a));
    for (std::uint64_t b = 0; b < q; ++b) {
      mul[a * q + b] = F.index(F.mulf(F.elem(a), F.elem(b)));
      add[a * q + b] = F.index(oracle::add(F.elem(a), F.elem(b), p));
    }
  }
  for (std::uint64_t y = 0; y < q; ++y) {
    if (!normal[y]) continue;
    good[F.index(oracle::sub(F.pow(F.elem(y), p), F.elem(y), p))] = true;
  }
  std::set<std::vector<std::uint64_t>> out;
  std::vector<std::uint64_t> c(deg + 1, 0);
  std::uint64_t total = 1;
  for (unsigned i = 0; i < deg; ++i) total *= q;
  for (std::uint64_t lead = 1; lead < q; ++lead) {
    for (std::uint64_t idx = 0; idx < total; ++idx) {
      std::uint64_t t = idx;
      for (unsigned i = 0; i < deg; ++i) {
        c[i] = t % q;
        t /= q;
      }
      c[deg] = lead;
      bool excluded = deg <= p;
      for (unsigned i = 2; i <= deg; ++i) {
        if (i != p && c[i] != 0) excluded = false;
      }
      if (excluded) continue;
      bool found = false;
      for (std::uint64_t x = 0; x < q && !found; ++x) {
        if (!normal[x]) continue;
        std::uint64_t v = 0;
        for (int i = static_cast<int>(deg); i >= 0; --i) v = add[mul[v * q + x] * q + c[i]];
        found = good[v];
      }
      if (!found) out.insert(c);
    }
  }
  return out;
}

std::set<std::vector<std::uint64_t>> as_set(const ExceptionReport& r) {
  std::set<std::vector<std::uint64_t>> s;
  for (const auto& e : r.records) s.insert(e.coeffs);
  return s;
}

}  // namespace

TEST_CASE("curve flags") {
  auto ctx = FieldCtx::make(3, 2);
  auto spec = CurveSpec::make(ExtPoly::lift(*ctx, Poly(3, {1, 1, 0, 1})));
  CHECK(spec.degree_in_scope);
  CHECK(spec.excluded_form);
  spec = CurveSpec::make(ExtPoly::lift(*ctx, Poly(3, {1, 1, 1, 1})));
  CHECK_FALSE(spec.excluded_form);
  CHECK(spec.nonsingular);
  spec = CurveSpec::make(ExtPoly::lift(*ctx, Poly(3, {0, 0, 0, 0, 0, 1})));
  CHECK_FALSE(spec.degree_in_scope);
}

TEST_CASE("normal points against double loop") {
  std::mt19937_64 rng(77);
  for (auto [p, n] : std::vector<std::pair<std::uint32_t, unsigned>>{{2, 3}, {2, 4}, {3, 2}, {3, 3}}) {
    auto ctx = FieldCtx::make(p, n);
    oracle::Field F = testutil::oracle_field(*ctx);
    for (int it = 0; it < 25; ++it) {
      std::vector<ExtElem> c;
      int d = 2 + rng() % p;
      for (int i = 0; i <= d; ++i) c.push_back(ctx->from_index(rng() % ctx->size()));
      if (c.back().is_zero()) c.back() = ctx->one();
      ExtPoly f(ctx.get(), c);
      bool brute = false;
      for (std::uint64_t x = 0; x < F.q && !brute; ++x) {
        if (!F.normal(F.elem(x))) continue;
        ExtElem fx = f.eval(ctx->from_index(x));
        for (std::uint64_t y = 0; y < F.q && !brute; ++y) {
          oracle::Vec ey = F.elem(y);
          brute = F.normal(ey) && oracle::sub(F.pow(ey, p), ey, p) == elem_vec(fx);
        }
      }
      auto pt = has_normal_point(CurveSpec::make(f));
      CHECK(pt.has_value() == brute);
      if (pt) {
        CHECK(is_normal(pt->x0));
        CHECK(is_normal(pt->y0));
        CHECK(pt->y0.frob() - pt->y0 == f.eval(pt->x0));
      }
    }
  }
}

TEST_CASE("exception enumeration against brute force") {
  for (auto [p, n, d] : std::vector<std::tuple<std::uint32_t, unsigned, unsigned>>{
           {2, 2, 3}, {2, 3, 2}, {2, 3, 3}, {2, 4, 3}, {3, 2, 3}, {3, 2, 4}, {3, 1, 4}}) {
    auto ctx = FieldCtx::make(p, n);
    ExceptionReport r = enumerate_exceptions(p, n, d);
    CHECK(r.complete);
    CHECK(as_set(r) == brute_exceptions(*ctx, d));
  }
}

TEST_CASE("exception records are sorted and well formed") {
  ExceptionReport r = enumerate_exceptions(2, 4, 3);
  for (std::size_t i = 1; i < r.records.size(); ++i) {
    auto a = r.records[i - 1].coeffs, b = r.records[i].coeffs;
    CHECK(std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend()));
  }
  for (const auto& e : r.records) {
    CHECK(e.coeffs.size() == 4);
    CHECK(e.coeffs.back() != 0);
  }
}

TEST_CASE("F_32 cubic exceptions") {
  ExceptionReport r = enumerate_exceptions(2, 5, 3);
  auto ctx = FieldCtx::make(2, 5);
  CHECK(as_set(r) == brute_exceptions(*ctx, 3));
  REQUIRE(r.records.size() == 5);
  CHECK(r.records[0].coeffs == std::vector<std::uint64_t>{19, 7, 8, 8});
  for (const auto& e : r.records) {
    std::vector<ExtElem> c;
    for (auto i : e.coeffs) c.push_back(ctx->from_index(i));
    CHECK_FALSE(has_normal_point(CurveSpec::make(ExtPoly(ctx.get(), c))).has_value());
  }
}

TEST_CASE("exception shards merge to the full run") {
  ExceptionReport full = enumerate_exceptions(2, 5, 3);
  std::vector<ExceptionRecord> merged;
  std::uint64_t examined = 0;
  for (unsigned i = 0; i < 5; ++i) {
    ExceptionSearchOptions o;
    o.shard_index = i;
    o.shard_count = 5;
    o.jobs = 3;
    auto part = enumerate_exceptions(2, 5, 3, o);
    CHECK_FALSE(part.complete);
    examined += part.polynomials_examined;
    merged.insert(merged.end(), part.records.begin(), part.records.end());
  }
  REQUIRE(merged.size() == full.records.size());
  for (std::size_t i = 0; i < merged.size(); ++i) CHECK(merged[i].coeffs == full.records[i].coeffs);
  CHECK(examined == full.polynomials_examined);
}

TEST_CASE("exception enumeration guards") {
  ExceptionSearchOptions o;
  o.budget = 1000;
  CHECK_THROWS_AS(enumerate_exceptions(2, 5, 3, o), BudgetExceeded);
  CHECK_THROWS_AS(enumerate_exceptions(2, 5, 4), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_exceptions(2, 5, 1), std::invalid_argument);
  CHECK(exception_search_size(2, 5, 3) == 31.0 * 32 * 32 * 32);
}

TEST_CASE("linear curves") {
  for (auto [p, n] : std::vector<std::pair<std::uint32_t, unsigned>>{{2, 2}, {2, 3}, {3, 2}, {3, 3}, {5, 2}}) {
    auto ctx = FieldCtx::make(p, n);
    for (Residue a = 1; a < p; ++a) CHECK(linear_no_normal_point(ctx, a, 0));
    for (std::uint64_t i = 0; i < ctx->size(); ++i) {
      ExtElem alpha = ctx->from_index(i);
      if (!is_normal(alpha)) continue;
      if (n % p == 0) {
        CHECK_THROWS(construct_linear_point(alpha));
        continue;
      }
      LinearPoint lp = construct_linear_point(alpha);
      CHECK(lp.b != 0);
      CHECK(lp.x0 == alpha);
      CHECK(is_normal(lp.y0));
      CHECK(lp.y0.frob() - lp.y0 == alpha + ctx->from_residue(lp.b));
    }
  }
  // p | n: no b gives a point.
  auto ctx = FieldCtx::make(2, 4);
  CHECK(linear_no_normal_point(ctx, 1, 1));
  auto ctx3 = FieldCtx::make(3, 3);
  for (Residue b = 0; b < 3; ++b) CHECK(linear_no_normal_point(ctx3, 1, b));
}
