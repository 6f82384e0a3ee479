// Copyright 2026 The frobmod Authors
// SPDX-License-Identifier: Apache-2.0

#include <random>

#include "doctest.h"
#include "frobmod/arithfun.hpp"
#include "frobmod/extfield.hpp"
#include "test_util.hpp"

using namespace frobmod;
using testutil::elem_vec;
using testutil::to_vec;

namespace {

const std::vector<std::pair<std::uint32_t, unsigned>> kSmall = {{2, 1}, {2, 2}, {2, 3}, {2, 4}, {2, 5}, {2, 6},
                                                                 {3, 1}, {3, 2}, {3, 3}, {5, 2}, {7, 2}};

}  // namespace

TEST_CASE("context construction") {
  auto ctx = FieldCtx::make(2, 4);
  CHECK(ctx->size() == 16);
  CHECK(oracle::irreducible(to_vec(ctx->modulus()), 2));
  CHECK(ctx->xn1() == Poly::xn_minus_one(2, 4));
  CHECK_THROWS_AS(FieldCtx::make(4, 2), std::invalid_argument);
  CHECK_THROWS_AS(FieldCtx::make(2, 0), std::invalid_argument);
  CHECK_THROWS_AS(FieldCtx::make(2, 4, Poly(2, {1, 0, 0, 0, 1})), std::invalid_argument);
  CHECK_THROWS_AS(FieldCtx::make(2, 63), std::invalid_argument);
  CHECK_THROWS_AS(ctx->require_enumerable(8, "test"), std::length_error);
  auto custom = FieldCtx::make(2, 4, Poly(2, {1, 1, 0, 0, 1}));
  CHECK(custom->modulus() == Poly(2, {1, 1, 0, 0, 1}));
}

TEST_CASE("element arithmetic against schoolbook field") {
  std::mt19937_64 rng(8);
  for (auto [p, n] : kSmall) {
    auto ctx = FieldCtx::make(p, n);
    oracle::Field F = testutil::oracle_field(*ctx);
    for (int it = 0; it < 80; ++it) {
      std::uint64_t i = rng() % ctx->size(), j = rng() % ctx->size();
      ExtElem a = ctx->from_index(i), b = ctx->from_index(j);
      CHECK(a.index() == i);
      CHECK(elem_vec(a * b) == F.mulf(F.elem(i), F.elem(j)));
      CHECK(elem_vec(a + b) == oracle::add(F.elem(i), F.elem(j), p));
      CHECK(elem_vec(a - b) == oracle::sub(F.elem(i), F.elem(j), p));
      CHECK(elem_vec(a.frob()) == F.pow(F.elem(i), p));
      CHECK(elem_vec(a.pow(j + 3)) == F.pow(F.elem(i), j + 3));
      CHECK(a.pth_root().frob() == a);
      if (!a.is_zero()) CHECK((a * a.inverse()).is_one());
    }
    CHECK_THROWS_AS(ctx->zero().inverse(), std::domain_error);
  }
}

TEST_CASE("Frobenius matrix and trace row") {
  for (auto [p, n] : kSmall) {
    auto ctx = FieldCtx::make(p, n);
    oracle::Field F = testutil::oracle_field(*ctx);
    for (unsigned j = 0; j < n; ++j) {
      oracle::Vec xj(j + 1, 0);
      xj[j] = 1;
      oracle::Vec col = F.coords(F.pow(xj, p));
      for (unsigned r = 0; r < n; ++r) CHECK(ctx->frobenius().at(r, j) == col[r]);
      CHECK(ctx->trace_row()[j] == F.trace(xj));
    }
  }
}

TEST_CASE("frob_compose and compose_matrix") {
  std::mt19937_64 rng(12);
  for (auto [p, n] : kSmall) {
    auto ctx = FieldCtx::make(p, n);
    oracle::Field F = testutil::oracle_field(*ctx);
    for (int it = 0; it < 30; ++it) {
      Poly h = testutil::random_poly(rng, p, 2 * n, false);
      std::uint64_t i = rng() % ctx->size();
      ExtElem a = ctx->from_index(i);
      oracle::Vec want = F.compose(to_vec(h), F.elem(i));
      CHECK(elem_vec(frob_compose(h, a)) == want);
      auto img = compose_matrix(*ctx, h).apply(a.coord_vector());
      CHECK(oracle::trim(img) == want);
    }
  }
}

TEST_CASE("ord and normality exhaustively") {
  for (auto [p, n] : kSmall) {
    if (oracle::ipow(p, n) > 64) continue;
    auto ctx = FieldCtx::make(p, n);
    oracle::Field F = testutil::oracle_field(*ctx);
    for (std::uint64_t i = 0; i < ctx->size(); ++i) {
      ExtElem a = ctx->from_index(i);
      oracle::Vec o = F.ord(F.elem(i));
      CHECK(to_vec(ord(a)) == o);
      CHECK(is_normal(a) == F.normal(F.elem(i)));
      CHECK(abs_trace(a) == F.trace(F.elem(i)));
    }
  }
}

TEST_CASE("ord worked values") {
  auto ctx = FieldCtx::make(2, 4);
  CHECK(ord(ctx->zero()) == Poly::one(2));
  CHECK(ord(ctx->one()) == Poly(2, {1, 1}));
  std::size_t normals = 0;
  for (std::uint64_t i = 0; i < 16; ++i) normals += is_normal(ctx->from_index(i));
  CHECK(normals == 8);  // Phi(x^4 - 1) over F_2
}

TEST_CASE("order classifier matches ord") {
  for (auto [p, n] : std::vector<std::pair<std::uint32_t, unsigned>>{{2, 4}, {2, 6}, {3, 3}, {5, 2}, {3, 4}}) {
    auto ctx = FieldCtx::make(p, n);
    OrderClassifier cls(ctx, OrderClassifier::Kind::kElement);
    auto exps = cls.classify(0, ctx->size());
    REQUIRE(exps.size() == ctx->size() * cls.factor_count());
    for (std::uint64_t i = 0; i < ctx->size(); ++i) {
      std::span<const std::uint8_t> e(exps.data() + i * cls.factor_count(), cls.factor_count());
      CHECK(cls.order_poly(e) == ord(ctx->from_index(i)));
    }
    auto one = cls.exponents_of(ctx->xn1());
    CHECK(cls.order_poly(one) == ctx->xn1());
  }
}

TEST_CASE("count_by_order equals Phi on every divisor") {
  for (auto [p, n] : std::vector<std::pair<std::uint32_t, unsigned>>{{2, 2}, {2, 4}, {2, 5}, {3, 2}, {3, 3}, {5, 2}}) {
    auto ctx = FieldCtx::make(p, n);
    oracle::Field F = testutil::oracle_field(*ctx);
    std::map<oracle::Vec, std::uint64_t> brute;
    for (std::uint64_t i = 0; i < ctx->size(); ++i) ++brute[F.ord(F.elem(i))];
    std::uint64_t total = 0;
    for (const auto& oc : count_by_order(ctx)) {
      CHECK(oc.count == oracle::phi(to_vec(oc.divisor), p));
      CHECK(oc.count == brute[to_vec(oc.divisor)]);
      total += oc.count;
    }
    CHECK(total == ctx->size());
  }
}

TEST_CASE("Artin-Schreier solutions") {
  for (auto [p, n] : kSmall) {
    if (oracle::ipow(p, n) > 128) continue;
    auto ctx = FieldCtx::make(p, n);
    oracle::Field F = testutil::oracle_field(*ctx);
    for (std::uint64_t i = 0; i < ctx->size(); ++i) {
      ExtElem c = ctx->from_index(i);
      auto y = solve_artin_schreier(c);
      // y^p - y = c is solvable exactly when Tr(c) = 0; brute smallest root.
      std::optional<std::uint64_t> first;
      for (std::uint64_t j = 0; j < ctx->size() && !first; ++j) {
        oracle::Vec yj = F.elem(j);
        if (oracle::sub(F.pow(yj, p), yj, p) == F.elem(i)) first = j;
      }
      CHECK(y.has_value() == first.has_value());
      CHECK(y.has_value() == (F.trace(F.elem(i)) == 0));
      if (y) {
        CHECK(y->frob() - *y == c);
        CHECK(y->index() == *first);
      }
    }
  }
}

TEST_CASE("extension polynomials") {
  auto ctx = FieldCtx::make(2, 3);
  ExtPoly f = ExtPoly::lift(*ctx, Poly(2, {1, 0, 1}));
  CHECK(f.degree() == 2);
  CHECK(f.pretty() == "x^2+1");
  ExtElem g = ctx->from_index(2);
  ExtPoly h = ExtPoly::monomial(g, 3) + f;
  CHECK(h.degree() == 3);
  CHECK(h.eval(ctx->one()) == g);
  CHECK((h - h).is_zero());
  CHECK(h.pretty() == "[0,1,0]x^3+x^2+1");
  CHECK(h.scaled(g.inverse()).lead().is_one());
}
