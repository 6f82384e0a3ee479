// Copyright 2026 The frobmod Authors
// SPDX-License-Identifier: Apache-2.0

#include "doctest.h"
#include "frobmod/textio.hpp"

using namespace frobmod;

TEST_CASE("integer lists") {
  CHECK(parse_uint_list("1,0,17") == std::vector<std::uint64_t>{1, 0, 17});
  CHECK(parse_uint_list(" 3 , 4") == std::vector<std::uint64_t>{3, 4});
  CHECK_THROWS_AS(parse_uint_list(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_uint_list("1,,2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_uint_list("1,-2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_uint_list("1,x"), std::invalid_argument);
}

TEST_CASE("polynomials") {
  CHECK(parse_poly(2, "1,0,1") == Poly(2, {1, 0, 1}));
  CHECK(parse_poly(5, "1,0,1").pretty() == "x^2+1");
  CHECK(parse_poly(3, "0").is_zero());
  CHECK_THROWS_AS(parse_poly(3, "1,3"), std::invalid_argument);
  CHECK(parse_poly(7, Poly(7, {6, 0, 3}).to_csv()) == Poly(7, {6, 0, 3}));
}

TEST_CASE("field elements and polynomials over the extension") {
  auto ctx = FieldCtx::make(2, 3);
  CHECK(parse_elem(*ctx, "0,1,0") == ctx->from_index(2));
  CHECK(parse_elem(*ctx, "1,1,1").to_csv() == "1,1,1");
  CHECK_THROWS_AS(parse_elem(*ctx, "1,1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_elem(*ctx, "1,2,0"), std::invalid_argument);
  ExtPoly f = parse_ext_poly(*ctx, "3,0,1,7");
  CHECK(f.degree() == 3);
  CHECK(f.coeff(3) == ctx->from_index(7));
  CHECK(ext_poly_csv(f) == "3,0,1,7");
  CHECK_THROWS_AS(parse_ext_poly(*ctx, "8"), std::invalid_argument);
}

TEST_CASE("shard specs") {
  CHECK(parse_shard("0/1") == std::pair<unsigned, unsigned>{0, 1});
  CHECK(parse_shard("3/8") == std::pair<unsigned, unsigned>{3, 8});
  CHECK_THROWS_AS(parse_shard("8/8"), std::invalid_argument);
  CHECK_THROWS_AS(parse_shard("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_shard("1-2"), std::invalid_argument);
}
