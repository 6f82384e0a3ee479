// Copyright 2026 The frobmod Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef FROBMOD_TESTS_TEST_UTIL_HPP_
#define FROBMOD_TESTS_TEST_UTIL_HPP_

#include <random>

#include "frobmod/extfield.hpp"
#include "frobmod/gfpoly.hpp"
#include "oracle.hpp"

namespace testutil {

inline oracle::Vec to_vec(const frobmod::Poly& f) { return {f.coeffs().begin(), f.coeffs().end()}; }
inline frobmod::Poly to_poly(std::uint32_t p, const oracle::Vec& v) { return frobmod::Poly(p, v); }

inline oracle::Field oracle_field(const frobmod::FieldCtx& ctx) {
  return oracle::Field(ctx.p(), to_vec(ctx.modulus()));
}

inline oracle::Vec elem_vec(const frobmod::ExtElem& a) {
  return oracle::trim({a.coords().begin(), a.coords().end()});
}

inline frobmod::Poly random_poly(std::mt19937_64& rng, std::uint32_t p, int max_deg, bool monic) {
  int d = std::uniform_int_distribution<int>(0, max_deg)(rng);
  std::vector<frobmod::Residue> c(d + 1);
  for (auto& x : c) x = std::uniform_int_distribution<std::uint32_t>(0, p - 1)(rng);
  if (monic) c[d] = 1;
  return frobmod::Poly(p, c);
}

}  // namespace testutil

#endif  // FROBMOD_TESTS_TEST_UTIL_HPP_
