// Copyright 2026 The frobmod Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef FROBMOD_TEXTIO_HPP_
#define FROBMOD_TEXTIO_HPP_

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "frobmod/extfield.hpp"
#include "frobmod/gfpoly.hpp"

namespace frobmod {

/// Comma separated unsigned integers; throws std::invalid_argument.
std::vector<std::uint64_t> parse_uint_list(const std::string& text);

/// "1,0,1" = x^2 + 1: coefficients in [0, p), constant first.
Poly parse_poly(std::uint32_t p, const std::string& text);

/// "1,0,1,0,0": exactly n power-basis coordinates, constant first.
ExtElem parse_elem(const FieldCtx& ctx, const std::string& text);

/// Coefficients of a polynomial over F_{p^n}, constant first, each given as the
/// element index sum c_i p^i of its coordinates.
ExtPoly parse_ext_poly(const FieldCtx& ctx, const std::string& text);
std::string ext_poly_csv(const ExtPoly& f);

/// "i/k" with 0 <= i < k.
std::pair<unsigned, unsigned> parse_shard(const std::string& text);

}  // namespace frobmod

#endif  // FROBMOD_TEXTIO_HPP_
