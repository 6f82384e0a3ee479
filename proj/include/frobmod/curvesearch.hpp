// Copyright 2026 The frobmod Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef FROBMOD_CURVESEARCH_HPP_
#define FROBMOD_CURVESEARCH_HPP_

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "frobmod/extfield.hpp"

namespace frobmod {

/// The curve y^p - y = f(x) over F_{p^n}, with its scope flags.
struct CurveSpec {
  ExtPoly f;
  bool degree_in_scope = false;  // 1 < deg f <= p + 1
  bool excluded_form = false;    // f = a x^p + b x + c
  bool nonsingular = false;

  static CurveSpec make(const ExtPoly& f);
};

struct NormalPoint {
  ExtElem x0;
  ExtElem y0;
};

/// First normal z (encoding order) with ord(f(z)) = (x^n - 1)/(x - 1), lifted to
/// a point with both coordinates normal. Requires p^n <= 2^22.
std::optional<NormalPoint> has_normal_point(const CurveSpec& spec);

struct ExceptionRecord {
  /// Element indices of c_0, ..., c_deg.
  std::vector<std::uint64_t> coeffs;
};

struct ExceptionSearchOptions {
  unsigned shard_index = 0;
  unsigned shard_count = 1;
  unsigned jobs = 1;
  /// Largest number of candidate polynomials a single run may examine.
  double budget = 2e10;
};

struct ExceptionReport {
  std::uint32_t p = 2;
  unsigned n = 1;
  unsigned deg = 2;
  std::vector<ExceptionRecord> records;
  std::uint64_t outer_begin = 0, outer_end = 0, outer_total = 0;
  std::uint64_t polynomials_examined = 0;
  std::uint64_t normal_count = 0;
  std::uint64_t target_count = 0;
  /// True when the run covered the whole search space.
  bool complete = false;
};

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Number of candidate polynomials of exact degree deg: (q - 1) q^deg.
double exception_search_size(std::uint32_t p, unsigned n, unsigned deg);

/// Every f of exact degree deg over F_{p^n}, not of the form a x^p + b x + c,
/// whose curve has no point with both coordinates normal. Throws BudgetExceeded
/// when the shard exceeds the budget.
ExceptionReport enumerate_exceptions(std::uint32_t p, unsigned n, unsigned deg,
                                     const ExceptionSearchOptions& opts = {});

/// Exhaustive check that y^p - y = a x + b has no point with both coordinates
/// normal. Requires a != 0 and p^n <= 2^20.
bool linear_no_normal_point(const FieldPtr& ctx, Residue a, Residue b);

struct LinearPoint {
  Residue b = 0;
  ExtElem x0;
  ExtElem y0;
};

/// For normal alpha with p not dividing n: a curve y^p - y = x + b, b != 0, and a
/// point (alpha, y0) on it with y0 normal.
LinearPoint construct_linear_point(const ExtElem& alpha);

}  // namespace frobmod

#endif  // FROBMOD_CURVESEARCH_HPP_
