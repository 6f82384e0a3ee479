// Copyright 2026 The frobmod Authors
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <vector>

#include "frobmod/kernels.hpp"

namespace frobmod::kernels::scalar {

void linmap_apply(const Residue* a, std::size_t rows, std::size_t cols, const Residue* src,
                  std::size_t count, Residue* dst, std::uint32_t p) {
  std::vector<std::uint64_t> acc(count);
  for (std::size_t r = 0; r < rows; ++r) {
    std::fill(acc.begin(), acc.end(), 0);
    for (std::size_t c = 0; c < cols; ++c) {
      const std::uint64_t coef = a[r * cols + c];
      if (coef == 0) continue;
      const Residue* s = src + c * count;
      for (std::size_t e = 0; e < count; ++e) acc[e] = (acc[e] + coef * s[e]) % p;
    }
    Residue* d = dst + r * count;
    for (std::size_t e = 0; e < count; ++e) d[e] = static_cast<Residue>(acc[e]);
  }
}

void linmap_zero_flags(const Residue* a, std::size_t rows, std::size_t cols, const Residue* src,
                       std::size_t count, std::uint8_t* zero, std::uint32_t p) {
  std::vector<Residue> row(count);
  std::fill(zero, zero + count, std::uint8_t{1});
  for (std::size_t r = 0; r < rows; ++r) {
    linmap_apply(a + r * cols, 1, cols, src, count, row.data(), p);
    for (std::size_t e = 0; e < count; ++e) {
      if (row[e] != 0) zero[e] = 0;
    }
  }
}

}  // namespace frobmod::kernels::scalar
