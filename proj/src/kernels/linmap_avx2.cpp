// Copyright 2026 The frobmod Authors
// SPDX-License-Identifier: Apache-2.0

#include <immintrin.h>

#include "frobmod/kernels.hpp"

namespace frobmod::kernels::avx2 {

namespace {

// v in [0, 2^24): v mod p using a float reciprocal and one correction step each way.
inline __m256i reduce(__m256i v, __m256i pv, __m256 inv_p) {
  __m256 f = _mm256_mul_ps(_mm256_cvtepi32_ps(v), inv_p);
  __m256i q = _mm256_cvttps_epi32(f);
  __m256i r = _mm256_sub_epi32(v, _mm256_mullo_epi32(q, pv));
  __m256i neg = _mm256_cmpgt_epi32(_mm256_setzero_si256(), r);
  r = _mm256_add_epi32(r, _mm256_and_si256(neg, pv));
  __m256i pm1 = _mm256_sub_epi32(pv, _mm256_set1_epi32(1));
  __m256i big = _mm256_cmpgt_epi32(r, pm1);
  return _mm256_sub_epi32(r, _mm256_and_si256(big, pv));
}

inline __m256i row_block(const Residue* arow, std::size_t cols, const Residue* src, std::size_t count,
                         std::size_t e, __m256i pv, __m256 inv_p) {
  __m256i acc = _mm256_setzero_si256();
  for (std::size_t c = 0; c < cols; ++c) {
    if (arow[c] == 0) continue;
    __m256i coef = _mm256_set1_epi32(static_cast<int>(arow[c]));
    __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + c * count + e));
    acc = reduce(_mm256_add_epi32(acc, _mm256_mullo_epi32(coef, s)), pv, inv_p);
  }
  return acc;
}

}  // namespace

void linmap_apply(const Residue* a, std::size_t rows, std::size_t cols, const Residue* src,
                  std::size_t count, Residue* dst, std::uint32_t p) {
  const __m256i pv = _mm256_set1_epi32(static_cast<int>(p));
  const __m256 inv_p = _mm256_set1_ps(1.0f / static_cast<float>(p));
  const std::size_t body = count - count % 8;
  for (std::size_t r = 0; r < rows; ++r) {
    const Residue* arow = a + r * cols;
    for (std::size_t e = 0; e < body; e += 8) {
      __m256i v = row_block(arow, cols, src, count, e, pv, inv_p);
      _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + r * count + e), v);
    }
    for (std::size_t e = body; e < count; ++e) {
      std::uint64_t acc = 0;
      for (std::size_t c = 0; c < cols; ++c) acc = (acc + std::uint64_t{arow[c]} * src[c * count + e]) % p;
      dst[r * count + e] = static_cast<Residue>(acc);
    }
  }
}

void linmap_zero_flags(const Residue* a, std::size_t rows, std::size_t cols, const Residue* src,
                       std::size_t count, std::uint8_t* zero, std::uint32_t p) {
  const __m256i pv = _mm256_set1_epi32(static_cast<int>(p));
  const __m256 inv_p = _mm256_set1_ps(1.0f / static_cast<float>(p));
  const std::size_t body = count - count % 8;
  for (std::size_t e = 0; e < body; e += 8) {
    __m256i any = _mm256_setzero_si256();
    for (std::size_t r = 0; r < rows; ++r) {
      any = _mm256_or_si256(any, row_block(a + r * cols, cols, src, count, e, pv, inv_p));
    }
    int mask = _mm256_movemask_ps(_mm256_castsi256_ps(_mm256_cmpeq_epi32(any, _mm256_setzero_si256())));
    for (int l = 0; l < 8; ++l) zero[e + l] = static_cast<std::uint8_t>((mask >> l) & 1);
  }
  for (std::size_t e = body; e < count; ++e) {
    std::uint8_t z = 1;
    for (std::size_t r = 0; r < rows && z; ++r) {
      std::uint64_t acc = 0;
      for (std::size_t c = 0; c < cols; ++c) acc = (acc + std::uint64_t{a[r * cols + c]} * src[c * count + e]) % p;
      if (acc != 0) z = 0;
    }
    zero[e] = z;
  }
}

}  // namespace frobmod::kernels::avx2
