// Copyright 2026 The frobmod Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef FROBMOD_KERNELS_HPP_
#define FROBMOD_KERNELS_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>

#include "frobmod/modarith.hpp"

// Batched F_p linear maps over blocks of field elements stored column-wise
// (structure of arrays): coordinate c of element e lives at src[c * count + e].
//
// Every entry point has a scalar reference version and, when the compiler
// supports it, an AVX2 version. The dispatching functions pick one at run time.

namespace frobmod::kernels {

enum class Isa { kScalar, kAvx2 };

/// Largest prime the vector path accepts; larger moduli run the scalar path.
inline constexpr std::uint32_t kVectorPrimeLimit = 2048;

bool avx2_available();
/// The implementation the dispatchers currently use.
Isa active_isa();
/// Pins the dispatchers to one implementation (nullopt restores auto-detection).
/// Requesting kAvx2 on a machine without it throws std::runtime_error.
void force_isa(std::optional<Isa> isa);
const char* isa_name(Isa isa);

/// dst[r * count + e] = sum_c A[r * cols + c] * src[c * count + e] mod p.
void linmap_apply(const Residue* a, std::size_t rows, std::size_t cols, const Residue* src,
                  std::size_t count, Residue* dst, std::uint32_t p);

/// zero[e] = 1 when the image of element e under A is zero, else 0.
void linmap_zero_flags(const Residue* a, std::size_t rows, std::size_t cols, const Residue* src,
                       std::size_t count, std::uint8_t* zero, std::uint32_t p);

namespace scalar {
void linmap_apply(const Residue* a, std::size_t rows, std::size_t cols, const Residue* src,
                  std::size_t count, Residue* dst, std::uint32_t p);
void linmap_zero_flags(const Residue* a, std::size_t rows, std::size_t cols, const Residue* src,
                       std::size_t count, std::uint8_t* zero, std::uint32_t p);
}  // namespace scalar

#ifdef FROBMOD_HAVE_AVX2
namespace avx2 {
// Require p < kVectorPrimeLimit.
void linmap_apply(const Residue* a, std::size_t rows, std::size_t cols, const Residue* src,
                  std::size_t count, Residue* dst, std::uint32_t p);
void linmap_zero_flags(const Residue* a, std::size_t rows, std::size_t cols, const Residue* src,
                       std::size_t count, std::uint8_t* zero, std::uint32_t p);
}  // namespace avx2
#endif

}  // namespace frobmod::kernels

#endif  // FROBMOD_KERNELS_HPP_
