// Copyright 2026 The frobmod Authors
// SPDX-License-Identifier: Apache-2.0

#include <atomic>
#include <stdexcept>

#include "frobmod/kernels.hpp"

namespace frobmod::kernels {

namespace {

// -1: auto, otherwise a forced Isa value.
std::atomic<int> g_forced{-1};

bool use_vector(std::uint32_t p) { return active_isa() == Isa::kAvx2 && p < kVectorPrimeLimit; }

}  // namespace

bool avx2_available() {
#if defined(FROBMOD_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

Isa active_isa() {
  int forced = g_forced.load(std::memory_order_relaxed);
  if (forced >= 0) return static_cast<Isa>(forced);
  return avx2_available() ? Isa::kAvx2 : Isa::kScalar;
}

void force_isa(std::optional<Isa> isa) {
  if (isa && *isa == Isa::kAvx2 && !avx2_available()) {
    throw std::runtime_error("force_isa: AVX2 is not available on this machine");
  }
  g_forced.store(isa ? static_cast<int>(*isa) : -1, std::memory_order_relaxed);
}

const char* isa_name(Isa isa) { return isa == Isa::kAvx2 ? "avx2" : "scalar"; }

void linmap_apply(const Residue* a, std::size_t rows, std::size_t cols, const Residue* src,
                  std::size_t count, Residue* dst, std::uint32_t p) {
#ifdef FROBMOD_HAVE_AVX2
  if (use_vector(p)) return avx2::linmap_apply(a, rows, cols, src, count, dst, p);
#endif
  scalar::linmap_apply(a, rows, cols, src, count, dst, p);
}

void linmap_zero_flags(const Residue* a, std::size_t rows, std::size_t cols, const Residue* src,
                       std::size_t count, std::uint8_t* zero, std::uint32_t p) {
#ifdef FROBMOD_HAVE_AVX2
  if (use_vector(p)) return avx2::linmap_zero_flags(a, rows, cols, src, count, zero, p);
#endif
  scalar::linmap_zero_flags(a, rows, cols, src, count, zero, p);
}

}  // namespace frobmod::kernels
