// Copyright 2026 The frobmod Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef FROBMOD_MODARITH_HPP_
#define FROBMOD_MODARITH_HPP_

#include <cstdint>
#include <stdexcept>

namespace frobmod {

/// A canonical residue in [0, p). All primes handled by the library are below
/// 2^31, so a product of two residues fits in 64 bits.
using Residue = std::uint32_t;

inline constexpr std::uint32_t kMaxPrime = (1u << 31) - 1;

inline Residue add_mod(Residue a, Residue b, std::uint32_t p) {
  std::uint32_t s = a + b;
  return s >= p ? s - p : s;
}

inline Residue sub_mod(Residue a, Residue b, std::uint32_t p) {
  return a >= b ? a - b : a + p - b;
}

inline Residue neg_mod(Residue a, std::uint32_t p) { return a == 0 ? 0 : p - a; }

inline Residue mul_mod(Residue a, Residue b, std::uint32_t p) {
  return static_cast<Residue>((static_cast<std::uint64_t>(a) * b) % p);
}

inline Residue pow_mod(Residue base, std::uint64_t e, std::uint32_t p) {
  std::uint64_t result = 1 % p;
  std::uint64_t b = base % p;
  while (e != 0) {
    if (e & 1) result = (result * b) % p;
    b = (b * b) % p;
    e >>= 1;
  }
  return static_cast<Residue>(result);
}

/// Inverse modulo a prime.
inline Residue inv_mod(Residue a, std::uint32_t p) {
  if (a % p == 0) throw std::domain_error("inv_mod: zero has no inverse");
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p, new_r = a % p;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (t < 0) t += p;
  return static_cast<Residue>(t);
}

/// Deterministic primality test for 32-bit inputs.
bool is_prime_u32(std::uint64_t n);

/// Throws std::invalid_argument unless p is a prime below 2^31.
void require_prime(std::uint64_t p, const char* where);

}  // namespace frobmod

#endif  // FROBMOD_MODARITH_HPP_
