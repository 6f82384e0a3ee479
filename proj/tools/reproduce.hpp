// Copyright 2026 The frobmod Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef FROBMOD_TOOLS_REPRODUCE_HPP_
#define FROBMOD_TOOLS_REPRODUCE_HPP_

#include <cstdint>
#include <string>
#include <vector>

namespace frobmod::tools {

struct ClaimResult {
  std::string id;
  std::string expected;
  std::string observed;
  bool match = false;
  std::string diff;
};

struct ReproduceOptions {
  bool include_slow = false;
  unsigned jobs = 1;
};

/// Recomputes every pinned reference number and compares.
std::vector<ClaimResult> reproduce_all(const ReproduceOptions& opts);

/// Row of the lemma-bound table: primes (lo, hi], expected largest failing n.
struct BracketRow {
  std::string label;
  std::uint32_t lo = 0;
  std::uint32_t hi = 0;
  std::uint64_t expected = 0;
  std::uint64_t bracket_max = 0;  // max failing n over primes in (lo, hi]
  std::uint64_t beyond_max = 0;   // max failing n over primes > hi
};

std::vector<BracketRow> lemma_brackets();

}  // namespace frobmod::tools

#endif  // FROBMOD_TOOLS_REPRODUCE_HPP_
