// Copyright 2026 The frobmod Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef FROBMOD_FREENESS_HPP_
#define FROBMOD_FREENESS_HPP_

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "frobmod/addchar.hpp"
#include "frobmod/extfield.hpp"

namespace frobmod {

/// A pair (f, g) with g | x^n - 1 and f | (x^n - 1) / g, both monic.
struct FreenessSpec {
  Poly f;
  Poly g;
  Poly f_sqfree;

  /// Normalizes to monic and validates divisibility; throws std::invalid_argument.
  static FreenessSpec make(const FieldCtx& ctx, const Poly& f, const Poly& g);
  /// Every valid pair, g outer and f inner, both in canonical divisor order.
  static std::vector<FreenessSpec> all(const FieldCtx& ctx);
  /// Same pair with f replaced by its squarefree part.
  FreenessSpec squarefree() const;
};

/// gcd(f g, (x^n - 1) / order) == g.
bool is_fg_free_given_order(const FieldCtx& ctx, const Poly& order, const FreenessSpec& spec);
bool is_fg_free(const ExtElem& alpha, const FreenessSpec& spec);

/// Definitional check for every element at once: entry i is 1 when the element
/// with index i is free. Requires p^n <= 2^14.
std::vector<std::uint8_t> fg_free_oracle_table(const FieldCtx& ctx, const FreenessSpec& spec);
bool is_fg_free_oracle(const ExtElem& alpha, const FreenessSpec& spec);

/// Additive characters of one field grouped by their F_p-order.
class CharacterTable {
 public:
  /// Requires p^n <= 2^12.
  explicit CharacterTable(FieldPtr ctx);

  const FieldCtx& ctx() const { return *ctx_; }
  /// sum over characters psi of order t of psi(alpha).
  CycSum order_sum(const Poly& t, const ExtElem& alpha) const;
  /// Number of characters of order t.
  std::uint64_t order_count(const Poly& t) const;

 private:
  FieldPtr ctx_;
  OrderClassifier cls_;
  std::map<std::vector<std::uint8_t>, std::vector<ExtElem>> groups_;
};

/// Phi(f)/|fg| sum_{t | fg} mu(t_(g))/Phi(t_(g)) sum_{Ord psi = t} psi(alpha).
/// Throws std::logic_error if the value is not rational.
mpq_class indicator_charsum(const ExtElem& alpha, const FreenessSpec& spec, const CharacterTable& table);
mpq_class indicator_charsum(const ExtElem& alpha, const FreenessSpec& spec);

/// P = r^p - r + delta.
struct SingularWitness {
  ExtPoly r;
  ExtElem delta;
};

std::optional<SingularWitness> is_singular(const ExtPoly& poly);
/// r^p - r + delta.
ExtPoly expand_witness(const SingularWitness& w);

/// Some (a, b) != (0, 0) with a h + b H singular, if one exists. The search
/// covers one pair per F_p^* scaling class; requires p^n <= 2^11 unless h = x.
std::optional<std::pair<ExtElem, ExtElem>> is_pair_singular(const ExtPoly& h, const ExtPoly& H);

/// Maximum degree of a h + b H over (a, b) != (0, 0).
int pair_max_degree(const ExtPoly& h, const ExtPoly& H);

/// #{y : h(y) is s1-free and H(y) is s2-free}. Requires p^n <= 2^22.
std::uint64_t count_free_pairs(const ExtPoly& h, const ExtPoly& H, const FreenessSpec& s1,
                               const FreenessSpec& s2, unsigned jobs = 1);

/// Interval center +- radius with radius = radius_rational * p^(half_exponent / 2).
struct BoundInterval {
  mpq_class center;
  mpq_class radius_rational;
  unsigned long half_exponent = 0;
  std::uint32_t p = 2;

  mpq_class radius_sq() const;
  double radius_approx() const;
  /// |value - center| <= radius, decided exactly.
  bool contains(const mpz_class& value) const;
  /// center > radius, decided exactly.
  bool lower_positive() const;
};

/// Prime sieve decomposition of two freeness targets.
struct SievePlan {
  Poly k;
  std::vector<Poly> sieved_f;
  Poly big_k;
  std::vector<Poly> sieved_F;
  mpq_class delta;

  std::size_t u() const { return sieved_f.size(); }
  std::size_t v() const { return sieved_F.size(); }
};

/// Count prediction from the character-sum theorem; D_2 = maxdeg - 1.
BoundInterval main_bound(const FieldCtx& ctx, const FreenessSpec& s1, const FreenessSpec& s2, int maxdeg);
/// Sieved prediction; the plan must decompose the radicals of s1.f and s2.f.
BoundInterval sieve_bound(const FieldCtx& ctx, const FreenessSpec& s1, const FreenessSpec& s2, int maxdeg,
                          const SievePlan& plan);

}  // namespace frobmod

#endif  // FROBMOD_FREENESS_HPP_
