// Copyright 2026 The frobmod Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef FROBMOD_GFPOLY_HPP_
#define FROBMOD_GFPOLY_HPP_

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "frobmod/modarith.hpp"

namespace frobmod {

/// Dense univariate polynomial over the prime field F_p.
///
/// Coefficient i is the coefficient of x^i. The stored sequence is always
/// normalized: either empty (the zero polynomial) or with a nonzero last entry.
class Poly {
 public:
  Poly() = default;
  /// Reduces every coefficient mod p and strips trailing zeros.
  Poly(std::uint32_t p, std::vector<Residue> coeffs);

  static Poly zero(std::uint32_t p) { return Poly(p, {}); }
  static Poly one(std::uint32_t p) { return Poly(p, {1}); }
  static Poly x(std::uint32_t p) { return Poly(p, {0, 1}); }
  static Poly constant(std::uint32_t p, Residue c) { return Poly(p, {c}); }
  static Poly monomial(std::uint32_t p, std::size_t degree, Residue c = 1);
  /// x^n - 1.
  static Poly xn_minus_one(std::uint32_t p, std::size_t n);

  std::uint32_t prime() const { return p_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }
  Residue lead() const { return c_.empty() ? 0 : c_.back(); }
  Residue coeff(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
  std::span<const Residue> coeffs() const { return c_; }

  Poly monic() const;
  Poly scaled(Residue s) const;
  Poly derivative() const;
  Residue eval(Residue at) const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator-(const Poly& a);
  friend Poly operator*(const Poly& a, const Poly& b);
  /// Quotient and remainder; throws std::domain_error on a zero divisor.
  friend std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
  friend Poly operator/(const Poly& a, const Poly& b) { return divmod(a, b).first; }
  friend Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).second; }
  friend bool operator==(const Poly& a, const Poly& b) = default;

  /// True if b divides this polynomial exactly.
  bool divisible_by(const Poly& b) const { return (*this % b).is_zero(); }

  /// Human readable form in descending powers, e.g. "x^2+x+1".
  std::string pretty() const;
  /// Comma separated coefficients, constant term first, e.g. "1,0,1".
  std::string to_csv() const;

 private:
  void normalize();

  std::uint32_t p_ = 2;
  std::vector<Residue> c_;
};

/// Canonical order: by degree, then by the integer encoding sum c_i p^i.
bool canonical_less(const Poly& a, const Poly& b);

/// base^e mod m.
Poly pow_mod(const Poly& base, std::uint64_t e, const Poly& m);
/// Monic gcd. Throws on mismatched fields or when both inputs are zero.
Poly poly_gcd(const Poly& a, const Poly& b);
/// Exact division; throws std::domain_error if b does not divide a.
Poly exact_div(const Poly& a, const Poly& b);

struct FactorPower {
  Poly factor;
  unsigned multiplicity = 0;

  friend bool operator==(const FactorPower&, const FactorPower&) = default;
};

/// unit * prod factor^multiplicity, factors monic irreducible and in canonical order.
class Factorization {
 public:
  Factorization() = default;
  Factorization(std::uint32_t p, std::vector<FactorPower> factors, Residue unit = 1);

  std::uint32_t prime() const { return p_; }
  Residue unit() const { return unit_; }
  const std::vector<FactorPower>& factors() const { return factors_; }
  std::size_t size() const { return factors_.size(); }
  bool empty() const { return factors_.empty(); }

  Poly expand() const;
  /// Product of the distinct irreducible factors.
  Poly radical() const;
  /// (factor, multiplicity) pairs rendered as "(x+1)^2 (x^2+x+1)^2".
  std::string pretty() const;

  friend bool operator==(const Factorization&, const Factorization&) = default;

 private:
  std::uint32_t p_ = 2;
  std::vector<FactorPower> factors_;
  Residue unit_ = 1;
};

/// Complete factorization over F_p (squarefree, distinct-degree, equal-degree
/// splitting). Any randomness is seeded from the input polynomial.
Factorization factor(const Poly& f);

/// Factorization of x^n - 1 through its cyclotomic decomposition.
Factorization factor_xn1(std::uint32_t p, std::uint64_t n);

/// Rabin's irreducibility test. Input must be monic and nonconstant.
bool is_irreducible(const Poly& f);

/// The monic irreducible of degree n with the smallest encoding of its lower
/// coefficients.
Poly find_irreducible(std::uint32_t p, unsigned n);

/// Splits a squarefree monic f whose irreducible factors all have degree d.
std::vector<Poly> equal_degree_split(const Poly& f, unsigned d);

/// Multiplicative order of p modulo d (d >= 1, gcd(p, d) = 1).
std::uint64_t multiplicative_order(std::uint64_t p, std::uint64_t d);
/// Euler's totient of an ordinary integer.
std::uint64_t euler_phi(std::uint64_t d);
/// Positive divisors of n in increasing order.
std::vector<std::uint64_t> integer_divisors(std::uint64_t n);

}  // namespace frobmod

#endif  // FROBMOD_GFPOLY_HPP_
