// Copyright 2026 The frobmod Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef FROBMOD_ADDCHAR_HPP_
#define FROBMOD_ADDCHAR_HPP_

#include <gmpxx.h>

#include <complex>
#include <cstdint>
#include <vector>

#include "frobmod/extfield.hpp"

namespace frobmod {

/// Exact element sum c_j zeta^j of Q(zeta_p), zeta a primitive p-th root of unity.
///
/// Two coefficient vectors are equal when their difference is constant, since
/// 1 + zeta + ... + zeta^(p-1) = 0. The canonical form has c_{p-1} = 0.
class CycSum {
 public:
  CycSum() = default;
  explicit CycSum(std::uint32_t p) : p_(p), c_(p) {}
  static CycSum zeta_power(std::uint32_t p, std::uint64_t j);
  static CycSum rational(std::uint32_t p, const mpq_class& r);

  std::uint32_t p() const { return p_; }
  const std::vector<mpq_class>& coeffs() const { return c_; }
  void add_zeta_power(std::uint64_t j, const mpq_class& weight = 1);

  CycSum& operator+=(const CycSum& o);
  CycSum scaled(const mpq_class& s) const;
  CycSum canonical() const;
  bool is_zero() const;
  /// True when the canonical form is a constant; value() is then that constant.
  bool is_rational() const;
  mpq_class value() const;
  std::complex<double> to_complex() const;

  friend bool operator==(const CycSum& a, const CycSum& b);

 private:
  std::uint32_t p_ = 2;
  std::vector<mpq_class> c_;
};

/// psi_a(x) = zeta^Tr(a x).
CycSum char_eval(const ExtElem& a, const ExtElem& x);
/// F_p-order of psi_a.
Poly char_ord(const ExtElem& a);
/// Same order computed from the definition, testing h o psi_a on every element.
Poly char_ord_definitional(const ExtElem& a);

/// sum over y in F_{p^n} of psi_a(P(y)); coefficient j counts y with Tr(a P(y)) = j.
CycSum weil_sum(const ExtElem& a, const ExtPoly& poly);
/// |weil_sum| <= (deg P - 1) q^(1/2) + 1e-6, q = p^n. Throws std::invalid_argument
/// for a = 0, constant P or singular a P.
bool weil_check(const ExtElem& a, const ExtPoly& poly);

}  // namespace frobmod

#endif  // FROBMOD_ADDCHAR_HPP_
