// Copyright 2026 The frobmod Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef FROBMOD_ARITHFUN_HPP_
#define FROBMOD_ARITHFUN_HPP_

#include <gmpxx.h>

#include <cstddef>
#include <vector>

#include "frobmod/gfpoly.hpp"

namespace frobmod {

/// Monic divisors of a factored polynomial in canonical order.
class DivisorIterator {
 public:
  explicit DivisorIterator(const Factorization& f);

  /// prod (e_i + 1).
  std::size_t count() const { return divisors_.size(); }
  bool done() const { return pos_ >= divisors_.size(); }
  const Poly& current() const { return divisors_[pos_]; }
  /// Exponent of each factor of the base factorization in current().
  const std::vector<unsigned>& exponents() const { return exps_[pos_]; }
  void next() { ++pos_; }
  void reset() { pos_ = 0; }

  const std::vector<Poly>& all() const { return divisors_; }

 private:
  std::vector<Poly> divisors_;
  std::vector<std::vector<unsigned>> exps_;
  std::size_t pos_ = 0;
};

/// Factorization through a process-wide memo table.
Factorization factor_cached(const Poly& f);

mpz_class phi_q(const Factorization& f);
int mu_q(const Factorization& f);
mpz_class w_count(const Factorization& f);
mpz_class phi_q(const Poly& f);
int mu_q(const Poly& f);
mpz_class w_count(const Poly& f);

/// p^deg f.
mpz_class poly_norm(const Poly& f);

/// f / gcd(f, g).
Poly f_sub_g(const Poly& f, const Poly& g);

/// sum over monic t | f of |mu(t_(g))| / Phi(t_(g)) * Phi(t), by direct summation.
mpz_class t_sum(const Poly& f, const Poly& g);
/// |gcd(f, g)| * W(gcd(f, f_(g))).
mpz_class t_closed(const Poly& f, const Poly& g);

}  // namespace frobmod

#endif  // FROBMOD_ARITHFUN_HPP_
