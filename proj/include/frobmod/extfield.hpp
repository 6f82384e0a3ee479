// Copyright 2026 The frobmod Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef FROBMOD_EXTFIELD_HPP_
#define FROBMOD_EXTFIELD_HPP_

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "frobmod/gfpoly.hpp"
#include "frobmod/linalg.hpp"

namespace frobmod {

class ExtElem;

/// Immutable description of F_{p^n} in a power basis.
///
/// Contexts are handed out as shared_ptr; elements keep a raw pointer to their
/// context, so the owning pointer must outlive every element built from it.
class FieldCtx {
 public:
  /// Throws std::invalid_argument for a non-prime p, n = 0, p^n >= 2^62, or a
  /// modulus that is not monic irreducible of degree n.
  static std::shared_ptr<const FieldCtx> make(std::uint32_t p, unsigned n,
                                              std::optional<Poly> modulus = std::nullopt);

  std::uint32_t p() const { return p_; }
  unsigned n() const { return n_; }
  /// p^n.
  std::uint64_t size() const { return q_; }
  const Poly& modulus() const { return modulus_; }
  const Poly& xn1() const { return xn1_; }
  const Factorization& xn1_factors() const { return xn1_factors_; }
  /// Column j holds the coordinates of (x^j)^p.
  const Matrix& frobenius() const { return frob_; }
  /// Tr(x^j) for j < n.
  const std::vector<Residue>& trace_row() const { return trace_; }

  /// Throws std::length_error when p^n exceeds the given limit.
  void require_enumerable(std::uint64_t limit, const char* where) const;

  ExtElem zero() const;
  ExtElem one() const;
  ExtElem from_index(std::uint64_t index) const;
  ExtElem from_coords(std::vector<Residue> coords) const;
  /// Residue c embedded as c * 1.
  ExtElem from_residue(Residue c) const;

  /// Coordinates of a product of two coordinate vectors.
  void mul_into(const Residue* a, const Residue* b, Residue* out) const;

 private:
  FieldCtx() = default;

  std::uint32_t p_ = 2;
  unsigned n_ = 1;
  std::uint64_t q_ = 2;
  Poly modulus_;
  Poly xn1_;
  Factorization xn1_factors_;
  Matrix frob_;
  std::vector<Residue> trace_;
  // reduce_[k] holds x^(n + k) mod modulus, k < n - 1.
  std::vector<std::vector<Residue>> reduce_;
};

using FieldPtr = std::shared_ptr<const FieldCtx>;

/// Element of F_{p^n}: n power-basis coordinates over F_p.
class ExtElem {
 public:
  ExtElem() = default;
  ExtElem(const FieldCtx* ctx, std::vector<Residue> coords);

  const FieldCtx& ctx() const { return *ctx_; }
  const FieldCtx* ctx_ptr() const { return ctx_; }
  std::span<const Residue> coords() const { return c_; }
  const std::vector<Residue>& coord_vector() const { return c_; }
  Residue coord(std::size_t i) const { return c_[i]; }
  /// sum c_i p^i.
  std::uint64_t index() const;
  bool is_zero() const;
  bool is_one() const;

  ExtElem& operator+=(const ExtElem& o);
  ExtElem& operator-=(const ExtElem& o);
  friend ExtElem operator+(ExtElem a, const ExtElem& b) { return a += b; }
  friend ExtElem operator-(ExtElem a, const ExtElem& b) { return a -= b; }
  friend ExtElem operator-(const ExtElem& a);
  friend ExtElem operator*(const ExtElem& a, const ExtElem& b);
  friend bool operator==(const ExtElem& a, const ExtElem& b) { return a.c_ == b.c_; }

  ExtElem scaled(Residue s) const;
  /// x -> x^p.
  ExtElem frob() const;
  ExtElem pow(std::uint64_t e) const;
  /// Throws std::domain_error on zero.
  ExtElem inverse() const;
  /// The unique p-th root.
  ExtElem pth_root() const;

  /// Comma separated coordinates, constant first.
  std::string to_csv() const;

 private:
  const FieldCtx* ctx_ = nullptr;
  std::vector<Residue> c_;
};

/// Polynomial with coefficients in F_{p^n}.
class ExtPoly {
 public:
  ExtPoly() = default;
  explicit ExtPoly(const FieldCtx* ctx) : ctx_(ctx) {}
  ExtPoly(const FieldCtx* ctx, std::vector<ExtElem> coeffs);
  /// Lifts a polynomial over F_p.
  static ExtPoly lift(const FieldCtx& ctx, const Poly& f);
  static ExtPoly monomial(const ExtElem& c, std::size_t degree);

  const FieldCtx& ctx() const { return *ctx_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<ExtElem>& coeffs() const { return c_; }
  ExtElem coeff(std::size_t i) const;
  ExtElem lead() const;

  ExtElem eval(const ExtElem& y) const;
  ExtPoly scaled(const ExtElem& s) const;
  ExtPoly& operator+=(const ExtPoly& o);
  ExtPoly& operator-=(const ExtPoly& o);
  friend ExtPoly operator+(ExtPoly a, const ExtPoly& b) { return a += b; }
  friend ExtPoly operator-(ExtPoly a, const ExtPoly& b) { return a -= b; }
  friend bool operator==(const ExtPoly& a, const ExtPoly& b) { return a.c_ == b.c_; }

  /// Descending powers; coefficients outside F_p print as [c0,c1,...].
  std::string pretty() const;

 private:
  void normalize();

  const FieldCtx* ctx_ = nullptr;
  std::vector<ExtElem> c_;
};

/// f o alpha = sum a_i alpha^(p^i).
ExtElem frob_compose(const Poly& f, const ExtElem& alpha);
/// Matrix of alpha -> f o alpha on power-basis coordinates.
Matrix compose_matrix(const FieldCtx& ctx, const Poly& f);

/// F_p-order: the monic generator of {h : h o alpha = 0}.
Poly ord(const ExtElem& alpha);
bool is_normal(const ExtElem& alpha);
Residue abs_trace(const ExtElem& alpha);

/// Some y with y^p - y = c (the one with the smallest encoding), if any.
std::optional<ExtElem> solve_artin_schreier(const ExtElem& c);

/// Batched order classification over element indices. For each distinct
/// irreducible h of x^n - 1 with multiplicity e, the exponent of h in the order
/// is the least k <= e whose zero test passes.
class OrderClassifier {
 public:
  enum class Kind {
    kElement,   // order of alpha under the Frobenius action
    kCharacter  // order of the additive character psi_a
  };

  OrderClassifier(FieldPtr ctx, Kind kind);

  const FieldCtx& ctx() const { return *ctx_; }
  std::size_t factor_count() const { return hs_.size(); }
  /// One exponent per distinct factor (in canonical factor order) for each of
  /// the count elements starting at first.
  std::vector<std::uint8_t> classify(std::uint64_t first, std::size_t count) const;
  /// Exponents for explicit elements.
  std::vector<std::uint8_t> classify(std::span<const ExtElem> elems) const;
  Poly order_poly(std::span<const std::uint8_t> exps) const;
  /// Exponent vector of (x^n - 1) / (x - 1) style targets, by polynomial.
  std::vector<std::uint8_t> exponents_of(const Poly& divisor) const;

 private:
  std::vector<std::uint8_t> classify_soa(const std::vector<Residue>& soa, std::size_t count) const;

  FieldPtr ctx_;
  Kind kind_;
  std::vector<Poly> hs_;
  std::vector<unsigned> mult_;
  // tests_[i][k]: zero-test matrix for (x^n - 1) / h_i^(e_i - k), k < e_i.
  std::vector<std::vector<Matrix>> tests_;
};

/// Order of every divisor of x^n - 1 among all elements, in canonical divisor order.
struct OrderCount {
  Poly divisor;
  std::uint64_t count = 0;
};
/// Exhaustive tally; requires p^n <= 2^22.
std::vector<OrderCount> count_by_order(const FieldPtr& ctx);

}  // namespace frobmod

#endif  // FROBMOD_EXTFIELD_HPP_
