// Copyright 2026 The frobmod Authors
// SPDX-License-Identifier: Apache-2.0

#include "frobmod/addchar.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "frobmod/freeness.hpp"

namespace frobmod {

CycSum CycSum::zeta_power(std::uint32_t p, std::uint64_t j) {
  CycSum s(p);
  s.add_zeta_power(j);
  return s;
}

CycSum CycSum::rational(std::uint32_t p, const mpq_class& r) {
  CycSum s(p);
  s.c_[0] = r;
  return s;
}

void CycSum::add_zeta_power(std::uint64_t j, const mpq_class& weight) { c_[j % p_] += weight; }

CycSum& CycSum::operator+=(const CycSum& o) {
  if (o.p_ != p_) throw std::invalid_argument("CycSum: different roots of unity");
  for (std::uint32_t j = 0; j < p_; ++j) c_[j] += o.c_[j];
  return *this;
}

CycSum CycSum::scaled(const mpq_class& s) const {
  CycSum r = *this;
  for (auto& c : r.c_) c *= s;
  return r;
}

CycSum CycSum::canonical() const {
  CycSum r = *this;
  const mpq_class top = c_[p_ - 1];
  for (auto& c : r.c_) c -= top;
  return r;
}

bool CycSum::is_zero() const {
  CycSum r = canonical();
  for (const auto& c : r.c_) {
    if (c != 0) return false;
  }
  return true;
}

bool CycSum::is_rational() const {
  CycSum r = canonical();
  for (std::uint32_t j = 1; j < p_; ++j) {
    if (r.c_[j] != 0) return false;
  }
  return true;
}

mpq_class CycSum::value() const {
  if (!is_rational()) throw std::domain_error("CycSum::value: not a rational number");
  return canonical().c_[0];
}

std::complex<double> CycSum::to_complex() const {
  std::complex<double> z = 0;
  for (std::uint32_t j = 0; j < p_; ++j) {
    double ang = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(p_);
    z += c_[j].get_d() * std::polar(1.0, ang);
  }
  return z;
}

bool operator==(const CycSum& a, const CycSum& b) {
  if (a.p_ != b.p_) return false;
  return a.canonical().c_ == b.canonical().c_;
}

CycSum char_eval(const ExtElem& a, const ExtElem& x) {
  return CycSum::zeta_power(a.ctx().p(), abs_trace(a * x));
}

namespace {

bool kills_character_on_basis(const Poly& t, const ExtElem& a) {
  const FieldCtx& ctx = a.ctx();
  for (unsigned j = 0; j < ctx.n(); ++j) {
    std::vector<Residue> e(ctx.n(), 0);
    e[j] = 1;
    if (abs_trace(a * frob_compose(t, ExtElem(&ctx, std::move(e)))) != 0) return false;
  }
  return true;
}

bool kills_character_everywhere(const Poly& t, const ExtElem& a) {
  const FieldCtx& ctx = a.ctx();
  for (std::uint64_t i = 0; i < ctx.size(); ++i) {
    if (abs_trace(a * frob_compose(t, ctx.from_index(i))) != 0) return false;
  }
  return true;
}

template <typename Test>
Poly peel_character(const ExtElem& a, Test kills) {
  const FieldCtx& ctx = a.ctx();
  Poly t = ctx.xn1();
  for (const auto& fp : ctx.xn1_factors().factors()) {
    for (unsigned k = 0; k < fp.multiplicity; ++k) {
      Poly cand = exact_div(t, fp.factor);
      if (!kills(cand, a)) break;
      t = std::move(cand);
    }
  }
  return t;
}

}  // namespace

Poly char_ord(const ExtElem& a) { return peel_character(a, kills_character_on_basis); }

Poly char_ord_definitional(const ExtElem& a) { return peel_character(a, kills_character_everywhere); }

CycSum weil_sum(const ExtElem& a, const ExtPoly& poly) {
  const FieldCtx& ctx = a.ctx();
  CycSum s(ctx.p());
  for (std::uint64_t i = 0; i < ctx.size(); ++i) {
    s.add_zeta_power(abs_trace(a * poly.eval(ctx.from_index(i))));
  }
  return s;
}

bool weil_check(const ExtElem& a, const ExtPoly& poly) {
  if (a.is_zero()) throw std::invalid_argument("weil_check: trivial character");
  if (poly.degree() < 1) throw std::invalid_argument("weil_check: constant polynomial");
  if (is_singular(poly.scaled(a))) throw std::invalid_argument("weil_check: singular polynomial");
  const double bound =
      (poly.degree() - 1) * std::sqrt(static_cast<double>(a.ctx().size()));
  return std::abs(weil_sum(a, poly).to_complex()) <= bound + 1e-6;
}

}  // namespace frobmod
