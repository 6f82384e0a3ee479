// Copyright 2026 The frobmod Authors
// SPDX-License-Identifier: Apache-2.0

#include "frobmod/gfpoly.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>

namespace frobmod {

bool is_prime_u32(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

void require_prime(std::uint64_t p, const char* where) {
  if (p > kMaxPrime || !is_prime_u32(p)) {
    throw std::invalid_argument(std::string(where) + ": " + std::to_string(p) +
                                " is not a prime below 2^31");
  }
}

namespace {

void require_same_field(const Poly& a, const Poly& b, const char* where) {
  if (a.prime() != b.prime()) {
    throw std::invalid_argument(std::string(where) + ": polynomials over different fields");
  }
}

std::uint64_t poly_hash(const Poly& f, std::uint64_t salt) {
  std::uint64_t h = 1469598103934665603ull ^ salt;
  auto mix = [&h](std::uint64_t v) {
    h ^= v;
    h *= 1099511628211ull;
  };
  mix(f.prime());
  for (Residue c : f.coeffs()) mix(c);
  return h;
}

// x^(p^k) mod f computed by k successive p-th powers.
Poly frobenius_power_of_x(const Poly& f, unsigned k) {
  std::uint32_t p = f.prime();
  Poly h = Poly::x(p) % f;
  for (unsigned i = 0; i < k; ++i) h = pow_mod(h, p, f);
  return h;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

Poly::Poly(std::uint32_t p, std::vector<Residue> coeffs) : p_(p), c_(std::move(coeffs)) {
  if (p_ < 2) throw std::invalid_argument("Poly: modulus must be a prime >= 2");
  for (auto& c : c_) c %= p_;
  normalize();
}

void Poly::normalize() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly Poly::monomial(std::uint32_t p, std::size_t degree, Residue c) {
  std::vector<Residue> v(degree + 1, 0);
  v[degree] = c;
  return Poly(p, std::move(v));
}

Poly Poly::xn_minus_one(std::uint32_t p, std::size_t n) {
  if (n == 0) throw std::invalid_argument("x^n - 1 requires n >= 1");
  std::vector<Residue> v(n + 1, 0);
  v[0] = p - 1;
  v[n] = 1;
  return Poly(p, std::move(v));
}

Poly Poly::monic() const {
  if (is_zero()) throw std::domain_error("monic: zero polynomial");
  return scaled(inv_mod(lead(), p_));
}

Poly Poly::scaled(Residue s) const {
  std::vector<Residue> v(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) v[i] = mul_mod(c_[i], s, p_);
  return Poly(p_, std::move(v));
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return zero(p_);
  std::vector<Residue> v(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) {
    v[i - 1] = mul_mod(c_[i], static_cast<Residue>(i % p_), p_);
  }
  return Poly(p_, std::move(v));
}

Residue Poly::eval(Residue at) const {
  Residue r = 0;
  for (std::size_t i = c_.size(); i-- > 0;) r = add_mod(mul_mod(r, at, p_), c_[i], p_);
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  require_same_field(*this, o, "operator+");
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = add_mod(c_[i], o.c_[i], p_);
  normalize();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  require_same_field(*this, o, "operator-");
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = sub_mod(c_[i], o.c_[i], p_);
  normalize();
  return *this;
}

Poly operator-(const Poly& a) {
  std::vector<Residue> v(a.c_.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = neg_mod(a.c_[i], a.p_);
  return Poly(a.p_, std::move(v));
}

Poly operator*(const Poly& a, const Poly& b) {
  require_same_field(a, b, "operator*");
  if (a.is_zero() || b.is_zero()) return Poly::zero(a.p_);
  const std::uint32_t p = a.p_;
  std::vector<std::uint64_t> acc(a.c_.size() + b.c_.size() - 1, 0);
  // Reduce lazily: each product is below 2^62 only for p < 2^31, so fold often.
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) {
      acc[i + j] = (acc[i + j] + static_cast<std::uint64_t>(a.c_[i]) * b.c_[j]) % p;
    }
  }
  std::vector<Residue> v(acc.size());
  for (std::size_t i = 0; i < acc.size(); ++i) v[i] = static_cast<Residue>(acc[i]);
  return Poly(p, std::move(v));
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  require_same_field(a, b, "divmod");
  if (b.is_zero()) throw std::domain_error("divmod: division by the zero polynomial");
  const std::uint32_t p = a.p_;
  if (a.degree() < b.degree()) return {Poly::zero(p), a};
  std::vector<Residue> r = a.c_;
  const std::size_t db = b.c_.size() - 1;
  std::vector<Residue> q(r.size() - db, 0);
  const Residue inv_lead = inv_mod(b.lead(), p);
  for (std::size_t k = r.size(); k-- > db;) {
    Residue coef = mul_mod(r[k], inv_lead, p);
    if (coef == 0) continue;
    q[k - db] = coef;
    for (std::size_t j = 0; j <= db; ++j) {
      r[k - db + j] = sub_mod(r[k - db + j], mul_mod(coef, b.c_[j], p), p);
    }
  }
  r.resize(db);
  return {Poly(p, std::move(q)), Poly(p, std::move(r))};
}

std::string Poly::pretty() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = c_.size(); i-- > 0;) {
    Residue c = c_[i];
    if (c == 0) continue;
    if (!first) os << '+';
    first = false;
    if (i == 0) {
      os << c;
      continue;
    }
    if (c != 1) os << c;
    os << 'x';
    if (i > 1) os << '^' << i;
  }
  return os.str();
}

std::string Poly::to_csv() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (i) os << ',';
    os << c_[i];
  }
  return os.str();
}

bool canonical_less(const Poly& a, const Poly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int i = a.degree(); i >= 0; --i) {
    auto ai = a.coeff(static_cast<std::size_t>(i));
    auto bi = b.coeff(static_cast<std::size_t>(i));
    if (ai != bi) return ai < bi;
  }
  return false;
}

Poly pow_mod(const Poly& base, std::uint64_t e, const Poly& m) {
  Poly result = Poly::one(m.prime()) % m;
  Poly b = base % m;
  while (e != 0) {
    if (e & 1) result = (result * b) % m;
    e >>= 1;
    if (e != 0) b = (b * b) % m;
  }
  return result;
}

Poly poly_gcd(const Poly& a, const Poly& b) {
  require_same_field(a, b, "poly_gcd");
  if (a.is_zero() && b.is_zero()) throw std::invalid_argument("poly_gcd: both inputs are zero");
  Poly x = a, y = b;
  while (!y.is_zero()) {
    Poly r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

Poly exact_div(const Poly& a, const Poly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw std::domain_error("exact_div: divisor does not divide");
  return q;
}

Factorization::Factorization(std::uint32_t p, std::vector<FactorPower> factors, Residue unit)
    : p_(p), factors_(std::move(factors)), unit_(unit) {
  std::sort(factors_.begin(), factors_.end(),
            [](const FactorPower& a, const FactorPower& b) { return canonical_less(a.factor, b.factor); });
}

Poly Factorization::expand() const {
  Poly r = Poly::constant(p_, unit_);
  for (const auto& fp : factors_) {
    for (unsigned i = 0; i < fp.multiplicity; ++i) r = r * fp.factor;
  }
  return r;
}

Poly Factorization::radical() const {
  Poly r = Poly::one(p_);
  for (const auto& fp : factors_) r = r * fp.factor;
  return r;
}

std::string Factorization::pretty() const {
  std::ostringstream os;
  bool first = true;
  if (unit_ != 1) {
    os << unit_;
    first = false;
  }
  for (const auto& fp : factors_) {
    if (!first) os << ' ';
    first = false;
    os << '(' << fp.factor.pretty() << ')';
    if (fp.multiplicity > 1) os << '^' << fp.multiplicity;
  }
  if (first) os << "1";
  return os.str();
}

namespace {

// (g, i) pairs with f = prod g^i, each g squarefree and pairwise coprime.
std::vector<std::pair<Poly, unsigned>> squarefree_decomposition(const Poly& f) {
  const std::uint32_t p = f.prime();
  std::vector<std::pair<Poly, unsigned>> out;
  if (f.degree() <= 0) return out;
  Poly c = poly_gcd(f, f.derivative());
  Poly w = f / c;
  unsigned i = 1;
  while (!w.is_one()) {
    Poly y = poly_gcd(w, c);
    Poly fac = w / y;
    if (fac.degree() > 0) out.emplace_back(fac.monic(), i);
    w = y;
    c = c / y;
    ++i;
  }
  if (c.degree() > 0) {
    // c is a p-th power: c(x) = r(x^p), and coefficients are their own p-th roots.
    std::vector<Residue> root(static_cast<std::size_t>(c.degree()) / p + 1, 0);
    for (std::size_t k = 0; k < root.size(); ++k) root[k] = c.coeff(k * p);
    for (auto& [g, m] : squarefree_decomposition(Poly(p, std::move(root)).monic())) {
      out.emplace_back(g, m * p);
    }
  }
  return out;
}

std::vector<std::pair<Poly, unsigned>> distinct_degree(const Poly& f) {
  const std::uint32_t p = f.prime();
  std::vector<std::pair<Poly, unsigned>> out;
  Poly rest = f;
  Poly h = Poly::x(p) % rest;
  unsigned i = 1;
  while (rest.degree() >= 2 * static_cast<int>(i)) {
    h = pow_mod(h, p, rest);
    Poly g = poly_gcd(rest, h - Poly::x(p));
    if (!g.is_one()) {
      out.emplace_back(g, i);
      rest = rest / g;
      h = h % rest;
    }
    ++i;
  }
  if (rest.degree() > 0) out.emplace_back(rest.monic(), static_cast<unsigned>(rest.degree()));
  return out;
}

void split_recursive(const Poly& f, unsigned d, std::vector<Poly>& out) {
  if (f.degree() == static_cast<int>(d)) {
    out.push_back(f);
    return;
  }
  const std::uint32_t p = f.prime();
  std::mt19937_64 rng(poly_hash(f, d));
  std::uniform_int_distribution<std::uint32_t> coef(0, p - 1);
  const auto n = static_cast<std::size_t>(f.degree());
  for (;;) {
    std::vector<Residue> v(n);
    for (auto& c : v) c = coef(rng);
    Poly a(p, std::move(v));
    if (a.degree() <= 0) continue;
    Poly g = poly_gcd(f, a);
    if (g.degree() <= 0) {
      if (p == 2) {
        // Absolute trace from F_{2^d}: a + a^2 + ... + a^(2^(d-1)).
        Poly t = a, s = a;
        for (unsigned k = 1; k < d; ++k) {
          t = (t * t) % f;
          s += t;
        }
        g = s.is_zero() ? f : poly_gcd(f, s);
      } else {
        // a^((p^d - 1)/2) = (prod_k a^(p^k))^((p - 1)/2)
        Poly t = a, norm = a;
        for (unsigned k = 1; k < d; ++k) {
          t = pow_mod(t, p, f);
          norm = (norm * t) % f;
        }
        Poly b = pow_mod(norm, (p - 1) / 2, f) - Poly::one(p);
        g = b.is_zero() ? f : poly_gcd(f, b);
      }
    }
    if (g.degree() > 0 && g.degree() < f.degree()) {
      split_recursive(g, d, out);
      split_recursive(f / g, d, out);
      return;
    }
  }
}

}  // namespace

std::vector<Poly> equal_degree_split(const Poly& f, unsigned d) {
  if (f.degree() <= 0 || d == 0 || f.degree() % static_cast<int>(d) != 0) {
    throw std::invalid_argument("equal_degree_split: degree mismatch");
  }
  std::vector<Poly> out;
  split_recursive(f.monic(), d, out);
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

Factorization factor(const Poly& f) {
  if (f.is_zero()) throw std::invalid_argument("factor: zero polynomial");
  const std::uint32_t p = f.prime();
  const Residue unit = f.lead();
  std::map<std::vector<Residue>, FactorPower> acc;
  for (const auto& [g, mult] : squarefree_decomposition(f.monic())) {
    for (const auto& [block, d] : distinct_degree(g)) {
      for (const Poly& irr : equal_degree_split(block, d)) {
        std::vector<Residue> key(irr.coeffs().begin(), irr.coeffs().end());
        auto& slot = acc[key];
        slot.factor = irr;
        slot.multiplicity += mult;
      }
    }
  }
  std::vector<FactorPower> out;
  out.reserve(acc.size());
  for (auto& kv : acc) out.push_back(std::move(kv.second));
  return Factorization(p, std::move(out), unit);
}

std::uint64_t multiplicative_order(std::uint64_t p, std::uint64_t d) {
  if (d == 0) throw std::invalid_argument("multiplicative_order: d must be positive");
  if (d == 1) return 1;
  std::uint64_t r = p % d, k = 1;
  if (r == 0) throw std::invalid_argument("multiplicative_order: p and d not coprime");
  while (r != 1) {
    r = static_cast<std::uint64_t>((static_cast<unsigned __int128>(r) * p) % d);
    ++k;
    if (k > d) throw std::invalid_argument("multiplicative_order: p and d not coprime");
  }
  return k;
}

std::uint64_t euler_phi(std::uint64_t d) {
  std::uint64_t result = d;
  for (std::uint64_t q : prime_factors(d)) result = result / q * (q - 1);
  return result;
}

std::vector<std::uint64_t> integer_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> lo, hi;
  for (std::uint64_t d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      lo.push_back(d);
      if (d * d != n) hi.push_back(n / d);
    }
  }
  lo.insert(lo.end(), hi.rbegin(), hi.rend());
  return lo;
}

Factorization factor_xn1(std::uint32_t p, std::uint64_t n) {
  require_prime(p, "factor_xn1");
  if (n == 0) throw std::invalid_argument("factor_xn1: n must be at least 1");
  std::uint64_t core = n;
  unsigned pa = 1;
  while (core % p == 0) {
    core /= p;
    pa *= p;
  }
  // Cyclotomic polynomials mod p via Phi_d = (x^d - 1) / prod_{e | d, e < d} Phi_e.
  std::map<std::uint64_t, Poly> cyclo;
  std::vector<FactorPower> out;
  for (std::uint64_t d : integer_divisors(core)) {
    Poly phi = Poly::xn_minus_one(p, d);
    for (const auto& [e, pe] : cyclo) {
      if (d % e == 0) phi = exact_div(phi, pe);
    }
    cyclo.emplace(d, phi);
    auto deg = static_cast<unsigned>(multiplicative_order(p, d));
    for (Poly& irr : equal_degree_split(phi, deg)) out.push_back({std::move(irr), pa});
  }
  return Factorization(p, std::move(out));
}

bool is_irreducible(const Poly& f) {
  if (!f.is_monic() || f.degree() < 1) {
    throw std::invalid_argument("is_irreducible: input must be monic and nonconstant");
  }
  const auto n = static_cast<unsigned>(f.degree());
  if (n == 1) return true;
  const std::uint32_t p = f.prime();
  if (!(frobenius_power_of_x(f, n) - Poly::x(p)).is_zero()) return false;
  for (std::uint64_t l : prime_factors(n)) {
    Poly h = frobenius_power_of_x(f, static_cast<unsigned>(n / l)) - Poly::x(p);
    if (h.is_zero() || !poly_gcd(f, h).is_one()) return false;
  }
  return true;
}

Poly find_irreducible(std::uint32_t p, unsigned n) {
  require_prime(p, "find_irreducible");
  if (n == 0) throw std::invalid_argument("find_irreducible: degree must be positive");
  std::vector<Residue> digits(n, 0);
  for (;;) {
    std::vector<Residue> c = digits;
    c.push_back(1);
    Poly cand(p, std::move(c));
    if (is_irreducible(cand)) return cand;
    std::size_t k = 0;
    while (k < n && ++digits[k] == p) digits[k++] = 0;
    if (k == n) throw std::logic_error("find_irreducible: exhausted candidates");
  }
}

}  // namespace frobmod
