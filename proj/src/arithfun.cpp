// Copyright 2026 The frobmod Authors
// SPDX-License-Identifier: Apache-2.0

#include "frobmod/arithfun.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <shared_mutex>
#include <stdexcept>

namespace frobmod {

DivisorIterator::DivisorIterator(const Factorization& f) {
  const auto& fs = f.factors();
  std::vector<unsigned> e(fs.size(), 0);
  std::vector<std::pair<Poly, std::vector<unsigned>>> all;
  for (;;) {
    Poly d = Poly::one(f.prime());
    for (std::size_t i = 0; i < fs.size(); ++i) {
      for (unsigned k = 0; k < e[i]; ++k) d = d * fs[i].factor;
    }
    all.emplace_back(std::move(d), e);
    std::size_t i = 0;
    while (i < fs.size() && ++e[i] > fs[i].multiplicity) e[i++] = 0;
    if (i == fs.size()) break;
  }
  std::sort(all.begin(), all.end(),
            [](const auto& a, const auto& b) { return canonical_less(a.first, b.first); });
  for (auto& [d, ex] : all) {
    divisors_.push_back(std::move(d));
    exps_.push_back(std::move(ex));
  }
}

namespace {

struct CacheKey {
  std::uint32_t p;
  std::vector<Residue> c;
  bool operator<(const CacheKey& o) const { return p != o.p ? p < o.p : c < o.c; }
};

std::shared_mutex g_cache_mu;
std::map<CacheKey, Factorization> g_cache;

void require_nonzero(const Poly& f, const char* where) {
  if (f.is_zero()) throw std::invalid_argument(std::string(where) + ": zero polynomial");
}

mpz_class pow_p(std::uint32_t p, unsigned long e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), p, e);
  return r;
}

}  // namespace

Factorization factor_cached(const Poly& f) {
  CacheKey key{f.prime(), {f.coeffs().begin(), f.coeffs().end()}};
  {
    std::shared_lock lock(g_cache_mu);
    auto it = g_cache.find(key);
    if (it != g_cache.end()) return it->second;
  }
  Factorization fac = factor(f);
  std::unique_lock lock(g_cache_mu);
  g_cache[std::move(key)] = fac;
  return fac;
}

mpz_class phi_q(const Factorization& f) {
  mpz_class r = 1;
  for (const auto& fp : f.factors()) {
    const auto d = static_cast<unsigned long>(fp.factor.degree());
    mpz_class qd = pow_p(f.prime(), d);
    r *= pow_p(f.prime(), d * (fp.multiplicity - 1)) * (qd - 1);
  }
  return r;
}

int mu_q(const Factorization& f) {
  int sign = 1;
  for (const auto& fp : f.factors()) {
    if (fp.multiplicity > 1) return 0;
    sign = -sign;
  }
  return sign;
}

mpz_class w_count(const Factorization& f) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, f.size());
  return r;
}

mpz_class phi_q(const Poly& f) {
  require_nonzero(f, "phi_q");
  return phi_q(factor_cached(f.monic()));
}

int mu_q(const Poly& f) {
  require_nonzero(f, "mu_q");
  return mu_q(factor_cached(f.monic()));
}

mpz_class w_count(const Poly& f) {
  require_nonzero(f, "w_count");
  return w_count(factor_cached(f.monic()));
}

mpz_class poly_norm(const Poly& f) {
  require_nonzero(f, "poly_norm");
  return pow_p(f.prime(), static_cast<unsigned long>(f.degree()));
}

Poly f_sub_g(const Poly& f, const Poly& g) {
  require_nonzero(f, "f_sub_g");
  return exact_div(f, poly_gcd(f, g));
}

mpz_class t_sum(const Poly& f, const Poly& g) {
  require_nonzero(f, "t_sum");
  require_nonzero(g, "t_sum");
  mpq_class total = 0;
  for (DivisorIterator it(factor_cached(f.monic())); !it.done(); it.next()) {
    const Poly& t = it.current();
    Poly tg = f_sub_g(t, g);
    int mu = mu_q(tg);
    if (mu == 0) continue;
    total += mpq_class(phi_q(t), phi_q(tg));
  }
  total.canonicalize();
  if (total.get_den() != 1) throw std::logic_error("t_sum: non-integral total");
  return total.get_num();
}

mpz_class t_closed(const Poly& f, const Poly& g) {
  require_nonzero(f, "t_closed");
  require_nonzero(g, "t_closed");
  Poly d = poly_gcd(f, g);
  return poly_norm(d) * w_count(poly_gcd(f, f_sub_g(f, g)));
}

}  // namespace frobmod
