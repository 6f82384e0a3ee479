// Copyright 2026 The frobmod Authors
// SPDX-License-Identifier: Apache-2.0

#include "frobmod/curvesearch.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

#include "frobmod/freeness.hpp"

namespace frobmod {

namespace {

struct OrderSets {
  std::vector<std::uint8_t> normal;  // ord = x^n - 1
  std::vector<std::uint8_t> target;  // ord = (x^n - 1)/(x - 1)
};

OrderSets classify_field(const FieldCtx& ctx) {
  FieldPtr shared = FieldCtx::make(ctx.p(), ctx.n(), ctx.modulus());
  OrderClassifier cls(shared, OrderClassifier::Kind::kElement);
  const std::size_t nf = cls.factor_count();
  auto full = cls.exponents_of(ctx.xn1());
  auto tgt = cls.exponents_of(exact_div(ctx.xn1(), Poly::xn_minus_one(ctx.p(), 1)));
  OrderSets s;
  s.normal.resize(ctx.size());
  s.target.resize(ctx.size());
  constexpr std::uint64_t kChunk = 4096;
  for (std::uint64_t first = 0; first < ctx.size(); first += kChunk) {
    const auto cnt = static_cast<std::size_t>(std::min(kChunk, ctx.size() - first));
    auto e = cls.classify(first, cnt);
    for (std::size_t i = 0; i < cnt; ++i) {
      s.normal[first + i] = std::equal(full.begin(), full.end(), e.begin() + i * nf);
      s.target[first + i] = std::equal(tgt.begin(), tgt.end(), e.begin() + i * nf);
    }
  }
  return s;
}

// Index arithmetic on encodings sum c_i p^i.
class IndexAdder {
 public:
  IndexAdder(std::uint32_t p, unsigned n) : p_(p) {
    if (p == 2) return;
    unsigned nlo = n / 2;
    lo_ = 1;
    for (unsigned i = 0; i < nlo; ++i) lo_ *= p;
    hi_ = 1;
    for (unsigned i = nlo; i < n; ++i) hi_ *= p;
    lo_tab_ = table(p, nlo);
    hi_tab_ = table(p, n - nlo);
  }

  std::uint64_t operator()(std::uint64_t u, std::uint64_t v) const {
    if (p_ == 2) return u ^ v;
    return lo_tab_[(u % lo_) * lo_ + v % lo_] + hi_tab_[(u / lo_) * hi_ + v / lo_] * lo_;
  }

 private:
  static std::vector<std::uint32_t> table(std::uint32_t p, unsigned digits) {
    std::uint64_t m = 1;
    for (unsigned i = 0; i < digits; ++i) m *= p;
    std::vector<std::uint32_t> t(m * m);
    for (std::uint64_t a = 0; a < m; ++a) {
      for (std::uint64_t b = 0; b < m; ++b) {
        std::uint64_t x = a, y = b, r = 0, w = 1;
        for (unsigned i = 0; i < digits; ++i) {
          r += ((x % p + y % p) % p) * w;
          x /= p;
          y /= p;
          w *= p;
        }
        t[a * m + b] = static_cast<std::uint32_t>(r);
      }
    }
    return t;
  }

  std::uint32_t p_;
  std::uint64_t lo_ = 1, hi_ = 1;
  std::vector<std::uint32_t> lo_tab_, hi_tab_;
};

}  // namespace

CurveSpec CurveSpec::make(const ExtPoly& f) {
  CurveSpec s;
  s.f = f;
  const std::uint32_t p = f.ctx().p();
  const int d = f.degree();
  s.degree_in_scope = d > 1 && d <= static_cast<int>(p) + 1;
  bool excluded = d <= static_cast<int>(p);
  for (int i = 2; i <= d; ++i) {
    if (i != static_cast<int>(p) && !f.coeff(static_cast<std::size_t>(i)).is_zero()) excluded = false;
  }
  s.excluded_form = excluded;
  s.nonsingular = !is_singular(f).has_value();
  return s;
}

std::optional<NormalPoint> has_normal_point(const CurveSpec& spec) {
  const FieldCtx& ctx = spec.f.ctx();
  ctx.require_enumerable(std::uint64_t{1} << 22, "has_normal_point");
  OrderSets sets = classify_field(ctx);
  for (std::uint64_t zi = 0; zi < ctx.size(); ++zi) {
    if (!sets.normal[zi]) continue;
    ExtElem z = ctx.from_index(zi);
    ExtElem w = spec.f.eval(z);
    if (!sets.target[w.index()]) continue;
    auto y = solve_artin_schreier(w);
    if (!y) continue;
    for (Residue t = 0; t < ctx.p(); ++t) {
      ExtElem cand = *y + ctx.from_residue(t);
      if (sets.normal[cand.index()]) return NormalPoint{z, cand};
    }
  }
  return std::nullopt;
}

double exception_search_size(std::uint32_t p, unsigned n, unsigned deg) {
  const double q = std::pow(static_cast<double>(p), static_cast<double>(n));
  return (q - 1) * std::pow(q, static_cast<double>(deg));
}

ExceptionReport enumerate_exceptions(std::uint32_t p, unsigned n, unsigned deg,
                                     const ExceptionSearchOptions& opts) {
  FieldPtr ctx = FieldCtx::make(p, n);
  if (deg < 2 || deg > p + 1) throw std::invalid_argument("enumerate_exceptions: need 1 < deg <= p + 1");
  if (opts.shard_count == 0 || opts.shard_index >= opts.shard_count) {
    throw std::invalid_argument("enumerate_exceptions: invalid shard");
  }
  const std::uint64_t q = ctx->size();
  const double total_d = exception_search_size(p, n, deg) / static_cast<double>(q);
  if (total_d > 9e18) throw BudgetExceeded("enumerate_exceptions: search space exceeds 64-bit indexing");
  std::uint64_t outer_total = q - 1;
  for (unsigned i = 1; i < deg; ++i) outer_total *= q;
  const auto lo = static_cast<std::uint64_t>(
      static_cast<unsigned __int128>(outer_total) * opts.shard_index / opts.shard_count);
  const auto hi = static_cast<std::uint64_t>(
      static_cast<unsigned __int128>(outer_total) * (opts.shard_index + 1) / opts.shard_count);
  const double work = static_cast<double>(hi - lo) * static_cast<double>(q);
  if (work > opts.budget) {
    throw BudgetExceeded("enumerate_exceptions: " + std::to_string(work) +
                         " candidate polynomials exceed the budget of " + std::to_string(opts.budget));
  }
  ctx->require_enumerable(std::uint64_t{1} << 22, "enumerate_exceptions");

  OrderSets sets = classify_field(*ctx);
  std::vector<std::uint64_t> normals;
  for (std::uint64_t i = 0; i < q; ++i) {
    if (sets.normal[i]) normals.push_back(i);
  }
  const std::size_t nn = normals.size();
  IndexAdder add(p, n);

  // zpow_tab[(z * (deg + 1) + i) * q + c] = index of c z^i, when it fits.
  const bool full_table = static_cast<double>(nn) * (deg + 1) * static_cast<double>(q) <= double(1 << 25);
  std::vector<std::uint32_t> zpow_tab;
  // lin_tab[((z * (deg + 1) + i) * n + j) * p + d] = index of d x^j z^i otherwise.
  std::vector<std::uint32_t> lin_tab;
  {
    std::vector<std::vector<ExtElem>> zp(nn);
    for (std::size_t zi = 0; zi < nn; ++zi) {
      ExtElem z = ctx->from_index(normals[zi]);
      ExtElem w = ctx->one();
      for (unsigned i = 0; i <= deg; ++i) {
        zp[zi].push_back(w);
        w = w * z;
      }
    }
    if (full_table) {
      zpow_tab.resize(nn * (deg + 1) * q);
      for (std::size_t zi = 0; zi < nn; ++zi) {
        for (unsigned i = 0; i <= deg; ++i) {
          for (std::uint64_t c = 0; c < q; ++c) {
            zpow_tab[(zi * (deg + 1) + i) * q + c] =
                static_cast<std::uint32_t>((ctx->from_index(c) * zp[zi][i]).index());
          }
        }
      }
    } else {
      lin_tab.resize(nn * (deg + 1) * n * p);
      for (std::size_t zi = 0; zi < nn; ++zi) {
        for (unsigned i = 0; i <= deg; ++i) {
          ExtElem xj = zp[zi][i];
          ExtElem xgen = ctx->from_index(n > 1 ? p : 0);
          for (unsigned j = 0; j < n; ++j) {
            for (Residue d = 0; d < p; ++d) {
              lin_tab[((zi * (deg + 1) + i) * n + j) * p + d] = static_cast<std::uint32_t>(xj.scaled(d).index());
            }
            xj = xj * xgen;
          }
        }
      }
    }
  }
  auto mul_z = [&](std::size_t zi, unsigned i, std::uint64_t c) -> std::uint64_t {
    if (full_table) return zpow_tab[(zi * (deg + 1) + i) * q + c];
    std::uint64_t acc = 0;
    const std::uint32_t* base = &lin_tab[(zi * (deg + 1) + i) * n * p];
    for (unsigned j = 0; j < n; ++j) {
      acc = add(acc, base[j * p + c % p]);
      c /= p;
    }
    return acc;
  };

  // p = 2 with q <= 64: bit c0 of tmask[v] is set when c0 + v lies in the target set.
  const bool use_mask = p == 2 && q <= 64;
  std::vector<std::uint64_t> tmask;
  if (use_mask) {
    tmask.assign(q, 0);
    for (std::uint64_t v = 0; v < q; ++v) {
      for (std::uint64_t c0 = 0; c0 < q; ++c0) {
        if (sets.target[c0 ^ v]) tmask[v] |= std::uint64_t{1} << c0;
      }
    }
  }
  const std::uint64_t all_bits = q == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << q) - 1);

  const unsigned jobs = std::max(1u, opts.jobs);
  struct Partial {
    std::vector<ExceptionRecord> recs;
    std::uint64_t examined = 0;
  };
  std::vector<Partial> parts(jobs);
  auto worker = [&](unsigned w) {
    const std::uint64_t a = lo + (hi - lo) * w / jobs, b = lo + (hi - lo) * (w + 1) / jobs;
    std::vector<std::uint64_t> c(deg + 1, 0), hi_part(nn), part(nn);
    std::uint64_t rest_loaded = ~std::uint64_t{0};
    bool excluded = false;
    for (std::uint64_t o = a; o < b; ++o) {
      const std::uint64_t rest = o / q;
      c[1] = o % q;
      if (rest != rest_loaded) {
        std::uint64_t r = rest;
        for (unsigned i = 2; i < deg; ++i) {
          c[i] = r % q;
          r /= q;
        }
        c[deg] = r + 1;
        excluded = deg == p;
        for (unsigned i = 2; i < deg && excluded; ++i) {
          if (c[i] != 0) excluded = false;
        }
        for (std::size_t zi = 0; zi < nn; ++zi) {
          std::uint64_t acc = 0;
          for (unsigned i = 2; i <= deg; ++i) acc = add(acc, mul_z(zi, i, c[i]));
          hi_part[zi] = acc;
        }
        rest_loaded = rest;
      }
      if (excluded) continue;
      for (std::size_t zi = 0; zi < nn; ++zi) part[zi] = add(hi_part[zi], mul_z(zi, 1, c[1]));
      parts[w].examined += q;
      if (use_mask) {
        std::uint64_t good = 0;
        for (std::size_t zi = 0; zi < nn; ++zi) good |= tmask[part[zi]];
        std::uint64_t bad = ~good & all_bits;
        while (bad) {
          int c0 = __builtin_ctzll(bad);
          bad &= bad - 1;
          c[0] = static_cast<std::uint64_t>(c0);
          parts[w].recs.push_back({c});
        }
      } else {
        for (std::uint64_t c0 = 0; c0 < q; ++c0) {
          bool hit = false;
          for (std::size_t zi = 0; zi < nn && !hit; ++zi) hit = sets.target[add(part[zi], c0)];
          if (!hit) {
            c[0] = c0;
            parts[w].recs.push_back({c});
          }
        }
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < jobs; ++w) pool.emplace_back(worker, w);
  worker(0);
  for (auto& t : pool) t.join();

  ExceptionReport rep;
  rep.p = p;
  rep.n = n;
  rep.deg = deg;
  rep.outer_begin = lo;
  rep.outer_end = hi;
  rep.outer_total = outer_total;
  rep.complete = lo == 0 && hi == outer_total;
  rep.normal_count = nn;
  rep.target_count = static_cast<std::uint64_t>(std::count(sets.target.begin(), sets.target.end(), 1));
  for (auto& part : parts) {
    rep.polynomials_examined += part.examined;
    rep.records.insert(rep.records.end(), part.recs.begin(), part.recs.end());
  }
  std::sort(rep.records.begin(), rep.records.end(), [](const ExceptionRecord& x, const ExceptionRecord& y) {
    return std::lexicographical_compare(x.coeffs.rbegin(), x.coeffs.rend(), y.coeffs.rbegin(), y.coeffs.rend());
  });
  return rep;
}

bool linear_no_normal_point(const FieldPtr& ctx, Residue a, Residue b) {
  if (a % ctx->p() == 0) throw std::invalid_argument("linear_no_normal_point: a must be nonzero");
  ctx->require_enumerable(std::uint64_t{1} << 20, "linear_no_normal_point");
  OrderSets sets = classify_field(*ctx);
  const ExtElem shift = ctx->from_residue(b);
  for (std::uint64_t xi = 0; xi < ctx->size(); ++xi) {
    if (!sets.normal[xi]) continue;
    ExtElem rhs = ctx->from_index(xi).scaled(a % ctx->p()) + shift;
    auto y = solve_artin_schreier(rhs);
    if (!y) continue;
    for (Residue t = 0; t < ctx->p(); ++t) {
      if (sets.normal[(*y + ctx->from_residue(t)).index()]) return false;
    }
  }
  return true;
}

LinearPoint construct_linear_point(const ExtElem& alpha) {
  const FieldCtx& ctx = alpha.ctx();
  const std::uint32_t p = ctx.p();
  if (ctx.n() % p == 0) throw std::invalid_argument("construct_linear_point: p divides n");
  if (!is_normal(alpha)) throw std::invalid_argument("construct_linear_point: alpha is not normal");
  const Residue delta = abs_trace(alpha);
  const Residue inv_n = inv_mod(ctx.n() % p, p);
  const Residue shift = mul_mod(delta, inv_n, p);
  LinearPoint out;
  out.b = neg_mod(shift, p);
  out.x0 = alpha;
  ExtElem rhs = alpha + ctx.from_residue(out.b);
  auto beta = solve_artin_schreier(rhs);
  if (!beta) throw std::logic_error("construct_linear_point: x + b has nonzero trace at alpha");
  const Residue avoid = neg_mod(mul_mod(inv_n, abs_trace(*beta), p), p);
  Residue t0 = avoid == 0 ? 1 : 0;
  out.y0 = *beta + ctx.from_residue(t0);
  if (!is_normal(out.y0)) throw std::logic_error("construct_linear_point: constructed y0 is not normal");
  return out;
}

}  // namespace frobmod
