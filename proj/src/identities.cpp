// Copyright 2026 The frobmod Authors
// SPDX-License-Identifier: Apache-2.0

#include "frobmod/identities.hpp"

#include <map>
#include <random>
#include <sstream>

#include "frobmod/addchar.hpp"
#include "frobmod/arithfun.hpp"
#include "frobmod/curvesearch.hpp"
#include "frobmod/extfield.hpp"
#include "frobmod/freeness.hpp"

namespace frobmod {

namespace {

void fail(SuiteResult& r, const std::string& what) {
  if (r.failures++ == 0) r.detail = what;
}

std::string field_tag(const FieldCtx& c) {
  return "(p,n)=(" + std::to_string(c.p()) + "," + std::to_string(c.n()) + ")";
}

Poly random_poly(std::mt19937_64& rng, std::uint32_t p, int max_deg) {
  std::uniform_int_distribution<int> deg(0, max_deg);
  std::uniform_int_distribution<Residue> coef(0, p - 1), nz(1, p - 1);
  int d = deg(rng);
  std::vector<Residue> c(static_cast<std::size_t>(d) + 1);
  for (auto& x : c) x = coef(rng);
  c.back() = nz(rng);
  return Poly(p, std::move(c));
}

// Orders of every element, as polynomials indexed by element index.
std::vector<Poly> all_orders(const FieldPtr& ctx) {
  OrderClassifier cls(ctx, OrderClassifier::Kind::kElement);
  const std::size_t nf = cls.factor_count();
  auto e = cls.classify(0, static_cast<std::size_t>(ctx->size()));
  std::map<std::vector<std::uint8_t>, Poly> memo;
  std::vector<Poly> out;
  out.reserve(ctx->size());
  for (std::uint64_t i = 0; i < ctx->size(); ++i) {
    std::vector<std::uint8_t> key(e.begin() + i * nf, e.begin() + (i + 1) * nf);
    auto it = memo.find(key);
    if (it == memo.end()) it = memo.emplace(key, cls.order_poly(key)).first;
    out.push_back(it->second);
  }
  return out;
}

}  // namespace

FieldList small_fields(std::uint64_t max_q) {
  FieldList out;
  for (std::uint32_t p = 2; p <= max_q; ++p) {
    if (!is_prime_u32(p)) continue;
    std::uint64_t q = p;
    for (unsigned n = 1; q <= max_q; ++n, q *= p) {
      if (n >= 2 || p <= 31) out.emplace_back(p, n);
    }
  }
  return out;
}

SuiteResult suite_t_identity(std::uint64_t seed, std::uint64_t cases) {
  SuiteResult r{"divisor sum T(f,g) equals closed form", 0, 0, ""};
  std::mt19937_64 rng(seed);
  const std::uint32_t primes[] = {2, 3, 5};
  for (std::uint64_t i = 0; i < cases; ++i) {
    std::uint32_t p = primes[i % 3];
    Poly f = random_poly(rng, p, 8), g = random_poly(rng, p, 8);
    ++r.cases;
    if (t_sum(f, g) != t_closed(f, g)) fail(r, "f=" + f.pretty() + " g=" + g.pretty() + " p=" + std::to_string(p));
  }
  return r;
}

SuiteResult suite_count_by_order(const FieldList& fields) {
  SuiteResult r{"elements of each order counted by Phi", 0, 0, ""};
  for (auto [p, n] : fields) {
    auto ctx = FieldCtx::make(p, n);
    for (const auto& oc : count_by_order(ctx)) {
      ++r.cases;
      if (mpz_class(static_cast<unsigned long>(oc.count)) != phi_q(oc.divisor)) {
        fail(r, field_tag(*ctx) + " divisor " + oc.divisor.pretty());
      }
    }
  }
  return r;
}

SuiteResult suite_char_orders(const FieldList& fields) {
  SuiteResult r{"characters of each order counted by Phi", 0, 0, ""};
  for (auto [p, n] : fields) {
    auto ctx = FieldCtx::make(p, n);
    CharacterTable table(ctx);
    for (std::uint64_t a = 0; a < ctx->size(); ++a) {
      ExtElem e = ctx->from_index(a);
      ++r.cases;
      if (char_ord(e) != char_ord_definitional(e)) fail(r, field_tag(*ctx) + " a=" + e.to_csv());
    }
    for (DivisorIterator it(ctx->xn1_factors()); !it.done(); it.next()) {
      ++r.cases;
      if (mpz_class(static_cast<unsigned long>(table.order_count(it.current()))) != phi_q(it.current())) {
        fail(r, field_tag(*ctx) + " order " + it.current().pretty());
      }
    }
  }
  return r;
}

SuiteResult suite_indicator(const FieldList& fields) {
  SuiteResult r{"character-sum indicator equals freeness", 0, 0, ""};
  for (auto [p, n] : fields) {
    auto ctx = FieldCtx::make(p, n);
    CharacterTable table(ctx);
    auto specs = FreenessSpec::all(*ctx);
    for (std::uint64_t i = 0; i < ctx->size(); ++i) {
      ExtElem a = ctx->from_index(i);
      for (const auto& s : specs) {
        ++r.cases;
        mpq_class v = indicator_charsum(a, s, table);
        mpq_class want = is_fg_free(a, s) ? 1 : 0;
        if (v != want) {
          fail(r, field_tag(*ctx) + " alpha=" + a.to_csv() + " f=" + s.f.pretty() + " g=" + s.g.pretty() +
                      " value=" + v.get_str());
        }
      }
    }
  }
  return r;
}

SuiteResult suite_freeness_oracle(const FieldList& fields) {
  SuiteResult r{"gcd freeness test equals definitional oracle", 0, 0, ""};
  for (auto [p, n] : fields) {
    auto ctx = FieldCtx::make(p, n);
    auto orders = all_orders(ctx);
    for (const auto& s : FreenessSpec::all(*ctx)) {
      auto oracle = fg_free_oracle_table(*ctx, s);
      auto sq = s.squarefree();
      for (std::uint64_t i = 0; i < ctx->size(); ++i) {
        ++r.cases;
        bool fast = is_fg_free_given_order(*ctx, orders[i], s);
        bool fast_sq = is_fg_free_given_order(*ctx, orders[i], sq);
        if (fast != (oracle[i] != 0) || fast != fast_sq) {
          fail(r, field_tag(*ctx) + " alpha#" + std::to_string(i) + " f=" + s.f.pretty() + " g=" + s.g.pretty());
        }
      }
    }
  }
  return r;
}

SuiteResult suite_main_theorem(const FieldList& fields) {
  SuiteResult r{"pair counts inside the main-theorem interval", 0, 0, ""};
  for (auto [p, n] : fields) {
    auto ctx = FieldCtx::make(p, n);
    const FieldCtx& c = *ctx;
    ExtPoly h = ExtPoly::lift(c, Poly::x(p));
    std::vector<ExtPoly> hs;
    for (std::size_t d = 2; d <= 4; ++d) {
      hs.push_back(ExtPoly::lift(c, Poly::monomial(p, d)));
      hs.push_back(ExtPoly::lift(c, Poly::monomial(p, d) + Poly::x(p) + Poly::one(p)));
    }
    if (n > 1) hs.push_back(ExtPoly::monomial(c.one(), 3) + ExtPoly::monomial(c.from_index(p), 1));
    auto specs = FreenessSpec::all(c);
    for (const auto& H : hs) {
      if (is_pair_singular(h, H)) continue;
      const int maxdeg = pair_max_degree(h, H);
      std::vector<std::vector<std::uint8_t>> free1(specs.size()), free2(specs.size());
      {
        OrderClassifier cls(ctx, OrderClassifier::Kind::kElement);
        const std::size_t nf = cls.factor_count();
        std::vector<ExtElem> hv, Hv;
        for (std::uint64_t y = 0; y < c.size(); ++y) {
          hv.push_back(h.eval(c.from_index(y)));
          Hv.push_back(H.eval(c.from_index(y)));
        }
        auto e1 = cls.classify(hv), e2 = cls.classify(Hv);
        for (std::size_t s = 0; s < specs.size(); ++s) {
          free1[s].resize(c.size());
          free2[s].resize(c.size());
          for (std::uint64_t y = 0; y < c.size(); ++y) {
            std::span<const std::uint8_t> k1(&e1[y * nf], nf), k2(&e2[y * nf], nf);
            free1[s][y] = is_fg_free_given_order(c, cls.order_poly(k1), specs[s]);
            free2[s][y] = is_fg_free_given_order(c, cls.order_poly(k2), specs[s]);
          }
        }
      }
      for (std::size_t a = 0; a < specs.size(); ++a) {
        for (std::size_t b = 0; b < specs.size(); ++b) {
          std::uint64_t count = 0;
          for (std::uint64_t y = 0; y < c.size(); ++y) count += free1[a][y] && free2[b][y];
          BoundInterval bi = main_bound(c, specs[a], specs[b], maxdeg);
          ++r.cases;
          bool ok = bi.contains(mpz_class(static_cast<unsigned long>(count)));
          if (bi.lower_positive() && count == 0) ok = false;
          if (!ok) {
            fail(r, field_tag(c) + " H=" + H.pretty() + " s1=(" + specs[a].f.pretty() + "," + specs[a].g.pretty() +
                        ") s2=(" + specs[b].f.pretty() + "," + specs[b].g.pretty() + ") N=" + std::to_string(count) +
                        " center=" + bi.center.get_str());
          }
        }
      }
    }
  }
  return r;
}

SuiteResult suite_weil(std::uint64_t seed, std::uint64_t cases, std::uint64_t max_q) {
  SuiteResult r{"Weil bound on random nonsingular polynomials", 0, 0, ""};
  std::mt19937_64 rng(seed);
  std::vector<FieldPtr> ctxs;
  for (auto [p, n] : small_fields(max_q)) {
    if (n >= 2 && p <= 13) ctxs.push_back(FieldCtx::make(p, n));
  }
  std::uniform_int_distribution<std::size_t> pick(0, ctxs.size() - 1);
  std::uniform_int_distribution<int> deg(1, 6);
  while (r.cases < cases) {
    const FieldCtx& c = *ctxs[pick(rng)];
    std::uniform_int_distribution<std::uint64_t> elem(0, c.size() - 1), nz(1, c.size() - 1);
    int d = deg(rng);
    std::vector<ExtElem> coeffs;
    for (int i = 0; i < d; ++i) coeffs.push_back(c.from_index(elem(rng)));
    coeffs.push_back(c.from_index(nz(rng)));
    ExtPoly P(&c, std::move(coeffs));
    ExtElem a = c.from_index(nz(rng));
    if (is_singular(P.scaled(a))) continue;
    ++r.cases;
    if (!weil_check(a, P)) fail(r, field_tag(c) + " P=" + P.pretty() + " a=" + a.to_csv());
  }
  return r;
}

SuiteResult suite_linear_curves(const FieldList& fields) {
  SuiteResult r{"linear curves: nonexistence and construction", 0, 0, ""};
  for (auto [p, n] : fields) {
    auto ctx = FieldCtx::make(p, n);
    for (Residue a = 1; a < p; ++a) {
      for (Residue b = 0; b < p; ++b) {
        if (b != 0 && n % p != 0) continue;
        ++r.cases;
        if (!linear_no_normal_point(ctx, a, b)) {
          fail(r, field_tag(*ctx) + " normal point on y^p-y=" + std::to_string(a) + "x+" + std::to_string(b));
        }
      }
    }
    if (n % p == 0) continue;
    const Poly target = exact_div(ctx->xn1(), Poly::xn_minus_one(p, 1));
    for (std::uint64_t i = 0; i < ctx->size(); ++i) {
      ExtElem alpha = ctx->from_index(i);
      if (!is_normal(alpha)) continue;
      ++r.cases;
      LinearPoint lp = construct_linear_point(alpha);
      ExtElem rhs = lp.x0 + ctx->from_residue(lp.b);
      bool ok = lp.b != 0 && lp.y0.pow(p) - lp.y0 == rhs && is_normal(lp.x0) && is_normal(lp.y0) &&
                ord(rhs) == target;
      if (!ok) fail(r, field_tag(*ctx) + " alpha=" + alpha.to_csv());
    }
  }
  return r;
}

std::vector<SuiteResult> run_identity_suites(const IdentityConfig& cfg) {
  const FieldList six = {{2, 2}, {2, 4}, {2, 5}, {3, 2}, {3, 3}, {5, 2}};
  const FieldList indicator = {{2, 4}, {3, 3}, {5, 2}};
  const FieldList theorem = {{2, 3}, {2, 4}, {2, 5}, {2, 6}, {3, 2}, {3, 3}, {5, 2}, {7, 2}};
  auto oracle_fields = small_fields(cfg.oracle_max_q);
  std::vector<SuiteResult> out;
  out.push_back(suite_t_identity(cfg.seed, cfg.t_cases));
  out.push_back(suite_count_by_order(six));
  out.push_back(suite_char_orders(six));
  out.push_back(suite_indicator(indicator));
  out.push_back(suite_freeness_oracle(oracle_fields));
  out.push_back(suite_main_theorem(theorem));
  out.push_back(suite_weil(cfg.seed + 1, cfg.weil_cases, 4096));
  out.push_back(suite_linear_curves(oracle_fields));
  return out;
}

}  // namespace frobmod
