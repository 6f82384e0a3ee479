// Copyright 2026 The frobmod Authors
// SPDX-License-Identifier: Apache-2.0

#include "frobmod/freeness.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>

#include "frobmod/arithfun.hpp"

namespace frobmod {

namespace {

mpq_class p_power(std::uint32_t p, long e) {
  mpz_class m;
  mpz_ui_pow_ui(m.get_mpz_t(), p, static_cast<unsigned long>(std::labs(e)));
  if (e >= 0) return mpq_class(m);
  mpq_class r(1, m);
  r.canonicalize();
  return r;
}

Poly radical_of(const Poly& f) {
  if (f.degree() <= 0) return Poly::one(f.prime());
  return factor_cached(f.monic()).radical();
}

std::vector<std::uint8_t> annihilated(const FieldCtx& ctx, const Poly& t) {
  Matrix m = compose_matrix(ctx, t);
  std::vector<std::uint8_t> out(ctx.size());
  for (std::uint64_t i = 0; i < ctx.size(); ++i) {
    auto img = m.apply(ctx.from_index(i).coord_vector());
    out[i] = std::all_of(img.begin(), img.end(), [](Residue x) { return x == 0; });
  }
  return out;
}

}  // namespace

FreenessSpec FreenessSpec::make(const FieldCtx& ctx, const Poly& f, const Poly& g) {
  if (f.is_zero() || g.is_zero()) throw std::invalid_argument("FreenessSpec: zero polynomial");
  if (f.prime() != ctx.p() || g.prime() != ctx.p()) {
    throw std::invalid_argument("FreenessSpec: characteristic mismatch");
  }
  FreenessSpec s;
  s.f = f.monic();
  s.g = g.monic();
  if (!ctx.xn1().divisible_by(s.g)) throw std::invalid_argument("FreenessSpec: g does not divide x^n-1");
  if (!exact_div(ctx.xn1(), s.g).divisible_by(s.f)) {
    throw std::invalid_argument("FreenessSpec: f does not divide (x^n-1)/g");
  }
  s.f_sqfree = radical_of(s.f);
  return s;
}

std::vector<FreenessSpec> FreenessSpec::all(const FieldCtx& ctx) {
  std::vector<FreenessSpec> out;
  for (DivisorIterator gi(ctx.xn1_factors()); !gi.done(); gi.next()) {
    const Poly& g = gi.current();
    Poly rest = exact_div(ctx.xn1(), g);
    Factorization rf = rest.degree() > 0 ? factor_cached(rest) : Factorization(ctx.p(), {});
    for (DivisorIterator fi(rf); !fi.done(); fi.next()) out.push_back(make(ctx, fi.current(), g));
  }
  return out;
}

FreenessSpec FreenessSpec::squarefree() const {
  FreenessSpec s = *this;
  s.f = f_sqfree;
  return s;
}

bool is_fg_free_given_order(const FieldCtx& ctx, const Poly& order, const FreenessSpec& spec) {
  Poly co = exact_div(ctx.xn1(), order);
  return poly_gcd(spec.f * spec.g, co) == spec.g;
}

bool is_fg_free(const ExtElem& alpha, const FreenessSpec& spec) {
  return is_fg_free_given_order(alpha.ctx(), ord(alpha), spec);
}

std::vector<std::uint8_t> fg_free_oracle_table(const FieldCtx& ctx, const FreenessSpec& spec) {
  ctx.require_enumerable(std::uint64_t{1} << 14, "fg_free_oracle_table");
  auto in_ann = annihilated(ctx, exact_div(ctx.xn1(), spec.g));
  std::vector<std::uint8_t> hit(ctx.size(), 0);
  for (DivisorIterator it(factor_cached(spec.f)); !it.done(); it.next()) {
    const Poly& f0 = it.current();
    if (f0.is_one()) continue;
    Matrix m = compose_matrix(ctx, f0);
    for (std::uint64_t b = 0; b < ctx.size(); ++b) {
      if (!in_ann[b]) continue;
      hit[ExtElem(&ctx, m.apply(ctx.from_index(b).coord_vector())).index()] = 1;
    }
  }
  std::vector<std::uint8_t> out(ctx.size());
  for (std::uint64_t i = 0; i < ctx.size(); ++i) out[i] = in_ann[i] && !hit[i];
  return out;
}

bool is_fg_free_oracle(const ExtElem& alpha, const FreenessSpec& spec) {
  return fg_free_oracle_table(alpha.ctx(), spec)[alpha.index()] != 0;
}

CharacterTable::CharacterTable(FieldPtr ctx)
    : ctx_(std::move(ctx)), cls_(ctx_, OrderClassifier::Kind::kCharacter) {
  ctx_->require_enumerable(std::uint64_t{1} << 12, "CharacterTable");
  const std::size_t nf = cls_.factor_count();
  auto exps = cls_.classify(0, static_cast<std::size_t>(ctx_->size()));
  for (std::uint64_t a = 0; a < ctx_->size(); ++a) {
    std::vector<std::uint8_t> key(exps.begin() + a * nf, exps.begin() + (a + 1) * nf);
    groups_[key].push_back(ctx_->from_index(a));
  }
}

CycSum CharacterTable::order_sum(const Poly& t, const ExtElem& alpha) const {
  CycSum s(ctx_->p());
  auto it = groups_.find(cls_.exponents_of(t));
  if (it == groups_.end()) return s;
  for (const ExtElem& a : it->second) s.add_zeta_power(abs_trace(a * alpha));
  return s;
}

std::uint64_t CharacterTable::order_count(const Poly& t) const {
  auto it = groups_.find(cls_.exponents_of(t));
  return it == groups_.end() ? 0 : it->second.size();
}

mpq_class indicator_charsum(const ExtElem& alpha, const FreenessSpec& spec, const CharacterTable& table) {
  const Poly fg = spec.f * spec.g;
  CycSum total(alpha.ctx().p());
  Factorization fac = fg.degree() > 0 ? factor_cached(fg) : Factorization(fg.prime(), {});
  for (DivisorIterator it(fac); !it.done(); it.next()) {
    const Poly& t = it.current();
    Poly tg = f_sub_g(t, spec.g);
    int mu = mu_q(tg);
    if (mu == 0) continue;
    mpq_class w(mu, phi_q(tg));
    w.canonicalize();
    total += table.order_sum(t, alpha).scaled(w);
  }
  mpq_class lead(phi_q(spec.f), poly_norm(fg));
  lead.canonicalize();
  CycSum scaled = total.scaled(lead);
  if (!scaled.is_rational()) throw std::logic_error("indicator_charsum: value is not rational");
  return scaled.value();
}

mpq_class indicator_charsum(const ExtElem& alpha, const FreenessSpec& spec) {
  // The table needs shared ownership of a context; rebuild one with the same modulus.
  FieldPtr ctx = FieldCtx::make(alpha.ctx().p(), alpha.ctx().n(), alpha.ctx().modulus());
  CharacterTable table(ctx);
  return indicator_charsum(ctx->from_coords(alpha.coord_vector()), spec, table);
}

std::optional<SingularWitness> is_singular(const ExtPoly& poly) {
  const FieldCtx& ctx = poly.ctx();
  const std::uint32_t p = ctx.p();
  ExtPoly rest = poly;
  ExtPoly r(&ctx);
  while (rest.degree() >= 1) {
    const auto d = static_cast<std::size_t>(rest.degree());
    if (d % p != 0) return std::nullopt;
    ExtElem b = rest.lead().pth_root();
    ExtPoly term = ExtPoly::monomial(b, d / p);
    r += term;
    rest -= ExtPoly::monomial(rest.lead(), d);
    rest += term;
  }
  return SingularWitness{r, rest.coeff(0)};
}

ExtPoly expand_witness(const SingularWitness& w) {
  const FieldCtx& ctx = w.delta.ctx();
  ExtPoly out(&ctx);
  for (int i = 0; i <= w.r.degree(); ++i) {
    ExtElem c = w.r.coeff(static_cast<std::size_t>(i));
    if (c.is_zero()) continue;
    out += ExtPoly::monomial(c.pow(ctx.p()), static_cast<std::size_t>(i) * ctx.p());
    out -= ExtPoly::monomial(c, static_cast<std::size_t>(i));
  }
  out += ExtPoly::monomial(w.delta, 0);
  return out;
}

namespace {

bool is_x(const ExtPoly& h) { return h.degree() == 1 && h.coeff(0).is_zero() && h.coeff(1).is_one(); }

// Lowest nonzero coordinate equals want.
bool normalized(const ExtElem& e, Residue want) {
  for (Residue c : e.coords()) {
    if (c != 0) return c == want;
  }
  return false;
}

}  // namespace

std::optional<std::pair<ExtElem, ExtElem>> is_pair_singular(const ExtPoly& h, const ExtPoly& H) {
  const FieldCtx& ctx = h.ctx();
  const Residue minus_one = ctx.p() - 1;
  if (is_x(h)) {
    // a x + b H is singular iff peeling b H leaves c1 x + c0 and a = -c1.
    for (std::uint64_t bi = 1; bi < ctx.size(); ++bi) {
      ExtElem b = ctx.from_index(bi);
      if (!normalized(b, minus_one)) continue;
      ExtPoly bh = H.scaled(b);
      ExtPoly rest = bh;
      while (rest.degree() >= 2) {
        const auto d = static_cast<std::size_t>(rest.degree());
        if (d % ctx.p() != 0) break;
        ExtElem root = rest.lead().pth_root();
        rest -= ExtPoly::monomial(rest.lead(), d);
        rest += ExtPoly::monomial(root, d / ctx.p());
      }
      if (rest.degree() <= 1) return std::make_pair(-rest.coeff(1), b);
    }
    return std::nullopt;  // b = 0 leaves a x, never singular
  }
  ctx.require_enumerable(std::uint64_t{1} << 11, "is_pair_singular");
  for (std::uint64_t bi = 1; bi < ctx.size(); ++bi) {
    ExtElem b = ctx.from_index(bi);
    if (!normalized(b, minus_one)) continue;
    ExtPoly bh = H.scaled(b);
    for (std::uint64_t ai = 0; ai < ctx.size(); ++ai) {
      ExtElem a = ctx.from_index(ai);
      if (is_singular(h.scaled(a) + bh)) return std::make_pair(a, b);
    }
  }
  for (std::uint64_t ai = 1; ai < ctx.size(); ++ai) {
    ExtElem a = ctx.from_index(ai);
    if (!normalized(a, 1)) continue;
    if (is_singular(h.scaled(a))) return std::make_pair(a, ctx.zero());
  }
  return std::nullopt;
}

int pair_max_degree(const ExtPoly& h, const ExtPoly& H) { return std::max(h.degree(), H.degree()); }

std::uint64_t count_free_pairs(const ExtPoly& h, const ExtPoly& H, const FreenessSpec& s1,
                               const FreenessSpec& s2, unsigned jobs) {
  const FieldCtx& ctx = h.ctx();
  ctx.require_enumerable(std::uint64_t{1} << 22, "count_free_pairs");
  FieldPtr shared = FieldCtx::make(ctx.p(), ctx.n(), ctx.modulus());
  OrderClassifier cls(shared, OrderClassifier::Kind::kElement);
  const std::size_t nf = cls.factor_count();
  jobs = std::max(1u, jobs);
  std::vector<std::uint64_t> partial(jobs, 0);
  auto worker = [&](unsigned w) {
    const std::uint64_t lo = ctx.size() * w / jobs, hi = ctx.size() * (w + 1) / jobs;
    std::map<std::vector<std::uint8_t>, bool> memo1, memo2;
    auto free_for = [&](std::map<std::vector<std::uint8_t>, bool>& memo, const std::uint8_t* e,
                        const FreenessSpec& s) {
      std::vector<std::uint8_t> key(e, e + nf);
      auto it = memo.find(key);
      if (it != memo.end()) return it->second;
      bool v = is_fg_free_given_order(*shared, cls.order_poly(key), s);
      memo.emplace(std::move(key), v);
      return v;
    };
    constexpr std::uint64_t kChunk = 2048;
    for (std::uint64_t first = lo; first < hi; first += kChunk) {
      const std::uint64_t cnt = std::min(kChunk, hi - first);
      std::vector<ExtElem> hv, Hv;
      for (std::uint64_t i = 0; i < cnt; ++i) {
        ExtElem y = ctx.from_index(first + i);
        hv.push_back(shared->from_coords(h.eval(y).coord_vector()));
        Hv.push_back(shared->from_coords(H.eval(y).coord_vector()));
      }
      auto e1 = cls.classify(hv);
      auto e2 = cls.classify(Hv);
      for (std::uint64_t i = 0; i < cnt; ++i) {
        if (free_for(memo1, &e1[i * nf], s1) && free_for(memo2, &e2[i * nf], s2)) ++partial[w];
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < jobs; ++w) pool.emplace_back(worker, w);
  worker(0);
  for (auto& t : pool) t.join();
  std::uint64_t total = 0;
  for (auto v : partial) total += v;
  return total;
}

mpq_class BoundInterval::radius_sq() const {
  return radius_rational * radius_rational * p_power(p, static_cast<long>(half_exponent));
}

double BoundInterval::radius_approx() const {
  return radius_rational.get_d() * std::pow(static_cast<double>(p), static_cast<double>(half_exponent) / 2.0);
}

bool BoundInterval::contains(const mpz_class& value) const {
  mpq_class d = mpq_class(value) - center;
  return d * d <= radius_sq();
}

bool BoundInterval::lower_positive() const { return center > 0 && center * center > radius_sq(); }

BoundInterval main_bound(const FieldCtx& ctx, const FreenessSpec& s1, const FreenessSpec& s2, int maxdeg) {
  if (maxdeg < 1) throw std::invalid_argument("main_bound: maxdeg must be positive");
  const std::uint32_t p = ctx.p();
  const long n = ctx.n();
  const long d1 = (s1.f * s2.f * s1.g * s2.g).degree();
  const long dgg = (s1.g * s2.g).degree();
  mpq_class phis = mpq_class(phi_q(s1.f) * phi_q(s2.f));
  BoundInterval b;
  b.p = p;
  b.center = phis * p_power(p, n - d1);
  b.radius_rational = phis * (maxdeg - 1) * mpq_class(w_count(s1.f) * w_count(s2.f)) * p_power(p, dgg - d1);
  b.half_exponent = static_cast<unsigned long>(n);
  return b;
}

BoundInterval sieve_bound(const FieldCtx& ctx, const FreenessSpec& s1, const FreenessSpec& s2, int maxdeg,
                          const SievePlan& plan) {
  if (plan.delta <= 0) throw std::invalid_argument("sieve_bound: delta must be positive");
  if (maxdeg < 1) throw std::invalid_argument("sieve_bound: maxdeg must be positive");
  const std::uint32_t p = ctx.p();
  auto check = [&](const Poly& core, const std::vector<Poly>& sieved, const Poly& target) {
    Poly prod = core.monic();
    for (const auto& s : sieved) prod = prod * s;
    if (prod != radical_of(target)) throw std::invalid_argument("sieve_bound: plan does not match the freeness pair");
  };
  check(plan.k, plan.sieved_f, s1.f);
  check(plan.big_k, plan.sieved_F, s2.f);
  const long n = ctx.n();
  const long d1 = (plan.k * plan.big_k * s1.g * s2.g).degree();
  const long dgg = (s1.g * s2.g).degree();
  mpq_class scale = plan.delta * mpq_class(phi_q(plan.k) * phi_q(plan.big_k));
  mpq_class uv(static_cast<long>(plan.u() + plan.v()));
  BoundInterval b;
  b.p = p;
  b.center = scale * p_power(p, n - d1);
  b.radius_rational = scale * (maxdeg - 1) * mpq_class(w_count(plan.k) * w_count(plan.big_k)) *
                      (uv / plan.delta + 2) * p_power(p, dgg - d1);
  b.half_exponent = static_cast<unsigned long>(n);
  return b;
}

}  // namespace frobmod
