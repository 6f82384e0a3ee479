// Copyright 2026 The frobmod Authors
// SPDX-License-Identifier: Apache-2.0

#include "frobmod/extfield.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include "frobmod/arithfun.hpp"
#include "frobmod/kernels.hpp"

namespace frobmod {

namespace {

constexpr std::uint64_t kMaxFieldSize = std::uint64_t{1} << 62;

std::vector<Residue> poly_coords(const Poly& f, unsigned n) {
  std::vector<Residue> c(n, 0);
  for (unsigned i = 0; i < n; ++i) c[i] = f.coeff(i);
  return c;
}

void require_same_ctx(const ExtElem& a, const ExtElem& b) {
  if (a.ctx_ptr() != b.ctx_ptr()) throw std::invalid_argument("elements of different fields");
}

}  // namespace

FieldPtr FieldCtx::make(std::uint32_t p, unsigned n, std::optional<Poly> modulus) {
  require_prime(p, "FieldCtx::make");
  if (n == 0) throw std::invalid_argument("FieldCtx::make: degree must be positive");
  std::uint64_t q = 1;
  for (unsigned i = 0; i < n; ++i) {
    if (q > kMaxFieldSize / p) throw std::invalid_argument("FieldCtx::make: p^n too large");
    q *= p;
  }
  std::shared_ptr<FieldCtx> ctx(new FieldCtx());
  ctx->p_ = p;
  ctx->n_ = n;
  ctx->q_ = q;
  if (modulus) {
    if (modulus->prime() != p || modulus->degree() != static_cast<int>(n) || !modulus->is_monic() ||
        !is_irreducible(*modulus)) {
      throw std::invalid_argument("FieldCtx::make: modulus must be monic irreducible of degree n");
    }
    ctx->modulus_ = *modulus;
  } else {
    ctx->modulus_ = find_irreducible(p, n);
  }
  ctx->xn1_ = Poly::xn_minus_one(p, n);
  ctx->xn1_factors_ = factor_xn1(p, n);

  const Poly& m = ctx->modulus_;
  Poly r = Poly::monomial(p, n) % m;
  for (unsigned k = 0; k + 1 < n; ++k) {
    ctx->reduce_.push_back(poly_coords(r, n));
    r = (r * Poly::x(p)) % m;
  }

  ctx->frob_ = Matrix(n, n, p);
  Poly xp = pow_mod(Poly::x(p), p, m);
  Poly col = Poly::one(p) % m;
  for (unsigned j = 0; j < n; ++j) {
    auto c = poly_coords(col, n);
    for (unsigned i = 0; i < n; ++i) ctx->frob_.at(i, j) = c[i];
    col = (col * xp) % m;
  }

  ctx->trace_.assign(n, 0);
  for (unsigned j = 0; j < n; ++j) {
    std::vector<Residue> v(n, 0), sum(n, 0);
    v[j] = 1;
    for (unsigned i = 0; i < n; ++i) {
      for (unsigned t = 0; t < n; ++t) sum[t] = add_mod(sum[t], v[t], p);
      v = ctx->frob_.apply(v);
    }
    ctx->trace_[j] = sum[0];
  }
  return ctx;
}

void FieldCtx::require_enumerable(std::uint64_t limit, const char* where) const {
  if (q_ > limit) {
    throw std::length_error(std::string(where) + ": field of size " + std::to_string(q_) +
                            " exceeds the enumeration limit " + std::to_string(limit));
  }
}

ExtElem FieldCtx::zero() const { return ExtElem(this, std::vector<Residue>(n_, 0)); }

ExtElem FieldCtx::one() const { return from_residue(1); }

ExtElem FieldCtx::from_residue(Residue c) const {
  std::vector<Residue> v(n_, 0);
  v[0] = c % p_;
  return ExtElem(this, std::move(v));
}

ExtElem FieldCtx::from_index(std::uint64_t index) const {
  if (index >= q_) throw std::out_of_range("FieldCtx::from_index: index out of range");
  std::vector<Residue> v(n_);
  for (unsigned i = 0; i < n_; ++i) {
    v[i] = static_cast<Residue>(index % p_);
    index /= p_;
  }
  return ExtElem(this, std::move(v));
}

ExtElem FieldCtx::from_coords(std::vector<Residue> coords) const {
  if (coords.size() != n_) throw std::invalid_argument("FieldCtx::from_coords: expected n coordinates");
  for (auto c : coords) {
    if (c >= p_) throw std::invalid_argument("FieldCtx::from_coords: coordinate out of range");
  }
  return ExtElem(this, std::move(coords));
}

void FieldCtx::mul_into(const Residue* a, const Residue* b, Residue* out) const {
  std::vector<std::uint64_t> prod(2 * n_ - 1, 0);
  for (unsigned i = 0; i < n_; ++i) {
    if (a[i] == 0) continue;
    for (unsigned j = 0; j < n_; ++j) {
      prod[i + j] = (prod[i + j] + std::uint64_t{a[i]} * b[j]) % p_;
    }
  }
  for (unsigned k = 2 * n_ - 1; k-- > n_;) {
    const std::uint64_t c = prod[k];
    if (c == 0) continue;
    const auto& row = reduce_[k - n_];
    for (unsigned t = 0; t < n_; ++t) prod[t] = (prod[t] + c * row[t]) % p_;
  }
  for (unsigned t = 0; t < n_; ++t) out[t] = static_cast<Residue>(prod[t]);
}

ExtElem::ExtElem(const FieldCtx* ctx, std::vector<Residue> coords) : ctx_(ctx), c_(std::move(coords)) {}

std::uint64_t ExtElem::index() const {
  std::uint64_t r = 0;
  for (std::size_t i = c_.size(); i-- > 0;) r = r * ctx_->p() + c_[i];
  return r;
}

bool ExtElem::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](Residue x) { return x == 0; });
}

bool ExtElem::is_one() const {
  if (c_.empty() || c_[0] != 1) return false;
  return std::all_of(c_.begin() + 1, c_.end(), [](Residue x) { return x == 0; });
}

ExtElem& ExtElem::operator+=(const ExtElem& o) {
  require_same_ctx(*this, o);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] = add_mod(c_[i], o.c_[i], ctx_->p());
  return *this;
}

ExtElem& ExtElem::operator-=(const ExtElem& o) {
  require_same_ctx(*this, o);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] = sub_mod(c_[i], o.c_[i], ctx_->p());
  return *this;
}

ExtElem operator-(const ExtElem& a) {
  ExtElem r = a;
  for (auto& c : r.c_) c = neg_mod(c, a.ctx_->p());
  return r;
}

ExtElem operator*(const ExtElem& a, const ExtElem& b) {
  require_same_ctx(a, b);
  ExtElem r = a;
  a.ctx_->mul_into(a.c_.data(), b.c_.data(), r.c_.data());
  return r;
}

ExtElem ExtElem::scaled(Residue s) const {
  ExtElem r = *this;
  for (auto& c : r.c_) c = mul_mod(c, s, ctx_->p());
  return r;
}

ExtElem ExtElem::frob() const { return ExtElem(ctx_, ctx_->frobenius().apply(c_)); }

ExtElem ExtElem::pow(std::uint64_t e) const {
  ExtElem result = ctx_->one();
  ExtElem b = *this;
  while (e != 0) {
    if (e & 1) result = result * b;
    e >>= 1;
    if (e != 0) b = b * b;
  }
  return result;
}

ExtElem ExtElem::inverse() const {
  if (is_zero()) throw std::domain_error("ExtElem::inverse: zero has no inverse");
  return pow(ctx_->size() - 2);
}

ExtElem ExtElem::pth_root() const {
  ExtElem r = *this;
  for (unsigned i = 1; i < ctx_->n(); ++i) r = r.frob();
  return r;
}

std::string ExtElem::to_csv() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (i) os << ',';
    os << c_[i];
  }
  return os.str();
}

ExtPoly::ExtPoly(const FieldCtx* ctx, std::vector<ExtElem> coeffs) : ctx_(ctx), c_(std::move(coeffs)) {
  for (const auto& c : c_) {
    if (c.ctx_ptr() != ctx_) throw std::invalid_argument("ExtPoly: coefficient from another field");
  }
  normalize();
}

ExtPoly ExtPoly::lift(const FieldCtx& ctx, const Poly& f) {
  if (f.prime() != ctx.p()) throw std::invalid_argument("ExtPoly::lift: characteristic mismatch");
  std::vector<ExtElem> c;
  for (Residue r : f.coeffs()) c.push_back(ctx.from_residue(r));
  return ExtPoly(&ctx, std::move(c));
}

ExtPoly ExtPoly::monomial(const ExtElem& c, std::size_t degree) {
  std::vector<ExtElem> v(degree + 1, c.ctx().zero());
  v[degree] = c;
  return ExtPoly(c.ctx_ptr(), std::move(v));
}

void ExtPoly::normalize() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

ExtElem ExtPoly::coeff(std::size_t i) const { return i < c_.size() ? c_[i] : ctx_->zero(); }

ExtElem ExtPoly::lead() const { return c_.empty() ? ctx_->zero() : c_.back(); }

ExtElem ExtPoly::eval(const ExtElem& y) const {
  ExtElem r = ctx_->zero();
  for (std::size_t i = c_.size(); i-- > 0;) r = r * y + c_[i];
  return r;
}

ExtPoly ExtPoly::scaled(const ExtElem& s) const {
  std::vector<ExtElem> v;
  for (const auto& c : c_) v.push_back(c * s);
  return ExtPoly(ctx_, std::move(v));
}

ExtPoly& ExtPoly::operator+=(const ExtPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), ctx_->zero());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  normalize();
  return *this;
}

ExtPoly& ExtPoly::operator-=(const ExtPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), ctx_->zero());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  normalize();
  return *this;
}

std::string ExtPoly::pretty() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = c_.size(); i-- > 0;) {
    const ExtElem& c = c_[i];
    if (c.is_zero()) continue;
    if (!first) os << '+';
    first = false;
    bool prime_field = std::all_of(c.coords().begin() + 1, c.coords().end(), [](Residue x) { return x == 0; });
    bool show_coef = !(c.is_one() && i > 0);
    if (show_coef) {
      if (prime_field) {
        os << c.coord(0);
      } else {
        os << '[' << c.to_csv() << ']';
      }
    }
    if (i > 0) os << 'x';
    if (i > 1) os << '^' << i;
  }
  return os.str();
}

ExtElem frob_compose(const Poly& f, const ExtElem& alpha) {
  const FieldCtx& ctx = alpha.ctx();
  if (f.prime() != ctx.p()) throw std::invalid_argument("frob_compose: characteristic mismatch");
  Poly g = f.is_zero() ? f : f % ctx.xn1();
  ExtElem acc = ctx.zero();
  ExtElem power = alpha;
  for (int i = 0; i <= g.degree(); ++i) {
    Residue a = g.coeff(static_cast<std::size_t>(i));
    if (a != 0) acc += power.scaled(a);
    power = power.frob();
  }
  return acc;
}

Matrix compose_matrix(const FieldCtx& ctx, const Poly& f) {
  if (f.prime() != ctx.p()) throw std::invalid_argument("compose_matrix: characteristic mismatch");
  Poly g = f.is_zero() ? f : f % ctx.xn1();
  Matrix m(ctx.n(), ctx.n(), ctx.p());
  for (int i = g.degree(); i >= 0; --i) {
    m = m * ctx.frobenius() + Matrix::identity(ctx.n(), ctx.p()).scaled(g.coeff(static_cast<std::size_t>(i)));
  }
  return m;
}

Poly ord(const ExtElem& alpha) {
  const FieldCtx& ctx = alpha.ctx();
  Poly t = ctx.xn1();
  for (const auto& fp : ctx.xn1_factors().factors()) {
    for (unsigned k = 0; k < fp.multiplicity; ++k) {
      Poly cand = exact_div(t, fp.factor);
      if (!frob_compose(cand, alpha).is_zero()) break;
      t = std::move(cand);
    }
  }
  return t;
}

bool is_normal(const ExtElem& alpha) {
  const FieldCtx& ctx = alpha.ctx();
  for (const auto& fp : ctx.xn1_factors().factors()) {
    if (frob_compose(exact_div(ctx.xn1(), fp.factor), alpha).is_zero()) return false;
  }
  return true;
}

Residue abs_trace(const ExtElem& alpha) {
  const FieldCtx& ctx = alpha.ctx();
  std::uint64_t acc = 0;
  for (unsigned j = 0; j < ctx.n(); ++j) {
    acc = (acc + std::uint64_t{ctx.trace_row()[j]} * alpha.coord(j)) % ctx.p();
  }
  return static_cast<Residue>(acc);
}

std::optional<ExtElem> solve_artin_schreier(const ExtElem& c) {
  const FieldCtx& ctx = c.ctx();
  Matrix a = ctx.frobenius() - Matrix::identity(ctx.n(), ctx.p());
  auto sol = solve(a, c.coord_vector());
  if (!sol) return std::nullopt;
  // Solutions differ by F_p = span(1); clearing coordinate 0 gives the smallest encoding.
  (*sol)[0] = 0;
  return ExtElem(&ctx, std::move(*sol));
}

OrderClassifier::OrderClassifier(FieldPtr ctx, Kind kind) : ctx_(std::move(ctx)), kind_(kind) {
  const FieldCtx& c = *ctx_;
  const unsigned n = c.n();
  for (const auto& fp : c.xn1_factors().factors()) {
    hs_.push_back(fp.factor);
    mult_.push_back(fp.multiplicity);
    std::vector<Matrix> per;
    Poly hpow = Poly::one(c.p());
    for (unsigned k = 0; k < fp.multiplicity; ++k) hpow = hpow * fp.factor;
    Poly t = exact_div(c.xn1(), hpow);
    for (unsigned k = 0; k < fp.multiplicity; ++k) {
      Matrix comp = compose_matrix(c, t);
      if (kind_ == Kind::kElement) {
        per.push_back(std::move(comp));
      } else {
        // Row j, column i: Tr(x^i * (t o x^j)); the character psi_a is killed by
        // t iff this matrix annihilates the coordinates of a.
        Matrix z(n, n, c.p());
        for (unsigned j = 0; j < n; ++j) {
          std::vector<Residue> col(n);
          for (unsigned r = 0; r < n; ++r) col[r] = comp.at(r, j);
          ExtElem b(&c, std::move(col));
          ExtElem xi = c.one();
          for (unsigned i = 0; i < n; ++i) {
            z.at(j, i) = abs_trace(xi * b);
            xi = xi * c.from_index(n > 1 ? c.p() : 0);
          }
        }
        per.push_back(std::move(z));
      }
      t = t * fp.factor;
    }
    tests_.push_back(std::move(per));
  }
}

std::vector<std::uint8_t> OrderClassifier::classify_soa(const std::vector<Residue>& soa,
                                                        std::size_t count) const {
  const FieldCtx& c = *ctx_;
  const std::size_t nf = hs_.size();
  std::vector<std::uint8_t> exps(count * nf, 0);
  std::vector<std::uint8_t> done(count), zero(count);
  for (std::size_t i = 0; i < nf; ++i) {
    std::fill(done.begin(), done.end(), std::uint8_t{0});
    for (std::size_t e = 0; e < count; ++e) exps[e * nf + i] = static_cast<std::uint8_t>(mult_[i]);
    for (unsigned k = 0; k < mult_[i]; ++k) {
      const Matrix& m = tests_[i][k];
      kernels::linmap_zero_flags(m.data(), m.rows(), m.cols(), soa.data(), count, zero.data(), c.p());
      for (std::size_t e = 0; e < count; ++e) {
        if (zero[e] && !done[e]) {
          exps[e * nf + i] = static_cast<std::uint8_t>(k);
          done[e] = 1;
        }
      }
    }
  }
  return exps;
}

std::vector<std::uint8_t> OrderClassifier::classify(std::uint64_t first, std::size_t count) const {
  const FieldCtx& c = *ctx_;
  const unsigned n = c.n();
  std::vector<Residue> soa(static_cast<std::size_t>(n) * count);
  for (std::size_t e = 0; e < count; ++e) {
    std::uint64_t idx = first + e;
    for (unsigned j = 0; j < n; ++j) {
      soa[j * count + e] = static_cast<Residue>(idx % c.p());
      idx /= c.p();
    }
  }
  return classify_soa(soa, count);
}

std::vector<std::uint8_t> OrderClassifier::classify(std::span<const ExtElem> elems) const {
  const unsigned n = ctx_->n();
  const std::size_t count = elems.size();
  std::vector<Residue> soa(static_cast<std::size_t>(n) * count);
  for (std::size_t e = 0; e < count; ++e) {
    for (unsigned j = 0; j < n; ++j) soa[j * count + e] = elems[e].coord(j);
  }
  return classify_soa(soa, count);
}

Poly OrderClassifier::order_poly(std::span<const std::uint8_t> exps) const {
  Poly r = Poly::one(ctx_->p());
  for (std::size_t i = 0; i < hs_.size(); ++i) {
    for (unsigned k = 0; k < exps[i]; ++k) r = r * hs_[i];
  }
  return r;
}

std::vector<std::uint8_t> OrderClassifier::exponents_of(const Poly& divisor) const {
  std::vector<std::uint8_t> e(hs_.size(), 0);
  Poly rest = divisor.monic();
  for (std::size_t i = 0; i < hs_.size(); ++i) {
    while (rest.degree() > 0 && rest.divisible_by(hs_[i])) {
      rest = rest / hs_[i];
      ++e[i];
    }
  }
  if (!rest.is_one()) throw std::invalid_argument("exponents_of: not a divisor of x^n - 1");
  return e;
}

std::vector<OrderCount> count_by_order(const FieldPtr& ctx) {
  ctx->require_enumerable(std::uint64_t{1} << 22, "count_by_order");
  OrderClassifier cls(ctx, OrderClassifier::Kind::kElement);
  const std::size_t nf = cls.factor_count();
  std::map<std::vector<std::uint8_t>, std::uint64_t> tally;
  constexpr std::size_t kChunk = 4096;
  for (std::uint64_t first = 0; first < ctx->size(); first += kChunk) {
    auto count = static_cast<std::size_t>(std::min<std::uint64_t>(kChunk, ctx->size() - first));
    auto exps = cls.classify(first, count);
    for (std::size_t e = 0; e < count; ++e) {
      ++tally[std::vector<std::uint8_t>(exps.begin() + e * nf, exps.begin() + (e + 1) * nf)];
    }
  }
  std::vector<OrderCount> out;
  for (DivisorIterator it(ctx->xn1_factors()); !it.done(); it.next()) {
    std::vector<std::uint8_t> key(it.exponents().begin(), it.exponents().end());
    auto found = tally.find(key);
    out.push_back({it.current(), found == tally.end() ? 0 : found->second});
  }
  return out;
}

}  // namespace frobmod
