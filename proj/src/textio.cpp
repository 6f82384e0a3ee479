// Copyright 2026 The frobmod Authors
// SPDX-License-Identifier: Apache-2.0

#include "frobmod/textio.hpp"

#include <charconv>
#include <sstream>
#include <stdexcept>

namespace frobmod {

namespace {

std::uint64_t parse_uint(std::string_view tok) {
  while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
  while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size()) {
    throw std::invalid_argument("not an unsigned integer: '" + std::string(tok) + "'");
  }
  return v;
}

}  // namespace

std::vector<std::uint64_t> parse_uint_list(const std::string& text) {
  std::vector<std::uint64_t> out;
  std::string_view rest(text);
  for (;;) {
    auto pos = rest.find(',');
    out.push_back(parse_uint(rest.substr(0, pos)));
    if (pos == std::string_view::npos) break;
    rest.remove_prefix(pos + 1);
  }
  return out;
}

Poly parse_poly(std::uint32_t p, const std::string& text) {
  std::vector<Residue> c;
  for (auto v : parse_uint_list(text)) {
    if (v >= p) throw std::invalid_argument("coefficient " + std::to_string(v) + " not below p");
    c.push_back(static_cast<Residue>(v));
  }
  return Poly(p, std::move(c));
}

ExtElem parse_elem(const FieldCtx& ctx, const std::string& text) {
  auto vals = parse_uint_list(text);
  if (vals.size() != ctx.n()) {
    throw std::invalid_argument("expected " + std::to_string(ctx.n()) + " coordinates");
  }
  std::vector<Residue> c;
  for (auto v : vals) {
    if (v >= ctx.p()) throw std::invalid_argument("coordinate " + std::to_string(v) + " not below p");
    c.push_back(static_cast<Residue>(v));
  }
  return ctx.from_coords(std::move(c));
}

ExtPoly parse_ext_poly(const FieldCtx& ctx, const std::string& text) {
  std::vector<ExtElem> c;
  for (auto v : parse_uint_list(text)) {
    if (v >= ctx.size()) throw std::invalid_argument("element index " + std::to_string(v) + " not below p^n");
    c.push_back(ctx.from_index(v));
  }
  return ExtPoly(&ctx, std::move(c));
}

std::string ext_poly_csv(const ExtPoly& f) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
    if (i) os << ',';
    os << f.coeffs()[i].index();
  }
  return os.str();
}

std::pair<unsigned, unsigned> parse_shard(const std::string& text) {
  auto slash = text.find('/');
  if (slash == std::string::npos) throw std::invalid_argument("shard must look like i/k");
  auto i = parse_uint(std::string_view(text).substr(0, slash));
  auto k = parse_uint(std::string_view(text).substr(slash + 1));
  if (k == 0 || i >= k || k > 1000000) throw std::invalid_argument("shard needs 0 <= i < k");
  return {static_cast<unsigned>(i), static_cast<unsigned>(k)};
}

}  // namespace frobmod
