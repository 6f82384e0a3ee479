// Copyright 2026 The frobmod Authors
// SPDX-License-Identifier: Apache-2.0

// frobmod: command-line front end.
//
// Exit codes: 0 ok, 1 invalid parameters, 2 budget refusal, 3 mismatch against
// the pinned reference numbers (reproduce-paper, verify-identities).

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "frobmod/curvesearch.hpp"
#include "frobmod/extfield.hpp"
#include "frobmod/gfpoly.hpp"
#include "frobmod/identities.hpp"
#include "frobmod/kernels.hpp"
#include "frobmod/sievebound.hpp"
#include "frobmod/textio.hpp"
#include "json.hpp"
#include "reproduce.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace frobmod;

constexpr int kExitInvalid = 1;
constexpr int kExitBudget = 2;
constexpr int kExitMismatch = 3;

struct Common {
  std::string shard = "0/1";
  unsigned jobs = 1;
  std::string format = "text";
  std::string out;
  unsigned shard_index = 0, shard_count = 1;
};

class Timer {
 public:
  explicit Timer(const char* what) : what_(what), t0_(std::chrono::steady_clock::now()) {}
  ~Timer() {
    double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0_).count();
    std::fprintf(stderr, "[%s] %.3f s\n", what_, s);
  }

 private:
  const char* what_;
  std::chrono::steady_clock::time_point t0_;
};

void add_common(CLI::App* sub, Common& c, const char* default_format) {
  c.format = default_format;
  sub->add_option("--shard", c.shard, "Shard i/k; concatenating shards 0..k-1 gives the full output");
  sub->add_option("--jobs", c.jobs, "Worker threads")->check(CLI::Range(1u, 256u));
  sub->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"text", "csv", "json"}));
  sub->add_option("--out", c.out, "Write output to this file instead of stdout");
}

void emit(const Common& c, const std::string& text) {
  if (c.out.empty()) {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream f(c.out, std::ios::binary);
  if (!f) throw std::invalid_argument("cannot open " + c.out);
  f << text;
}

// Single-result subcommands emit on shard 0 only.
bool primary_shard(const Common& c) { return c.shard_index == 0; }

json pairs_json(const std::vector<std::pair<std::uint64_t, std::uint32_t>>& v) {
  json a = json::array();
  for (const auto& [n, p] : v) a.push_back({n, p});
  return a;
}

std::string polys_text(const std::vector<Poly>& v) {
  std::string s;
  for (const auto& f : v) s += (s.empty() ? "" : " ") + std::string("(") + f.pretty() + ")";
  return s;
}

json sieve_json(std::uint32_t p, std::uint64_t n, const SieveCheck& sc) {
  json j;
  j["n"] = n;
  j["p"] = p;
  j["k"] = sc.plan.k.pretty();
  j["sieved_f"] = polys_text(sc.plan.sieved_f);
  j["K"] = sc.plan.big_k.pretty();
  j["sieved_F"] = polys_text(sc.plan.sieved_F);
  j["u"] = sc.plan.u();
  j["v"] = sc.plan.v();
  j["delta"] = sc.plan.delta.get_str();
  j["pass_2u"] = sc.pass_2u;
  j["pass_uv"] = sc.pass_uv;
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "frobmod: finite-field module arithmetic, freeness bounds, prime scans and\n"
      "Artin-Schreier curve searches.\n\n"
      "Formats:\n"
      "  polynomial over F_p   comma-separated coefficients, constant first: \"1,0,1\" = x^2+1\n"
      "  element of F_{p^n}    n power-basis coordinates, constant first: \"0,1,0\" = x\n"
      "  polynomial over F_q   comma-separated element indices sum c_i p^i, constant first\n"
      "  scan CSV              header n,p then one row per failing pair, sorted by (n,p)\n"
      "  exceptions CSV        no header, one row per exception: c0,...,c_deg as element indices\n"};
  app.require_subcommand(1);

  std::uint32_t p = 0;
  std::uint64_t n = 0;

  // factor-xn1
  Common c_fx;
  auto* fx = app.add_subcommand("factor-xn1", "Factor x^n - 1 over F_p");
  fx->add_option("--p", p, "Prime")->required();
  fx->add_option("--n", n, "Exponent")->required();
  add_common(fx, c_fx, "text");

  // wexact
  Common c_w;
  auto* wx = app.add_subcommand("wexact", "W(x^n - 1) and W((x^n - 1)/(x - 1)); json: {p,n,w,wq}");
  wx->add_option("--p", p, "Prime")->required();
  wx->add_option("--n", n, "Exponent")->required();
  add_common(wx, c_w, "text");

  // check-bound
  Common c_cb;
  bool cb_exact = false, cb_table = false;
  auto* cb = app.add_subcommand("check-bound",
                                "p^(n/2-2) >= W W for one pair, or the lemma-bound table with --table; "
                                "json: {p,n,exact,holds} or rows {row,bracket_max,beyond_max,expected,match}");
  cb->add_option("--p", p, "Prime");
  cb->add_option("--n", n, "Exponent");
  cb->add_flag("--exact", cb_exact, "Use exact W values instead of the lemma bound");
  cb->add_flag("--table", cb_table, "Largest failing n per prime bracket");
  add_common(cb, c_cb, "text");

  // scan-failures
  Common c_sf;
  std::uint64_t sf_n = 0, sf_nmin = 0, sf_nmax = 0;
  std::uint32_t sf_pmax = 0;
  bool sf_exact = false, sf_candidates = false;
  auto* sf = app.add_subcommand("scan-failures",
                                "Pairs (n,p) failing p^(n/2-2) >= W W; csv: n,p; "
                                "json: {n_min,n_max,p_max,exact,counts,pairs}");
  sf->add_option("--n", sf_n, "Single n");
  sf->add_option("--nmin", sf_nmin, "Smallest n");
  sf->add_option("--nmax", sf_nmax, "Largest n");
  sf->add_option("--pmax", sf_pmax, "Largest prime");
  sf->add_flag("--exact", sf_exact, "Exact W values");
  sf->add_flag("--candidates", sf_candidates, "Exact failures among all lemma-bound failures with n >= nmin");
  add_common(sf, c_sf, "csv");

  // sieve-check
  Common c_sc;
  bool sc_all = false;
  auto* sc = app.add_subcommand("sieve-check",
                                "Sieve inequality; json: {checked, persistent: [[n,p]...], plans}");
  sc->add_option("--p", p, "Prime");
  sc->add_option("--n", n, "Exponent");
  sc->add_flag("--all-failures", sc_all, "Every exact failure with n = 5, p <= 290000 and n >= 6");
  add_common(sc, c_sc, "json");

  // verify-identities
  Common c_vi;
  IdentityConfig vcfg;
  auto* vi = app.add_subcommand("verify-identities", "Run the identity suites");
  vi->add_option("--seed", vcfg.seed, "Seed for randomized suites");
  vi->add_option("--t-cases", vcfg.t_cases, "Random divisor-sum cases");
  vi->add_option("--weil-cases", vcfg.weil_cases, "Random Weil-bound cases");
  vi->add_option("--max-q", vcfg.oracle_max_q, "Largest field for the freeness oracle");
  add_common(vi, c_vi, "text");

  // search-curve
  Common c_cs;
  std::string cs_f;
  auto* cs = app.add_subcommand("search-curve",
                                "Point with normal coordinates on y^p - y = f(x); json: {found,x0,y0}");
  cs->add_option("--p", p, "Prime")->required();
  cs->add_option("--n", n, "Extension degree")->required();
  cs->add_option("--f", cs_f, "Coefficients of f as element indices, constant first")->required();
  add_common(cs, c_cs, "json");

  // enumerate-exceptions
  Common c_ee;
  unsigned ee_deg = 0;
  double ee_budget = ExceptionSearchOptions{}.budget;
  auto* ee = app.add_subcommand("enumerate-exceptions",
                                "All f of degree deg whose curve has no normal point; csv rows c0,...,c_deg");
  ee->add_option("--p", p, "Prime")->required();
  ee->add_option("--n", n, "Extension degree")->required();
  ee->add_option("--deg", ee_deg, "Degree of f")->required();
  ee->add_option("--budget", ee_budget, "Largest number of polynomials examined by this shard");
  add_common(ee, c_ee, "csv");

  // reproduce-paper
  Common c_rp;
  bool rp_slow = false;
  auto* rp = app.add_subcommand("reproduce-paper", "Recompute every pinned reference number and compare");
  rp->add_flag("--slow", rp_slow, "Include the (6,2) exception enumeration");
  add_common(rp, c_rp, "text");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitInvalid;
  }

  Common* common = nullptr;
  for (auto* s : app.get_subcommands()) {
    if (s == fx) common = &c_fx;
    if (s == wx) common = &c_w;
    if (s == cb) common = &c_cb;
    if (s == sf) common = &c_sf;
    if (s == sc) common = &c_sc;
    if (s == vi) common = &c_vi;
    if (s == cs) common = &c_cs;
    if (s == ee) common = &c_ee;
    if (s == rp) common = &c_rp;
  }
  Common& c = *common;

  // Validation.
  try {
    std::tie(c.shard_index, c.shard_count) = parse_shard(c.shard);
    auto need_prime = [&] {
      if (!is_prime_u32(p)) throw std::invalid_argument("--p must be a prime");
    };
    if (fx->parsed() || wx->parsed() || cs->parsed() || ee->parsed()) need_prime();
    if ((fx->parsed() || wx->parsed()) && n == 0) throw std::invalid_argument("--n must be positive");
    if (cb->parsed() && !cb_table) {
      need_prime();
      if (n == 0) throw std::invalid_argument("--n must be positive");
    }
    if (sf->parsed()) {
      if (sf_n) sf_nmin = sf_nmax = sf_n;
      if (sf_candidates) {
        if (sf_nmin < 5) throw std::invalid_argument("--candidates needs --nmin >= 5");
      } else {
        if (sf_nmin < 1 || sf_nmax < sf_nmin) throw std::invalid_argument("need --n or 1 <= --nmin <= --nmax");
        if (sf_pmax < 2) throw std::invalid_argument("--pmax must be >= 2");
      }
    }
    if (sc->parsed() && !sc_all) {
      need_prime();
      if (n < 2) throw std::invalid_argument("--n must be >= 2");
    }
    if ((cs->parsed() || ee->parsed()) && (n == 0 || n > 40)) throw std::invalid_argument("--n out of range");
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  }

  try {
    std::ostringstream os;
    int status = 0;

    if (fx->parsed()) {
      if (primary_shard(c)) {
        Factorization fac = factor_xn1(p, n);
        if (c.format == "json") {
          json j;
          j["p"] = p;
          j["n"] = n;
          j["factors"] = json::array();
          for (const auto& fp : fac.factors()) j["factors"].push_back({{"factor", fp.factor.pretty()}, {"exponent", fp.multiplicity}});
          os << j.dump(2) << "\n";
        } else {
          os << fac.pretty() << "\n";
        }
      }
    } else if (wx->parsed()) {
      if (primary_shard(c)) {
        WPair w = w_exact(p, n);
        if (c.format == "json") {
          json j{{"p", p}, {"n", n}, {"w", w.w.get_str()}, {"wq", w.wq.get_str()}};
          os << j.dump(2) << "\n";
        } else if (c.format == "csv") {
          os << "p,n,w,wq\n" << p << ',' << n << ',' << w.w.get_str() << ',' << w.wq.get_str() << "\n";
        } else {
          os << "W(x^n-1) = " << w.w.get_str() << "\nW((x^n-1)/(x-1)) = " << w.wq.get_str() << "\n";
        }
      }
    } else if (cb->parsed()) {
      if (!primary_shard(c)) {
      } else if (cb_table) {
        auto rows = tools::lemma_brackets();
        if (c.format == "json") {
          json a = json::array();
          for (const auto& r : rows) {
            a.push_back({{"row", r.label},
                         {"bracket_max", r.bracket_max},
                         {"beyond_max", r.beyond_max},
                         {"expected", r.expected},
                         {"match", r.bracket_max == r.expected}});
          }
          os << a.dump(2) << "\n";
        } else {
          os << "row,bracket_max,beyond_max,expected,match\n";
          for (const auto& r : rows) {
            os << r.label << ',' << r.bracket_max << ',' << r.beyond_max << ',' << r.expected << ','
               << (r.bracket_max == r.expected ? "yes" : "FLAG") << "\n";
          }
        }
      } else {
        bool holds = check_main_ineq(p, n, cb_exact);
        if (c.format == "json") {
          json j{{"p", p}, {"n", n}, {"exact", cb_exact}, {"holds", holds}};
          os << j.dump(2) << "\n";
        } else {
          os << (holds ? "holds" : "fails") << "\n";
        }
      }
    } else if (sf->parsed()) {
      ScanOptions so{c.jobs, c.shard_index, c.shard_count};
      ScanReport rep;
      {
        Timer t("scan-failures");
        rep = sf_candidates ? candidate_scan(sf_nmin, so) : scan_failures(sf_nmin, sf_nmax, sf_pmax, sf_exact, so);
      }
      if (c.format == "json") {
        json j;
        j["n_min"] = rep.n_min;
        j["n_max"] = rep.n_max;
        j["p_max"] = rep.p_max;
        j["exact"] = rep.exact;
        j["shard"] = c.shard;
        json counts = json::object();
        for (const auto& [nn, k] : rep.counts) counts[std::to_string(nn)] = k;
        j["counts"] = counts;
        j["pairs"] = pairs_json(rep.pairs);
        os << j.dump(2) << "\n";
      } else {
        if (c.shard_index == 0) os << "n,p\n";
        for (const auto& [nn, pp] : rep.pairs) os << nn << ',' << pp << "\n";
      }
      if (c.format == "text") {
        for (const auto& [nn, k] : rep.counts) std::cerr << "n=" << nn << ": " << k << " pairs\n";
      }
    } else if (sc->parsed()) {
      json j;
      if (sc_all) {
        Timer t("sieve-check");
        ScanOptions so{c.jobs, 0, 1};
        auto all = scan_failures(5, 5, 290000, true, so).pairs;
        auto more = candidate_scan(6, so).pairs;
        all.insert(all.end(), more.begin(), more.end());
        std::vector<std::pair<std::uint64_t, std::uint32_t>> mine, persistent;
        for (std::size_t i = c.shard_index; i < all.size(); i += c.shard_count) mine.push_back(all[i]);
        json plans = json::array();
        for (const auto& [nn, pp] : mine) {
          SieveCheck d = sieve_check_details(pp, nn);
          if (!d.pass_2u) {
            persistent.push_back({nn, pp});
            plans.push_back(sieve_json(pp, nn, d));
          }
        }
        j["checked"] = mine.size();
        j["persistent"] = pairs_json(persistent);
        j["plans"] = plans;
      } else if (primary_shard(c)) {
        j = sieve_json(p, n, sieve_check_details(p, n));
      }
      if (!j.is_null()) os << j.dump(2) << "\n";
    } else if (vi->parsed()) {
      if (primary_shard(c)) {
        Timer t("verify-identities");
        auto results = run_identity_suites(vcfg);
        json a = json::array();
        if (c.format == "text") os << "# seed " << vcfg.seed << "\n";
        for (const auto& r : results) {
          if (!r.ok()) status = kExitMismatch;
          if (c.format == "json") {
            a.push_back({{"suite", r.name}, {"cases", r.cases}, {"failures", r.failures}, {"detail", r.detail}});
          } else {
            os << (r.ok() ? "ok   " : "FAIL ") << r.name << " cases=" << r.cases << " failures=" << r.failures;
            if (!r.detail.empty()) os << " first: " << r.detail;
            os << "\n";
          }
        }
        if (c.format == "json") os << json{{"seed", vcfg.seed}, {"suites", a}}.dump(2) << "\n";
      }
    } else if (cs->parsed()) {
      if (primary_shard(c)) {
        FieldPtr ctx = FieldCtx::make(p, static_cast<unsigned>(n));
        CurveSpec spec = CurveSpec::make(parse_ext_poly(*ctx, cs_f));
        auto pt = has_normal_point(spec);
        json j;
        j["found"] = pt.has_value();
        j["x0"] = pt ? json(pt->x0.to_csv()) : json(nullptr);
        j["y0"] = pt ? json(pt->y0.to_csv()) : json(nullptr);
        j["degree_in_scope"] = spec.degree_in_scope;
        j["excluded_form"] = spec.excluded_form;
        j["nonsingular"] = spec.nonsingular;
        os << j.dump(2) << "\n";
      }
    } else if (ee->parsed()) {
      ExceptionSearchOptions eo;
      eo.shard_index = c.shard_index;
      eo.shard_count = c.shard_count;
      eo.jobs = c.jobs;
      eo.budget = ee_budget;
      ExceptionReport rep;
      {
        Timer t("enumerate-exceptions");
        rep = enumerate_exceptions(p, static_cast<unsigned>(n), ee_deg, eo);
      }
      if (c.format == "json") {
        json j;
        j["p"] = rep.p;
        j["n"] = rep.n;
        j["deg"] = rep.deg;
        j["shard"] = c.shard;
        j["outer_begin"] = rep.outer_begin;
        j["outer_end"] = rep.outer_end;
        j["outer_total"] = rep.outer_total;
        j["examined"] = rep.polynomials_examined;
        j["count"] = rep.records.size();
        json a = json::array();
        for (const auto& r : rep.records) a.push_back(r.coeffs);
        j["exceptions"] = a;
        os << j.dump(2) << "\n";
      } else {
        for (const auto& r : rep.records) {
          for (std::size_t i = 0; i < r.coeffs.size(); ++i) os << (i ? "," : "") << r.coeffs[i];
          os << "\n";
        }
      }
      std::cerr << rep.records.size() << " exceptions, " << rep.polynomials_examined << " polynomials examined\n";
    } else if (rp->parsed()) {
      if (primary_shard(c)) {
        std::vector<tools::ClaimResult> claims;
        {
          Timer t("reproduce-paper");
          claims = tools::reproduce_all({rp_slow, c.jobs});
        }
        std::size_t bad = 0;
        json a = json::array();
        for (const auto& cl : claims) {
          bad += !cl.match;
          if (c.format == "json") {
            a.push_back({{"id", cl.id},
                         {"expected", cl.expected},
                         {"observed", cl.observed},
                         {"match", cl.match},
                         {"diff", cl.diff}});
          } else {
            os << (cl.match ? "MATCH    " : "MISMATCH ") << cl.id << ": expected " << cl.expected << ", observed "
               << cl.observed << "\n";
            if (!cl.diff.empty()) os << "    " << cl.diff << "\n";
          }
        }
        if (c.format == "json") {
          os << json{{"claims", a}, {"mismatches", bad}}.dump(2) << "\n";
        } else {
          os << claims.size() - bad << "/" << claims.size() << " claims match\n";
        }
        if (bad) status = kExitMismatch;
      }
    }

    emit(c, os.str());
    return status;
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget refused: " << e.what() << "\n";
    return kExitBudget;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const std::length_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  }
}
