// Copyright 2026 The frobmod Authors
// SPDX-License-Identifier: Apache-2.0

#include "reproduce.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "frobmod/curvesearch.hpp"
#include "frobmod/identities.hpp"
#include "frobmod/sievebound.hpp"

namespace frobmod::tools {

namespace {

using Pair = std::pair<std::uint64_t, std::uint32_t>;

// Reference list of exact failures with n >= 6, by n.
const std::map<std::uint64_t, std::vector<std::uint32_t>>& reference_failures() {
  static const std::map<std::uint64_t, std::vector<std::uint32_t>> table = {
      {6,
       {2,    3,    5,    7,    11,   13,   17,   19,   23,   29,   31,   37,   41,   43,   47,   53,   59,
        61,   67,   71,   73,   79,   83,   89,   97,   101,  103,  107,  109,  113,  127,  139,  151,  157,
        163,  181,  193,  199,  211,  223,  229,  241,  271,  277,  283,  307,  313,  331,  337,  349,  367,
        373,  379,  397,  409,  421,  433,  439,  457,  463,  487,  499,  523,  541,  547,  571,  577,  601,
        607,  613,  619,  631,  643,  661,  673,  691,  709,  727,  733,  739,  751,  757,  769,  787,  811,
        823,  829,  853,  859,  877,  883,  907,  919,  937,  967,  991,  997,  1009, 1021, 1033, 1039, 1051,
        1063, 1069, 1087, 1093, 1117, 1123, 1129, 1153, 1171, 1201, 1213, 1231, 1237, 1249, 1279, 1291, 1297,
        1303, 1321, 1327, 1381, 1399, 1423, 1429, 1447, 1453, 1459, 1471, 1483, 1489, 1531, 1543, 1549, 1567,
        1579, 1597, 1609, 1621, 1627, 1657, 1663, 1669, 1693, 1699, 1723, 1741, 1747, 1753, 1759, 1777, 1783,
        1789, 1801, 1831, 1861, 1867, 1873, 1879, 1933, 1951, 1987, 1993, 1999, 2011, 2017, 2029}},
      {7, {2, 3, 13, 29, 43, 71, 113, 127, 197, 211, 239, 281, 337, 379}},
      {8, {3, 5, 7, 11, 13, 17, 19, 29, 37, 41, 73, 89, 97, 113, 137}},
      {9, {2, 7, 19, 37, 73}},
      {10, {2, 3, 11, 31, 41, 61, 71}},
      {11, {23}},
      {12, {5, 7, 13, 19}},
      {13, {3}},
      {14, {2, 29}},
      {15, {2}},
      {16, {3, 5, 7, 17}},
      {18, {19}},
      {20, {3, 11}},
      {21, {2}},
      {22, {23}},
      {24, {5, 7}},
      {26, {3}},
  };
  return table;
}

std::string pairs_text(const std::vector<Pair>& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ' ';
    os << '(' << v[i].first << ',' << v[i].second << ')';
  }
  return os.str();
}

std::string set_diff(const std::set<Pair>& want, const std::set<Pair>& got) {
  std::vector<Pair> missing, extra;
  std::set_difference(want.begin(), want.end(), got.begin(), got.end(), std::back_inserter(missing));
  std::set_difference(got.begin(), got.end(), want.begin(), want.end(), std::back_inserter(extra));
  std::string out;
  if (!missing.empty()) out += "missing: " + pairs_text(missing);
  if (!extra.empty()) out += std::string(out.empty() ? "" : "; ") + "extra: " + pairs_text(extra);
  return out;
}

}  // namespace

std::vector<BracketRow> lemma_brackets() {
  std::vector<BracketRow> rows = {
      {"p=2", 1, 2, 75},          {"p=3", 2, 3, 45},          {"p=5", 4, 5, 33},
      {"p=7", 6, 7, 28},          {"11<=p<=23", 10, 23, 24},  {"p<=29", 23, 29, 20},
      {"p<=100", 29, 100, 9},     {"p<=200", 100, 200, 7},    {"p<=500", 200, 500, 6},
      {"p<=2100", 500, 2100, 5},
  };
  auto nmax = [](std::uint32_t p) { return lemma_failure_nmax(p, 1024); };
  for (auto& r : rows) {
    for (std::uint32_t p = r.lo + 1; p <= r.hi; ++p) {
      if (is_prime_u32(p)) r.bracket_max = std::max(r.bracket_max, nmax(p));
    }
    // Beyond p = 29 the largest failing n does not grow with p, so the first
    // prime past both hi and 28 bounds the whole tail.
    std::uint32_t p = r.hi + 1;
    for (; p <= 29; ++p) {
      if (is_prime_u32(p)) r.beyond_max = std::max(r.beyond_max, nmax(p));
    }
    while (!is_prime_u32(p)) ++p;
    r.beyond_max = std::max(r.beyond_max, nmax(p));
  }
  return rows;
}

std::vector<ClaimResult> reproduce_all(const ReproduceOptions& opts) {
  std::vector<ClaimResult> out;
  ScanOptions so;
  so.jobs = opts.jobs;

  // n = 5 exact scan.
  ScanReport r5 = scan_failures(5, 5, 290000, true, so);
  {
    ClaimResult c{"n5-failures", "5779", std::to_string(r5.pairs.size()), r5.pairs.size() == 5779, ""};
    c.observed += " (largest prime " + std::to_string(r5.largest_prime(5)) + ")";
    out.push_back(c);
  }

  // n >= 6 exact failures.
  ScanReport r6 = candidate_scan(6, so);
  std::set<Pair> want, got(r6.pairs.begin(), r6.pairs.end());
  for (const auto& [n, ps] : reference_failures()) {
    for (auto p : ps) want.emplace(n, p);
  }
  out.push_back({"n6plus-total", std::to_string(want.size()), std::to_string(got.size()), want == got,
                 set_diff(want, got)});
  std::set<std::uint64_t> ns;
  for (const auto& pr : want) ns.insert(pr.first);
  for (const auto& pr : got) ns.insert(pr.first);
  for (auto n : ns) {
    std::set<Pair> w, g;
    for (const auto& pr : want) {
      if (pr.first == n) w.insert(pr);
    }
    for (const auto& pr : got) {
      if (pr.first == n) g.insert(pr);
    }
    out.push_back({"n6plus-row-n" + std::to_string(n), std::to_string(w.size()), std::to_string(g.size()), w == g,
                   set_diff(w, g)});
  }

  // Lemma-bound brackets.
  for (const auto& row : lemma_brackets()) {
    ClaimResult c;
    c.id = "bracket-" + row.label;
    c.expected = "n<=" + std::to_string(row.expected);
    c.observed = "n<=" + std::to_string(row.bracket_max);
    c.match = row.bracket_max == row.expected;
    if (!c.match) {
      c.diff = "max failing n over primes in (" + std::to_string(row.lo) + "," + std::to_string(row.hi) +
               "] is " + std::to_string(row.bracket_max) + "; over primes > " + std::to_string(row.hi) + " it is " +
               std::to_string(row.beyond_max);
    }
    out.push_back(c);
  }

  // Sieve persistence over every exact failure.
  {
    std::vector<Pair> all = r5.pairs;
    all.insert(all.end(), r6.pairs.begin(), r6.pairs.end());
    std::set<Pair> persistent;
    for (const auto& [n, p] : all) {
      if (!check_sieve_ineq(p, n)) persistent.emplace(n, p);
    }
    std::set<Pair> target = {{5, 2}, {5, 5}, {6, 2}, {6, 3}, {6, 7}};
    out.push_back({"sieve-persistent", pairs_text({target.begin(), target.end()}),
                   std::to_string(persistent.size()) + " pairs", persistent == target, set_diff(target, persistent)});
  }

  // Exception counts.
  {
    ExceptionSearchOptions eo;
    eo.jobs = opts.jobs;
    auto rep = enumerate_exceptions(2, 5, 3, eo);
    out.push_back({"exceptions-2-5", "4", std::to_string(rep.records.size()), rep.records.size() == 4, ""});
    if (opts.include_slow) {
      auto rep6 = enumerate_exceptions(2, 6, 3, eo);
      out.push_back({"exceptions-2-6", ">1000", std::to_string(rep6.records.size()), rep6.records.size() > 1000, ""});
    }
  }

  for (const auto& s : run_identity_suites(IdentityConfig{})) {
    out.push_back({"identity: " + s.name, "0 failures",
                   std::to_string(s.failures) + " failures / " + std::to_string(s.cases) + " cases", s.ok(), s.detail});
  }
  return out;
}

}  // namespace frobmod::tools
