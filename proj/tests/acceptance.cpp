// Copyright 2026 The bpfree Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Acceptance criteria, one PASS/FAIL line each. Exit status 1 if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "bpfree/bounds.hpp"
#include "bpfree/evaluator.hpp"
#include "bpfree/lambert_w.hpp"
#include "bpfree/solver.hpp"

using namespace bpfree;

namespace {

struct Outcome {
  bool passed = false;
  std::string detail;
};

// Floors for n = 2..17 at r = 1 and r = 2, as published.
const std::vector<long> kFloorsR1 = {2, 3, 4, 6, 8, 9, 11, 13, 15, 17, 19, 21, 24, 26, 28, 30};
const std::vector<long> kFloorsR2 = {3, 4, 6, 8, 10, 11, 13, 15, 18, 20, 22, 24, 26, 28, 30, 33};

Outcome ac1() {
  const auto cells = build_table(17, {Integer(1), Integer(2)});
  std::ostringstream bad;
  int mismatches = 0;
  for (const auto& cell : cells) {
    const long expected = (cell.r == 1 ? kFloorsR1 : kFloorsR2)[cell.n - 2];
    if (cell.floor != expected) {
      bad << (mismatches++ ? ", " : "") << "F(" << cell.n << "," << cell.r << ") floor " << cell.floor << " vs "
          << expected;
    }
  }
  std::ostringstream os;
  os << cells.size() << " cells, " << mismatches << " mismatches";
  if (mismatches) os << ": " << bad.str();
  return {cells.size() == 32 && mismatches == 0, os.str()};
}

Outcome ac2() {
  const RadicalSum f2 = solve_F(2, Integer(1)).value;
  const RadicalSum f3 = solve_F(3, Integer(1)).value;
  const RadicalSum want3 = RadicalSum(2) + RadicalSum::radical(Rational(1), Integer(2), 2);
  const bool ok = f2 == RadicalSum(2) && f3 == want3 && f3.to_string() == "2 + 1 * 2^(1/2)" &&
                  compare(f3, RadicalSum(4)) < 0;
  return {ok, "F(2,1) = " + f2.to_string() + ", F(3,1) = " + f3.to_string()};
}

Outcome ac3() {
  const SolveResult g = solve_G_sixfold(6);
  const bool ok = compare(g.value, RadicalSum(8)) == std::strong_ordering::less;
  return {ok, "G(6) <= " + g.value.to_string() + " ~ " + g.value.enclose(64).to_string(12) + " < 8"};
}

Outcome ac4() {
  int cases = 0, failures = 0;
  for (unsigned long n = 1; n <= 6; ++n) {
    for (long r = 1; r <= 3; ++r) {
      const SolveResult dp = solve_F(n, Integer(r));
      const SolveResult bf = solve_F_bruteforce(n, Integer(r));
      const Chain& a = std::get<Chain>(dp.witness);
      const Chain& b = std::get<Chain>(bf.witness);
      const bool ok = dp.value == bf.value && validate_chain(a).empty() && validate_chain(b).empty() &&
                      f_eval(a, Integer(r)) == dp.value && f_eval(b, Integer(r)) == bf.value;
      ++cases;
      failures += !ok;
    }
  }
  return {failures == 0, std::to_string(cases) + " (n, r) pairs, " + std::to_string(failures) + " disagreements"};
}

Outcome ac5() {
  int checks = 0, failures = 0, undecided = 0;
  std::string first;
  for (long r : {1L, 2L, 5L}) {
    const Integer rr(r);
    for (unsigned long n = 2; n <= 60; ++n) {
      const RadicalSum F = solve_F(n, rr).value;
      const CertifiedValue bounds[] = {CertifiedValue(upper_simple(n, rr)), upper_enlogn(n, rr), upper_loglog(n, rr)};
      const char* names[] = {"young_sum", "enlogn_sum", "loglog_thm"};
      for (int k = 0; k < 3; ++k) {
        const auto order = certified_compare(F, bounds[k], 64);
        ++checks;
        if (!order) ++undecided;
        if (!order || *order != std::strong_ordering::less) {
          if (failures++ == 0) first = std::string(names[k]) + " at n=" + std::to_string(n) + ", r=" + std::to_string(r);
        }
      }
    }
  }
  std::string detail = std::to_string(checks) + " strict dominations checked, " + std::to_string(failures) +
                       " failures (" + std::to_string(undecided) + " undecided)";
  if (failures) detail += ", first " + first;
  return {failures == 0, detail};
}

Outcome ac6() {
  long terms = 0, violations = 0;
  std::string first;
  for (long r : {1L, 2L, 5L}) {
    const Integer rr(r);
    for (unsigned long n = 1; n <= 40; ++n) {
      for (unsigned long b = 1; b <= n; ++b) {
        for (unsigned long d = b; d <= n; ++d) {
          const RadicalSum t = term_value(Rational(static_cast<long>(b)), d, n, rr);
          const TermBounds tb = term_upper_bounds(b, d, n, rr);
          for (const CertifiedValue* bound : {&tb.young, &tb.refined, &tb.wbased}) {
            const auto order = certified_compare(t, *bound, 64);
            if (!order || *order == std::strong_ordering::greater) {
              if (violations++ == 0) {
                first = "(b,d,n,r) = (" + std::to_string(b) + "," + std::to_string(d) + "," + std::to_string(n) + "," +
                        std::to_string(r) + ")";
              }
            }
          }
          ++terms;
        }
      }
    }
  }
  std::string detail = std::to_string(terms) + " terms x 3 bounds, " + std::to_string(violations) + " violations";
  if (violations) detail += ", first " + first;
  return {violations == 0, detail};
}

Outcome ac7() {
  const std::vector<std::pair<Rational, const char*>> grid = {
      {Rational(1, 10), "0.1"}, {Rational(1, 2), "0.5"}, {Rational(1), "1"},   {Rational(2), "2"},
      {Rational(5), "5"},       {Rational(10), "10"},    {Rational(100), "100"}, {Rational(1000000), "1e6"},
  };
  double worst = 0;
  bool ok = true;
  auto check_identity = [&](const DyadicInterval& w, double x) {
    const double mid = w.midpoint();
    const double err = std::abs(mid * std::exp(mid) - x) / std::max(1.0, x);
    worst = std::max(worst, err);
    ok = ok && err <= 1e-12;
  };
  for (const auto& [x, label] : grid) check_identity(lambert_w(x, 64), x.get_d());
  // W(e) = 1.
  const DyadicInterval e = DyadicInterval::e(128);
  const DyadicInterval we = lambert_w(e, 64);
  check_identity(we, std::exp(1.0));
  const bool e_ok = we.contains(Rational(1)) && we.width() <= Rational(1, 100000000000000L);
  // -log W(1) + 1/W(1).
  const DyadicInterval w1 = lambert_w(Rational(1), 64);
  const DyadicInterval c = DyadicInterval::point(Integer(1), 64) / w1 - log(w1, 64);
  const bool c_ok = DyadicInterval::enclose(Rational(232, 100), 64).certainly_less(c) &&
                    c.certainly_less(DyadicInterval::enclose(Rational(234, 100), 64));
  char buf[160];
  std::snprintf(buf, sizeof buf, "max relative residual %.3g on 9 points, W(e) in %s, constant in %s", worst,
                we.to_string(17).c_str(), c.to_string(10).c_str());
  return {ok && e_ok && c_ok, buf};
}

Outcome ac8() {
  bool ok = true;
  std::ostringstream os;
  for (unsigned long n : {110UL, 150UL, 200UL}) {
    const LowerConstruction c = lower_construction(n, 64);
    const bool row = c.violations.empty() && c.gap_two && c.meets_target == Verdict::kTrue && c.value;
    ok = ok && row;
    os << (n == 110 ? "" : "; ") << "n=" << n << " s=" << c.chain.s() << " f~"
       << (c.value ? c.value->enclose(64).to_string(8) : std::string("?")) << " target " << c.target.to_string(8);
  }
  return {ok, os.str()};
}

Outcome ac9() {
  bool ok = true;
  std::ostringstream os;
  for (auto [n, expected] : {std::pair{2UL, 1L}, std::pair{3UL, 2L}}) {
    const LargeRThreshold t = large_r_threshold(n, 10);
    bool certified = t.r0.has_value() && *t.r0 == expected;
    int equalities = 0;
    for (const auto& cert : t.certificates) {
      if (t.r0 && cert.r >= *t.r0) {
        certified = certified && cert.equal && cert.f_value == cert.root_sum;
        ++equalities;
      }
    }
    certified = certified && equalities == 10 - expected + 1;
    ok = ok && certified;
    os << (n == 2 ? "" : "; ") << "n=" << n << " r0=" << (t.r0 ? t.r0->get_str() : "none") << " (expected "
       << expected << ", " << equalities << " equality certificates)";
  }
  return {ok, os.str()};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"AC1 table floors n=2..17, r=1,2", ac1},
      {"AC2 exact F(2,1), F(3,1)", ac2},
      {"AC3 sixfold bound G(6) < 8", ac3},
      {"AC4 dp equals brute force, n<=6, r<=3", ac4},
      {"AC5 upper bounds dominate F, n<=60, r=1,2,5", ac5},
      {"AC6 term bounds, n<=40, r=1,2,5", ac6},
      {"AC7 Lambert W identity and constants", ac7},
      {"AC8 lower construction n=110,150,200", ac8},
      {"AC9 large-r threshold n=2,3", ac9},
  };
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = run();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s %s (%.2fs): %s\n", out.passed ? "PASS" : "FAIL", name, secs, out.detail.c_str());
    std::fflush(stdout);
    failed += !out.passed;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
