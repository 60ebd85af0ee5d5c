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

#include <doctest.h>

#include <cmath>

#include "bpfree/bounds.hpp"
#include "bpfree/evaluator.hpp"

using namespace bpfree;

namespace {

// Decimal check with a tolerance given as 1/den.
bool near(const DyadicInterval& x, double v, double tol) { return std::abs(x.midpoint() - v) <= tol; }

}  // namespace

TEST_CASE("term_upper_bounds examples") {
  auto tb = term_upper_bounds(1, 2, 3, Integer(1));
  CHECK(tb.young.is_algebraic());
  CHECK(tb.young.exact_part() == RadicalSum(3));
  CHECK(certified_compare(RadicalSum::radical(Rational(1), Integer(2), 2), tb.young) == std::strong_ordering::less);
  tb = term_upper_bounds(2, 2, 3, Integer(1));
  CHECK(near(tb.refined.enclose(64), 2.3591409142295226, 1e-12));
  tb = term_upper_bounds(1, 3, 3, Integer(1));
  CHECK(near(tb.wbased.enclose(64), 2.8573907835143657, 1e-12));
  CHECK_THROWS_AS(term_upper_bounds(3, 2, 3, Integer(1)), std::domain_error);
  CHECK_THROWS_AS(term_upper_bounds(1, 4, 3, Integer(1)), std::domain_error);
}

TEST_CASE("term bounds hold with equality at b = d = n") {
  for (unsigned long n = 1; n <= 6; ++n) {
    const RadicalSum t = term_value(Rational(static_cast<long>(n)), n, n, Integer(3));
    const auto tb = term_upper_bounds(n, n, n, Integer(3));
    CHECK(certified_compare(t, tb.young) == std::strong_ordering::equal);
    CHECK(certified_compare(t, tb.refined) == std::strong_ordering::equal);
    const auto w = certified_compare(t, tb.wbased);
    CHECK(w.has_value());
    CHECK(*w < 0);
  }
}

TEST_CASE("property: term bounds dominate the term") {
  for (unsigned long n = 1; n <= 14; ++n) {
    for (unsigned long b = 1; b <= n; ++b) {
      for (unsigned long d = b; d <= n; ++d) {
        for (long r : {1L, 2L, 5L}) {
          const RadicalSum t = term_value(Rational(static_cast<long>(b)), d, n, Integer(r));
          const auto tb = term_upper_bounds(b, d, n, Integer(r));
          for (const CertifiedValue* bound : {&tb.young, &tb.refined, &tb.wbased}) {
            const auto order = certified_compare(t, *bound);
            REQUIRE(order.has_value());
            CHECK(*order <= 0);
          }
        }
      }
    }
  }
}

TEST_CASE("upper_simple") {
  CHECK(upper_simple(3, Integer(1)) == RadicalSum(6));
  CHECK(upper_simple(2, Integer(2)) == RadicalSum(3) + RadicalSum::radical(Rational(1), Integer(2), 2));
  CHECK(upper_simple(1, Integer(1)) == RadicalSum(1));
}

TEST_CASE("upper_loglog") {
  CHECK(near(upper_loglog(3, Integer(1)).enclose(64), 7.302143482850097, 1e-12));
  CHECK(near(upper_loglog(2, Integer(1)).enclose(64), 3.946974159, 1e-8));
  CHECK(near(upper_loglog(2, Integer(2)).enclose(64), 8.581864385762959, 1e-12));
  CHECK_THROWS_AS(upper_loglog(1, Integer(1)), std::domain_error);
  CHECK_THROWS_AS(upper_loglog(1, Integer(3)), std::domain_error);
}

TEST_CASE("upper_enlogn") {
  const CertifiedValue one = upper_enlogn(1, Integer(1));
  CHECK(one.is_algebraic());
  CHECK(one.exact_part() == RadicalSum(1));
  CHECK(near(upper_enlogn(3, Integer(1)).enclose(64), 8.959013462424977 + 3, 1e-12));
  CHECK(near(upper_enlogn(3, Integer(4)).enclose(64), 8.959013462424977 + 6 + std::cbrt(4.0), 1e-12));
}

TEST_CASE("lower_easy") {
  auto e = lower_easy(3, Integer(2));
  CHECK(e.value.is_algebraic());
  CHECK(e.value.exact_part() == sum_of_roots(Integer(2), 3));
  CHECK(near(e.value.enclose(64), 4.674, 1e-3));
  e = lower_easy(2, Integer(1));
  CHECK(e.log_term.certainly_negative());
  CHECK(e.value.exact_part() == RadicalSum(2));
  for (unsigned long n = 2; n <= 20; ++n) CHECK(lower_easy(n, Integer(1)).root_sum == RadicalSum(static_cast<long>(n)));
  CHECK_THROWS_AS(lower_easy(1, Integer(1)), std::domain_error);
}

TEST_CASE("certified_compare escalates and reports overlap") {
  // sqrt 2 against a remainder enclosing sqrt 2 exactly: never separable.
  const CertifiedValue same(RadicalSum(), [](unsigned long p) {
    return sqrt(DyadicInterval::point(2, static_cast<mpfr_prec_t>(p + 8)), static_cast<mpfr_prec_t>(p + 8));
  });
  CHECK_FALSE(certified_compare(RadicalSum::radical(Rational(1), Integer(2), 2), same).has_value());
  CHECK(certified_compare(RadicalSum(1), same) == std::strong_ordering::less);
  CHECK(certified_compare(RadicalSum(2), same) == std::strong_ordering::greater);
}

TEST_CASE("lower_construction") {
  const auto c110 = lower_construction(110);
  CHECK(c110.violations.empty());
  CHECK(c110.chain.b(1) == Rational(11));
  CHECK(c110.gap_two);
  CHECK(c110.meets_target == Verdict::kTrue);
  CHECK(near(c110.target, 15.657235777170439, 1e-9));
  CHECK(c110.n_at_least_110);
  // d_j = b_j + ceil(b_j W(n/b_j)), recomputed here in floating point.
  for (std::size_t j = 1; j <= c110.chain.s(); ++j) {
    const double b = c110.chain.b(j).get_d();
    double w = 1;
    for (int i = 0; i < 100; ++i) w = w - (w * std::exp(w) - 110 / b) / ((w + 1) * std::exp(w));
    CHECK(c110.chain.d(j) == static_cast<unsigned long>(b + std::ceil(b * w)));
  }
  const auto c200 = lower_construction(200);
  CHECK(c200.meets_target == Verdict::kTrue);
  CHECK(near(c200.target, 30.66991205041234, 1e-9));

  const auto c100 = lower_construction(100);
  CHECK_FALSE(c100.n_at_least_110);
  CHECK(c100.n_at_least_10);
  const auto c5 = lower_construction(5);
  CHECK(c5.chain.s() == 0);
  CHECK(c5.value == RadicalSum(5));
  CHECK_THROWS_AS(lower_construction(1), std::domain_error);
}

TEST_CASE("large_r_threshold") {
  auto t = large_r_threshold(2, 10);
  REQUIRE(t.r0.has_value());
  CHECK(*t.r0 == 1);
  CHECK(t.certificates.size() == 10);
  for (const auto& c : t.certificates) CHECK(c.equal);
  t = large_r_threshold(3, 10);
  REQUIRE(t.r0.has_value());
  CHECK(*t.r0 == 2);
  CHECK(t.certificates.front().r == 1);
  CHECK_FALSE(t.certificates.front().equal);
  t = large_r_threshold(4, 10);
  REQUIRE(t.r0.has_value());
  CHECK(*t.r0 >= 2);
  CHECK_THROWS_AS(large_r_threshold(7, 10), GuardError);
  CHECK_THROWS_AS(large_r_threshold(1, 10), GuardError);
  CHECK_THROWS_AS(large_r_threshold(3, 0), std::domain_error);
}

TEST_CASE("bound report") {
  const auto rep = build_bound_report(6, Integer(1));
  REQUIRE(rep.F.has_value());
  CHECK(rep.F->floor == 8);
  REQUIRE(rep.entries.size() == 4);
  CHECK(rep.entries[0].name == "young_sum");
  CHECK(rep.entries[2].name == "loglog_thm");
  for (const auto& e : rep.entries) {
    CHECK(e.dominates_F == (e.kind == BoundKind::kUpper ? Verdict::kTrue : Verdict::kFalse));
  }
  BoundReportOptions opts;
  opts.solve_limit = 5;
  const auto no_f = build_bound_report(6, Integer(1), opts);
  CHECK_FALSE(no_f.F.has_value());
  for (const auto& e : no_f.entries) CHECK(e.dominates_F == Verdict::kUndecided);
  opts.with_construction = true;
  opts.solve_limit = 0;
  const auto with = build_bound_report(110, Integer(1), opts);
  REQUIRE(with.construction.has_value());
  CHECK(with.entries.back().name == "construction_lower");
  CHECK_THROWS_AS(build_bound_report(1, Integer(1)), std::domain_error);
}

TEST_CASE("property: upper bounds dominate F up to n = 30") {
  for (unsigned long n = 2; n <= 30; ++n) {
    for (long r : {1L, 2L, 5L}) {
      const auto rep = build_bound_report(n, Integer(r));
      for (const auto& e : rep.entries) {
        if (e.kind == BoundKind::kUpper) CHECK(e.dominates_F == Verdict::kTrue);
        if (e.kind == BoundKind::kLower) CHECK(e.dominates_F == Verdict::kFalse);
      }
    }
  }
}

TEST_CASE("sweep") {
  const auto rows = bound_sweep(8, Integer(2));
  REQUIRE(rows.size() == 7);
  CHECK(rows.front().n == 2);
  for (const auto& row : rows) {
    REQUIRE(row.F.has_value());
    CHECK(row.F->certainly_less(row.young_sum));
    CHECK(row.easy_lower.hi_rational() <= row.F->hi_rational());
  }
}
