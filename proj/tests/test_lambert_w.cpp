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

#include <string>
#include <utility>

#include "bpfree/lambert_w.hpp"
#include "bpfree/radical.hpp"

using namespace bpfree;

namespace {

// Reference values computed with an independent arbitrary-precision library.
const std::pair<const char*, const char*> kReference[] = {
    {"1/10", "0.0912765271608622642998957214232"},
    {"1/2", "0.35173371124919582602490930093"},
    {"1", "0.56714329040978387299996866221"},
    {"2", "0.852605502013725491346472414695"},
    {"3", "1.04990889496403995998869707055"},
    {"5", "1.32672466524220022363509929776"},
    {"10", "1.74552800274069938307430126488"},
    {"100", "3.38563014029005018488824436453"},
    {"1000000", "11.3833580861400526220001567816"},
};

Rational decimal(const std::string& s) {
  const auto dot = s.find('.');
  const std::string digits = s.substr(0, dot) + s.substr(dot + 1);
  Integer den;
  mpz_ui_pow_ui(den.get_mpz_t(), 10, s.size() - dot - 1);
  return make_rational(Integer(digits, 10), den);
}

}  // namespace

TEST_CASE("reference values") {
  for (const auto& [x, w] : kReference) {
    const DyadicInterval enc = lambert_w(Rational(x), 64);
    const Rational ref = decimal(w);
    // The reference carries 30 digits; allow that much slack.
    CHECK_MESSAGE(enc.lo_rational() <= ref + Rational(1, Integer("1000000000000000000000000000")), x);
    CHECK_MESSAGE(enc.hi_rational() >= ref - Rational(1, Integer("1000000000000000000000000000")), x);
    Rational width_bound(2);
    mpq_div_2exp(width_bound.get_mpq_t(), width_bound.get_mpq_t(), 64);
    CHECK(enc.width() <= width_bound);
  }
}

TEST_CASE("special points") {
  const DyadicInterval w0 = lambert_w(Rational(0));
  CHECK(w0.is_point());
  CHECK(w0.contains(Rational(0)));
  const DyadicInterval we = lambert_w(DyadicInterval::e(200), 64);
  CHECK(we.contains(Rational(1)));
  CHECK(we.width() <= Rational(1, Integer("100000000000000")));
  CHECK_THROWS_AS(lambert_w(Rational(-1)), std::domain_error);
}

TEST_CASE("inverse identity on a grid") {
  const char* grid[] = {"1/10", "1/2", "1", "2", "5", "10", "100", "1000000"};
  for (const char* x : grid) {
    const Rational q(x);
    const DyadicInterval w = lambert_w(q, 64);
    const double mid = w.midpoint();
    const double back = mid * std::exp(mid);
    CHECK(std::abs(back - q.get_d()) <= 1e-12 * std::max(1.0, q.get_d()));
    // Certified: u(lo) <= x <= u(hi).
    const DyadicInterval u_lo = DyadicInterval(w.lo(), w.lo()) * exp(DyadicInterval(w.lo(), w.lo()), 128);
    const DyadicInterval u_hi = DyadicInterval(w.hi(), w.hi()) * exp(DyadicInterval(w.hi(), w.hi()), 128);
    CHECK(u_lo.lo_rational() <= q);
    CHECK(u_hi.hi_rational() >= q);
  }
}

TEST_CASE("higher precision narrows the enclosure") {
  const DyadicInterval a = lambert_w(Rational(7), 64);
  const DyadicInterval b = lambert_w(Rational(7), 256);
  CHECK(a.overlaps(b));
  CHECK(b.width() < a.width());
  Rational bound(2);
  mpq_div_2exp(bound.get_mpq_t(), bound.get_mpq_t(), 256);
  CHECK(b.width() <= bound);
}

TEST_CASE("delta") {
  for (long n : {3L, 10L, 40L}) {
    const DyadicInterval d = delta(Rational(n), Integer(n), Integer(1));
    const DyadicInterval w1 = lambert_w(Rational(1)).scaled(Rational(n));
    CHECK(d.overlaps(w1));
  }
  const DyadicInterval de = delta(Rational(1), DyadicInterval::e(200), Integer(1));
  CHECK(de.contains(Rational(1)));
  CHECK(delta(Rational(1), Integer(10), Integer(1)).overlaps(lambert_w(Rational(10))));
  CHECK_THROWS_AS(delta(Rational(0), Integer(3), Integer(1)), std::domain_error);
  CHECK_THROWS_AS(delta(Rational(-1), Integer(3), Integer(1)), std::domain_error);
}

TEST_CASE("property: b W(n/b) is strictly increasing in b") {
  for (long n : {10L, 50L, 110L}) {
    DyadicInterval prev = delta(Rational(1, 2), Integer(n), Integer(1), 96);
    for (long b2 = 2; b2 <= 2 * n; ++b2) {
      const DyadicInterval cur = delta(Rational(b2, 2), Integer(n), Integer(1), 96);
      CHECK(prev.certainly_less(cur));
      prev = cur;
    }
  }
}

TEST_CASE("property: half log n < W(n) <= log n for n >= 3") {
  for (long n = 3; n <= 400; n += 7) {
    const DyadicInterval w = lambert_w(Rational(n), 64);
    const DyadicInterval l = log(DyadicInterval::point(n, 96), 96);
    CHECK(l.scaled(Rational(1, 2)).certainly_less(w));
    CHECK(w.hi_rational() <= l.hi_rational());
  }
}

TEST_CASE("constant behind 2.34") {
  const DyadicInterval w1 = lambert_w(Rational(1), 128);
  const DyadicInterval c = -log(w1, 128) + DyadicInterval::point(1, 128) / w1;
  CHECK(c.lo_rational() > Rational(232, 100));
  CHECK(c.hi_rational() < Rational(234, 100));
}

TEST_CASE("monotone in x") {
  double prev = -1;
  for (long k = 0; k <= 200; ++k) {
    const double mid = lambert_w(Rational(k, 4), 64).midpoint();
    CHECK(mid >= prev);
    prev = mid;
  }
}
