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

#pragma once

// Dyadic interval arithmetic with outward (directed) rounding.
//
// Endpoints are MPFR numbers, i.e. dyadic rationals m * 2^e. Every operation
// rounds the lower endpoint toward -inf and the upper endpoint toward +inf, so
// the true result of the real operation is always contained in the output.

#include <mpfr.h>

#include <gmpxx.h>

#include <string>

namespace bpfree {

using Integer = mpz_class;
using Rational = mpq_class;

// RAII owner of one mpfr_t.
class BigFloat {
 public:
  explicit BigFloat(mpfr_prec_t bits = 64);
  BigFloat(const BigFloat& other);
  BigFloat(BigFloat&& other) noexcept;
  BigFloat& operator=(const BigFloat& other);
  BigFloat& operator=(BigFloat&& other) noexcept;
  ~BigFloat();

  mpfr_ptr get() { return value_; }
  mpfr_srcptr get() const { return value_; }
  mpfr_prec_t bits() const { return mpfr_get_prec(value_); }

  // Exact conversion; precision is widened so no rounding happens.
  static BigFloat exact(const Integer& z);
  static BigFloat exact_dyadic(const Integer& mantissa, long exponent);

  Rational to_rational() const;
  double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }
  // Decimal rendering with `digits` significant digits, rounded in `rnd`.
  std::string to_decimal(int digits, mpfr_rnd_t rnd = MPFR_RNDN) const;

  friend bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_less_p(a.value_, b.value_); }
  friend bool operator<=(const BigFloat& a, const BigFloat& b) { return mpfr_lessequal_p(a.value_, b.value_); }
  friend bool operator==(const BigFloat& a, const BigFloat& b) { return mpfr_equal_p(a.value_, b.value_); }

 private:
  mpfr_t value_;
};

class DyadicInterval {
 public:
  // The degenerate interval [0, 0].
  DyadicInterval();
  DyadicInterval(BigFloat lo, BigFloat hi);

  // Exact point intervals carrying at least `bits` of working precision.
  static DyadicInterval point(const Integer& z, mpfr_prec_t bits = 64);
  static DyadicInterval point(long z, mpfr_prec_t bits = 64) { return point(Integer(z), bits); }
  // Outward-rounded enclosure of a rational at `bits` of precision.
  static DyadicInterval enclose(const Rational& q, mpfr_prec_t bits);
  static DyadicInterval e(mpfr_prec_t bits);

  const BigFloat& lo() const { return lo_; }
  const BigFloat& hi() const { return hi_; }
  // Bits of precision of the endpoints.
  mpfr_prec_t precision() const;

  Rational lo_rational() const { return lo_.to_rational(); }
  Rational hi_rational() const { return hi_.to_rational(); }
  Rational width() const;
  double midpoint() const;

  bool contains(const Rational& q) const;
  bool contains_zero() const;
  bool is_point() const { return lo_ == hi_; }
  bool certainly_positive() const { return mpfr_sgn(lo_.get()) > 0; }
  bool certainly_negative() const { return mpfr_sgn(hi_.get()) < 0; }
  bool certainly_less(const DyadicInterval& other) const { return hi_ < other.lo_; }
  bool overlaps(const DyadicInterval& other) const;

  // "[lo, hi]" with `digits` significant decimal digits, rounded outward.
  std::string to_string(int digits = 20) const;

  friend DyadicInterval operator+(const DyadicInterval& a, const DyadicInterval& b);
  friend DyadicInterval operator-(const DyadicInterval& a, const DyadicInterval& b);
  friend DyadicInterval operator-(const DyadicInterval& a);
  friend DyadicInterval operator*(const DyadicInterval& a, const DyadicInterval& b);
  // Throws std::domain_error when b contains zero.
  friend DyadicInterval operator/(const DyadicInterval& a, const DyadicInterval& b);

  DyadicInterval scaled(const Rational& q) const;

 private:
  BigFloat lo_;
  BigFloat hi_;
};

// Elementary functions. Results are enclosures of the image of the input set,
// with endpoints rounded to `bits`.
DyadicInterval exp(const DyadicInterval& x, mpfr_prec_t bits);
// Throws std::domain_error unless x > 0.
DyadicInterval log(const DyadicInterval& x, mpfr_prec_t bits);
// Throws std::domain_error unless x >= 0.
DyadicInterval sqrt(const DyadicInterval& x, mpfr_prec_t bits);
// Real d-th root of a nonnegative interval.
DyadicInterval root(const DyadicInterval& x, unsigned long d, mpfr_prec_t bits);
DyadicInterval max(const DyadicInterval& a, const DyadicInterval& b);
// Smallest interval containing both.
DyadicInterval hull(const DyadicInterval& a, const DyadicInterval& b);

}  // namespace bpfree
