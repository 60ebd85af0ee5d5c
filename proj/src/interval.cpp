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

#include "bpfree/interval.hpp"

#include <algorithm>
#include <memory>
#include <stdexcept>

namespace bpfree {

BigFloat::BigFloat(mpfr_prec_t bits) {
  mpfr_init2(value_, std::max<mpfr_prec_t>(bits, MPFR_PREC_MIN));
  mpfr_set_zero(value_, 1);
}

BigFloat::BigFloat(const BigFloat& other) {
  mpfr_init2(value_, other.bits());
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& other) noexcept {
  mpfr_init2(value_, MPFR_PREC_MIN);
  mpfr_swap(value_, other.value_);
}

BigFloat& BigFloat::operator=(const BigFloat& other) {
  if (this != &other) {
    mpfr_set_prec(value_, other.bits());
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& other) noexcept {
  mpfr_swap(value_, other.value_);
  return *this;
}

BigFloat::~BigFloat() { mpfr_clear(value_); }

BigFloat BigFloat::exact(const Integer& z) {
  auto size = static_cast<mpfr_prec_t>(mpz_sizeinbase(z.get_mpz_t(), 2));
  BigFloat out(size + 1);
  mpfr_set_z(out.value_, z.get_mpz_t(), MPFR_RNDN);
  return out;
}

BigFloat BigFloat::exact_dyadic(const Integer& mantissa, long exponent) {
  BigFloat out = exact(mantissa);
  mpfr_mul_2si(out.value_, out.value_, exponent, MPFR_RNDN);
  return out;
}

Rational BigFloat::to_rational() const {
  Rational q;
  mpfr_get_q(q.get_mpq_t(), value_);
  return q;
}

std::string BigFloat::to_decimal(int digits, mpfr_rnd_t rnd) const {
  char* raw = nullptr;
  const char* fmt = "%.*R*g";
  if (mpfr_asprintf(&raw, fmt, digits, rnd, value_) < 0) throw std::bad_alloc();
  std::unique_ptr<char, decltype(&mpfr_free_str)> guard(raw, &mpfr_free_str);
  return std::string(raw);
}

DyadicInterval::DyadicInterval() : lo_(MPFR_PREC_MIN), hi_(MPFR_PREC_MIN) {}

DyadicInterval::DyadicInterval(BigFloat lo, BigFloat hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
  if (hi_ < lo_) throw std::logic_error("DyadicInterval: lo > hi");
}

DyadicInterval DyadicInterval::point(const Integer& z, mpfr_prec_t bits) {
  auto size = static_cast<mpfr_prec_t>(mpz_sizeinbase(z.get_mpz_t(), 2)) + 1;
  BigFloat v(std::max(size, bits));
  mpfr_set_z(v.get(), z.get_mpz_t(), MPFR_RNDN);
  return DyadicInterval(v, v);
}

DyadicInterval DyadicInterval::enclose(const Rational& q, mpfr_prec_t bits) {
  BigFloat lo(bits), hi(bits);
  mpfr_set_q(lo.get(), q.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(hi.get(), q.get_mpq_t(), MPFR_RNDU);
  return DyadicInterval(std::move(lo), std::move(hi));
}

DyadicInterval DyadicInterval::e(mpfr_prec_t bits) {
  BigFloat lo(bits), hi(bits);
  mpfr_set_ui(lo.get(), 1, MPFR_RNDN);
  mpfr_set_ui(hi.get(), 1, MPFR_RNDN);
  mpfr_exp(lo.get(), lo.get(), MPFR_RNDD);
  mpfr_exp(hi.get(), hi.get(), MPFR_RNDU);
  return DyadicInterval(std::move(lo), std::move(hi));
}

mpfr_prec_t DyadicInterval::precision() const { return std::max(lo_.bits(), hi_.bits()); }

Rational DyadicInterval::width() const { return hi_rational() - lo_rational(); }

double DyadicInterval::midpoint() const {
  BigFloat sum(precision() + 1);
  mpfr_add(sum.get(), lo_.get(), hi_.get(), MPFR_RNDN);
  mpfr_div_2ui(sum.get(), sum.get(), 1, MPFR_RNDN);
  return sum.to_double();
}

bool DyadicInterval::contains(const Rational& q) const {
  return mpfr_cmp_q(lo_.get(), q.get_mpq_t()) <= 0 && mpfr_cmp_q(hi_.get(), q.get_mpq_t()) >= 0;
}

bool DyadicInterval::contains_zero() const { return mpfr_sgn(lo_.get()) <= 0 && mpfr_sgn(hi_.get()) >= 0; }

bool DyadicInterval::overlaps(const DyadicInterval& other) const {
  return !(hi_ < other.lo_) && !(other.hi_ < lo_);
}

std::string DyadicInterval::to_string(int digits) const {
  return "[" + lo_.to_decimal(digits, MPFR_RNDD) + ", " + hi_.to_decimal(digits, MPFR_RNDU) + "]";
}

namespace {

mpfr_prec_t joint_precision(const DyadicInterval& a, const DyadicInterval& b) {
  return std::max(a.precision(), b.precision());
}

}  // namespace

DyadicInterval operator+(const DyadicInterval& a, const DyadicInterval& b) {
  const mpfr_prec_t bits = joint_precision(a, b);
  BigFloat lo(bits), hi(bits);
  mpfr_add(lo.get(), a.lo_.get(), b.lo_.get(), MPFR_RNDD);
  mpfr_add(hi.get(), a.hi_.get(), b.hi_.get(), MPFR_RNDU);
  return DyadicInterval(std::move(lo), std::move(hi));
}

DyadicInterval operator-(const DyadicInterval& a, const DyadicInterval& b) {
  const mpfr_prec_t bits = joint_precision(a, b);
  BigFloat lo(bits), hi(bits);
  mpfr_sub(lo.get(), a.lo_.get(), b.hi_.get(), MPFR_RNDD);
  mpfr_sub(hi.get(), a.hi_.get(), b.lo_.get(), MPFR_RNDU);
  return DyadicInterval(std::move(lo), std::move(hi));
}

DyadicInterval operator-(const DyadicInterval& a) {
  BigFloat lo(a.hi_.bits()), hi(a.lo_.bits());
  mpfr_neg(lo.get(), a.hi_.get(), MPFR_RNDN);
  mpfr_neg(hi.get(), a.lo_.get(), MPFR_RNDN);
  return DyadicInterval(std::move(lo), std::move(hi));
}

DyadicInterval operator*(const DyadicInterval& a, const DyadicInterval& b) {
  const mpfr_prec_t bits = joint_precision(a, b);
  const mpfr_srcptr xs[2] = {a.lo_.get(), a.hi_.get()};
  const mpfr_srcptr ys[2] = {b.lo_.get(), b.hi_.get()};
  BigFloat lo(bits), hi(bits), tmp(bits);
  bool first = true;
  for (mpfr_srcptr x : xs) {
    for (mpfr_srcptr y : ys) {
      if (first) {
        mpfr_mul(lo.get(), x, y, MPFR_RNDD);
        mpfr_mul(hi.get(), x, y, MPFR_RNDU);
        first = false;
        continue;
      }
      mpfr_mul(tmp.get(), x, y, MPFR_RNDD);
      mpfr_min(lo.get(), lo.get(), tmp.get(), MPFR_RNDD);
      mpfr_mul(tmp.get(), x, y, MPFR_RNDU);
      mpfr_max(hi.get(), hi.get(), tmp.get(), MPFR_RNDU);
    }
  }
  return DyadicInterval(std::move(lo), std::move(hi));
}

DyadicInterval operator/(const DyadicInterval& a, const DyadicInterval& b) {
  if (b.contains_zero()) throw std::domain_error("interval division by an interval containing zero");
  const mpfr_prec_t bits = joint_precision(a, b);
  BigFloat lo(bits), hi(bits);
  mpfr_ui_div(lo.get(), 1, b.hi_.get(), MPFR_RNDD);
  mpfr_ui_div(hi.get(), 1, b.lo_.get(), MPFR_RNDU);
  return a * DyadicInterval(std::move(lo), std::move(hi));
}

DyadicInterval DyadicInterval::scaled(const Rational& q) const {
  const mpfr_prec_t bits = precision();
  BigFloat lo(bits), hi(bits);
  if (sgn(q) >= 0) {
    mpfr_mul_q(lo.get(), lo_.get(), q.get_mpq_t(), MPFR_RNDD);
    mpfr_mul_q(hi.get(), hi_.get(), q.get_mpq_t(), MPFR_RNDU);
  } else {
    mpfr_mul_q(lo.get(), hi_.get(), q.get_mpq_t(), MPFR_RNDD);
    mpfr_mul_q(hi.get(), lo_.get(), q.get_mpq_t(), MPFR_RNDU);
  }
  return DyadicInterval(std::move(lo), std::move(hi));
}

DyadicInterval exp(const DyadicInterval& x, mpfr_prec_t bits) {
  BigFloat lo(bits), hi(bits);
  mpfr_exp(lo.get(), x.lo().get(), MPFR_RNDD);
  mpfr_exp(hi.get(), x.hi().get(), MPFR_RNDU);
  return DyadicInterval(std::move(lo), std::move(hi));
}

DyadicInterval log(const DyadicInterval& x, mpfr_prec_t bits) {
  if (!x.certainly_positive()) throw std::domain_error("log of an interval not bounded away from zero");
  BigFloat lo(bits), hi(bits);
  mpfr_log(lo.get(), x.lo().get(), MPFR_RNDD);
  mpfr_log(hi.get(), x.hi().get(), MPFR_RNDU);
  return DyadicInterval(std::move(lo), std::move(hi));
}

DyadicInterval sqrt(const DyadicInterval& x, mpfr_prec_t bits) { return root(x, 2, bits); }

DyadicInterval root(const DyadicInterval& x, unsigned long d, mpfr_prec_t bits) {
  if (d == 0) throw std::domain_error("zeroth root");
  if (mpfr_sgn(x.lo().get()) < 0) throw std::domain_error("root of a negative interval");
  BigFloat lo(bits), hi(bits);
  mpfr_rootn_ui(lo.get(), x.lo().get(), d, MPFR_RNDD);
  mpfr_rootn_ui(hi.get(), x.hi().get(), d, MPFR_RNDU);
  return DyadicInterval(std::move(lo), std::move(hi));
}

DyadicInterval max(const DyadicInterval& a, const DyadicInterval& b) {
  const mpfr_prec_t bits = joint_precision(a, b);
  BigFloat lo(bits), hi(bits);
  mpfr_max(lo.get(), a.lo().get(), b.lo().get(), MPFR_RNDD);
  mpfr_max(hi.get(), a.hi().get(), b.hi().get(), MPFR_RNDU);
  return DyadicInterval(std::move(lo), std::move(hi));
}

DyadicInterval hull(const DyadicInterval& a, const DyadicInterval& b) {
  const mpfr_prec_t bits = joint_precision(a, b);
  BigFloat lo(bits), hi(bits);
  mpfr_min(lo.get(), a.lo().get(), b.lo().get(), MPFR_RNDD);
  mpfr_max(hi.get(), a.hi().get(), b.hi().get(), MPFR_RNDU);
  return DyadicInterval(std::move(lo), std::move(hi));
}

}  // namespace bpfree
