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

#include "bpfree/lambert_w.hpp"

#include <algorithm>
#include <stdexcept>

namespace bpfree {
namespace {

constexpr unsigned long kGuardBits = 32;
constexpr int kMaxNewtonSteps = 400;

// u(w) = w e^w rounded in direction `rnd` (u is increasing on w >= 0, and the
// product of two nonnegative factors rounded the same way bounds it).
BigFloat u_rounded(const BigFloat& w, mpfr_prec_t bits, mpfr_rnd_t rnd) {
  BigFloat e(bits), out(bits);
  mpfr_exp(e.get(), w.get(), rnd);
  mpfr_mul(out.get(), w.get(), e.get(), rnd);
  return out;
}

// Newton iteration on w e^w - x, safeguarded by bisection inside a bracket.
BigFloat approximate_w(const BigFloat& x, mpfr_prec_t bits) {
  BigFloat lo(bits), hi(bits), w(bits), f(bits), df(bits), step(bits), e(bits), tmp(bits);
  BigFloat e_const(bits);
  mpfr_set_ui(tmp.get(), 1, MPFR_RNDN);
  mpfr_exp(e_const.get(), tmp.get(), MPFR_RNDN);
  if (mpfr_greater_p(x.get(), e_const.get())) {
    BigFloat lx(bits), llx(bits);
    mpfr_log(lx.get(), x.get(), MPFR_RNDN);
    mpfr_log(llx.get(), lx.get(), MPFR_RNDN);
    mpfr_sub(lo.get(), lx.get(), llx.get(), MPFR_RNDN);
    mpfr_sub_ui(lo.get(), lo.get(), 1, MPFR_RNDN);
    if (mpfr_sgn(lo.get()) < 0) mpfr_set_zero(lo.get(), 1);
    mpfr_set(hi.get(), lx.get(), MPFR_RNDN);
    if (mpfr_cmp_ui(hi.get(), 1) < 0) mpfr_set_ui(hi.get(), 1, MPFR_RNDN);
  } else {
    mpfr_set_zero(lo.get(), 1);
    mpfr_set_ui(hi.get(), 1, MPFR_RNDN);
  }
  mpfr_add(w.get(), lo.get(), hi.get(), MPFR_RNDN);
  mpfr_div_2ui(w.get(), w.get(), 1, MPFR_RNDN);
  for (int i = 0; i < kMaxNewtonSteps; ++i) {
    mpfr_exp(e.get(), w.get(), MPFR_RNDN);
    mpfr_mul(f.get(), w.get(), e.get(), MPFR_RNDN);
    mpfr_sub(f.get(), f.get(), x.get(), MPFR_RNDN);
    if (mpfr_zero_p(f.get())) break;
    if (mpfr_sgn(f.get()) > 0) {
      mpfr_set(hi.get(), w.get(), MPFR_RNDN);
    } else {
      mpfr_set(lo.get(), w.get(), MPFR_RNDN);
    }
    mpfr_add_ui(df.get(), w.get(), 1, MPFR_RNDN);
    mpfr_mul(df.get(), df.get(), e.get(), MPFR_RNDN);
    mpfr_div(step.get(), f.get(), df.get(), MPFR_RNDN);
    mpfr_sub(tmp.get(), w.get(), step.get(), MPFR_RNDN);
    if (mpfr_lessequal_p(tmp.get(), lo.get()) || mpfr_greaterequal_p(tmp.get(), hi.get())) {
      mpfr_add(tmp.get(), lo.get(), hi.get(), MPFR_RNDN);
      mpfr_div_2ui(tmp.get(), tmp.get(), 1, MPFR_RNDN);
    }
    mpfr_sub(step.get(), tmp.get(), w.get(), MPFR_RNDN);
    mpfr_set(w.get(), tmp.get(), MPFR_RNDN);
    // Converged once the step is below the working resolution.
    if (mpfr_zero_p(step.get()) ||
        mpfr_get_exp(step.get()) < -static_cast<mpfr_exp_t>(bits) + 8 + std::max<mpfr_exp_t>(mpfr_get_exp(w.get()), 0)) {
      break;
    }
  }
  return w;
}

// Certified lower (want_lower) or upper bound of W(x) for a point x >= 0:
// a value w with u(w) <= x (resp. >= x) proven with directed rounding.
BigFloat certified_bound(const BigFloat& x, unsigned long precision, bool want_lower) {
  const mpfr_prec_t bits = static_cast<mpfr_prec_t>(precision + kGuardBits) +
                           std::max<mpfr_prec_t>(mpfr_get_exp(x.get()), 0) / 8 + 8;
  if (mpfr_zero_p(x.get())) return BigFloat(bits);
  const BigFloat w = approximate_w(x, bits);
  BigFloat eps(bits), candidate(bits);
  mpfr_set_ui(eps.get(), 1, MPFR_RNDN);
  mpfr_div_2ui(eps.get(), eps.get(), precision + 3, MPFR_RNDN);
  for (int attempt = 0; attempt < 64; ++attempt) {
    if (want_lower) {
      mpfr_sub(candidate.get(), w.get(), eps.get(), MPFR_RNDD);
      if (mpfr_sgn(candidate.get()) <= 0) return BigFloat(bits);
      if (mpfr_lessequal_p(u_rounded(candidate, bits, MPFR_RNDU).get(), x.get())) return candidate;
    } else {
      mpfr_add(candidate.get(), w.get(), eps.get(), MPFR_RNDU);
      if (mpfr_greaterequal_p(u_rounded(candidate, bits, MPFR_RNDD).get(), x.get())) return candidate;
    }
    mpfr_mul_2ui(eps.get(), eps.get(), 1, MPFR_RNDN);
  }
  throw std::logic_error("lambert_w: failed to certify enclosure");
}

}  // namespace

DyadicInterval lambert_w(const DyadicInterval& x, unsigned long precision) {
  if (mpfr_sgn(x.lo().get()) < 0) throw std::domain_error("lambert_w: argument must be nonnegative");
  BigFloat lo = certified_bound(x.lo(), precision, true);
  BigFloat hi = certified_bound(x.hi(), precision, false);
  return DyadicInterval(std::move(lo), std::move(hi));
}

DyadicInterval lambert_w(const Rational& x, unsigned long precision) {
  if (sgn(x) < 0) throw std::domain_error("lambert_w: argument must be nonnegative");
  const auto bits = static_cast<mpfr_prec_t>(precision + 2 * kGuardBits);
  return lambert_w(DyadicInterval::enclose(x, bits), precision);
}

DyadicInterval rational_root(const Integer& r, const Rational& b, mpfr_prec_t bits) {
  if (sgn(b) <= 0) throw std::domain_error("root index must be positive");
  if (r < 1) throw std::domain_error("root of a non-positive integer");
  const DyadicInterval base = DyadicInterval::point(r, bits);
  if (r == 1) return base;
  if (b.get_den() == 1 && b.get_num().fits_ulong_p()) return root(base, b.get_num().get_ui(), bits);
  // r^(1/b) = exp(log(r) / b)
  return exp(log(base, bits).scaled(Rational(1) / b), bits);
}

DyadicInterval delta(const Rational& b, const DyadicInterval& n, const Integer& r, unsigned long precision) {
  if (sgn(b) <= 0) throw std::domain_error("delta: b must be positive");
  const auto bits = static_cast<mpfr_prec_t>(precision + kGuardBits);
  const DyadicInterval denominator = rational_root(r, b, bits).scaled(b);
  const DyadicInterval w = lambert_w(n / denominator, precision + kGuardBits);
  return w.scaled(b);
}

DyadicInterval delta(const Rational& b, const Integer& n, const Integer& r, unsigned long precision) {
  return delta(b, DyadicInterval::point(n, static_cast<mpfr_prec_t>(precision + kGuardBits)), r, precision);
}

}  // namespace bpfree
