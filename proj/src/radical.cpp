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

#include "bpfree/radical.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <optional>
#include <ostream>
#include <regex>
#include <tuple>

#include "factor.hpp"

namespace bpfree {

namespace {

struct CanonicalRadical {
  Integer extracted;  // multiplies the coefficient
  Integer radicand;
  unsigned long index;
};

CanonicalRadical canonical_radical(const Integer& k, unsigned long d) {
  static std::mutex mutex;
  static std::map<std::pair<Integer, unsigned long>, CanonicalRadical> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find({k, d}); it != cache.end()) return it->second;
  }
  CanonicalRadical out{1, 1, 1};
  std::vector<std::pair<Integer, unsigned long>> remainder;
  unsigned long g = d;
  for (const auto& [p, e] : detail::factorize(k)) {
    if (e / d > 0) {
      Integer power;
      mpz_pow_ui(power.get_mpz_t(), p.get_mpz_t(), e / d);
      out.extracted *= power;
    }
    if (e % d != 0) {
      remainder.emplace_back(p, e % d);
      g = std::gcd(g, e % d);
    }
  }
  if (!remainder.empty()) {
    out.index = d / g;
    for (const auto& [p, e] : remainder) {
      Integer power;
      mpz_pow_ui(power.get_mpz_t(), p.get_mpz_t(), e / g);
      out.radicand *= power;
    }
  }
  std::lock_guard lock(mutex);
  cache.emplace(std::make_pair(k, d), out);
  return out;
}

// Enclosure of k^(1/d) with `bits` fractional bits: [a, a+1] * 2^-bits where
// a = floor(k^(1/d) * 2^bits), computed by integer root extraction.
DyadicInterval root_enclosure(const Integer& k, unsigned long d, unsigned long bits) {
  using Key = std::tuple<Integer, unsigned long, unsigned long>;
  static std::mutex mutex;
  static std::map<Key, DyadicInterval> cache;
  Key key{k, d, bits};
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  Integer shifted;
  mpz_mul_2exp(shifted.get_mpz_t(), k.get_mpz_t(), d * bits);
  Integer a;
  const bool exact = mpz_root(a.get_mpz_t(), shifted.get_mpz_t(), d) != 0;
  const long exponent = -static_cast<long>(bits);
  BigFloat lo = BigFloat::exact_dyadic(a, exponent);
  BigFloat hi = BigFloat::exact_dyadic(exact ? a : Integer(a + 1), exponent);
  DyadicInterval out(std::move(lo), std::move(hi));
  std::lock_guard lock(mutex);
  cache.emplace(std::move(key), out);
  return out;
}

bool term_key_less(const RadicalTerm& a, const RadicalTerm& b) {
  if (a.index != b.index) return a.index < b.index;
  return a.radicand < b.radicand;
}

bool same_key(const RadicalTerm& a, const RadicalTerm& b) { return a.index == b.index && a.radicand == b.radicand; }

unsigned long bit_length(std::size_t v) {
  unsigned long n = 0;
  while (v > 0) {
    ++n;
    v >>= 1;
  }
  return n;
}

}  // namespace

RadicalTerm canonicalize_term(Rational coeff, const Integer& k, unsigned long d) {
  if (k < 1) throw std::invalid_argument("radicand must be a positive integer");
  if (d < 1) throw std::invalid_argument("root index must be positive");
  if (coeff == 0) return {Rational(0), 1, 1};
  if (k == 1) return {coeff, 1, 1};
  if (d == 1) return {coeff * k, 1, 1};
  const CanonicalRadical c = canonical_radical(k, d);
  coeff *= c.extracted;
  return {coeff, c.radicand, c.index};
}

struct RadicalSum::Impl {
  std::vector<RadicalTerm> terms;
  mutable std::once_flag quick_once;
  mutable std::optional<DyadicInterval> quick;
};

RadicalSum::RadicalSum() : impl_(std::make_shared<const Impl>()) {}

RadicalSum::RadicalSum(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

RadicalSum::RadicalSum(const Rational& q) {
  auto impl = std::make_shared<Impl>();
  if (q != 0) impl->terms.push_back({q, 1, 1});
  impl_ = std::move(impl);
}

RadicalSum RadicalSum::radical(const Rational& coeff, const Integer& k, unsigned long d) {
  RadicalTerm t = canonicalize_term(coeff, k, d);
  auto impl = std::make_shared<Impl>();
  if (t.coeff != 0) impl->terms.push_back(std::move(t));
  return RadicalSum(std::move(impl));
}

RadicalSum RadicalSum::from_terms(const std::vector<RadicalTerm>& terms) {
  std::vector<RadicalTerm> canonical;
  canonical.reserve(terms.size());
  for (const auto& t : terms) {
    RadicalTerm c = canonicalize_term(t.coeff, t.radicand, t.index);
    if (c.coeff != 0) canonical.push_back(std::move(c));
  }
  std::sort(canonical.begin(), canonical.end(), term_key_less);
  auto impl = std::make_shared<Impl>();
  for (auto& t : canonical) {
    if (!impl->terms.empty() && same_key(impl->terms.back(), t)) {
      impl->terms.back().coeff += t.coeff;
      if (impl->terms.back().coeff == 0) impl->terms.pop_back();
    } else {
      impl->terms.push_back(std::move(t));
    }
  }
  return RadicalSum(std::move(impl));
}

const std::vector<RadicalTerm>& RadicalSum::terms() const { return impl_->terms; }

bool RadicalSum::is_rational() const {
  const auto& t = terms();
  return t.empty() || (t.size() == 1 && t.front().is_rational());
}

Rational RadicalSum::rational_part() const {
  const auto& t = terms();
  if (!t.empty() && t.front().is_rational()) return t.front().coeff;
  return Rational(0);
}

std::string RadicalSum::to_string() const {
  const auto& t = terms();
  if (t.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i > 0) out += " + ";
    out += t[i].coeff.get_str();
    if (!t[i].is_rational()) {
      out += " * " + t[i].radicand.get_str() + "^(1/" + std::to_string(t[i].index) + ")";
    }
  }
  return out;
}

RadicalSum RadicalSum::parse(std::string_view text) {
  static const std::regex term_re(
      R"(^\s*(-?\d+)(?:/(\d+))?\s*(?:\*\s*(\d+)\s*\^\s*\(\s*1\s*/\s*(\d+)\s*\))?\s*$)");
  std::vector<RadicalTerm> terms;
  std::size_t start = 0;
  const std::string s(text);
  if (s.find_first_not_of(" \t") == std::string::npos) throw ParseError("empty radical sum");
  while (true) {
    const std::size_t plus = s.find('+', start);
    const std::string token = s.substr(start, plus == std::string::npos ? std::string::npos : plus - start);
    std::smatch m;
    if (!std::regex_match(token, m, term_re)) throw ParseError("malformed radical term: '" + token + "'");
    Integer num(m[1].str());
    Integer den = m[2].matched ? Integer(m[2].str()) : Integer(1);
    if (den == 0) throw ParseError("zero denominator in '" + token + "'");
    RadicalTerm t{make_rational(num, den), 1, 1};
    if (m[3].matched) {
      t.radicand = Integer(m[3].str());
      if (t.radicand < 1) throw ParseError("radicand must be positive in '" + token + "'");
      const Integer index(m[4].str());
      if (index < 1 || !index.fits_ulong_p()) throw ParseError("bad root index in '" + token + "'");
      t.index = index.get_ui();
    }
    terms.push_back(std::move(t));
    if (plus == std::string::npos) break;
    start = plus + 1;
  }
  return from_terms(terms);
}

DyadicInterval RadicalSum::enclose(unsigned long precision) const {
  if (precision < 1) throw std::invalid_argument("precision must be at least 1 bit");
  const auto& t = terms();
  if (t.empty()) return DyadicInterval::point(0, static_cast<mpfr_prec_t>(precision));
  const Rational tolerance_unit = [&] {
    Rational u(1);
    mpq_div_2exp(u.get_mpq_t(), u.get_mpq_t(), precision - 1);
    return u;
  }();
  for (unsigned long extra = 16;; extra *= 2) {
    const unsigned long bits = precision + extra + bit_length(t.size());
    DyadicInterval acc = DyadicInterval::point(0, static_cast<mpfr_prec_t>(bits));
    for (const auto& term : t) {
      if (term.is_rational()) {
        acc = acc + DyadicInterval::enclose(term.coeff, static_cast<mpfr_prec_t>(bits));
      } else {
        acc = acc + root_enclosure(term.radicand, term.index, bits).scaled(term.coeff);
      }
    }
    Rational magnitude(1);
    if (!acc.contains_zero()) {
      const Rational lo = abs(acc.lo_rational());
      const Rational hi = abs(acc.hi_rational());
      magnitude = std::max(Rational(1), std::min(lo, hi));
    }
    if (acc.width() <= tolerance_unit * magnitude) return acc;
  }
}

const DyadicInterval& RadicalSum::quick_enclosure() const {
  std::call_once(impl_->quick_once, [this] { impl_->quick = enclose(64); });
  return *impl_->quick;
}

RadicalSum operator+(const RadicalSum& a, const RadicalSum& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  const auto& x = a.terms();
  const auto& y = b.terms();
  auto impl = std::make_shared<RadicalSum::Impl>();
  impl->terms.reserve(x.size() + y.size());
  std::size_t i = 0, j = 0;
  while (i < x.size() || j < y.size()) {
    if (j == y.size() || (i < x.size() && term_key_less(x[i], y[j]))) {
      impl->terms.push_back(x[i++]);
    } else if (i == x.size() || term_key_less(y[j], x[i])) {
      impl->terms.push_back(y[j++]);
    } else {
      Rational c = x[i].coeff + y[j].coeff;
      if (c != 0) impl->terms.push_back({std::move(c), x[i].radicand, x[i].index});
      ++i;
      ++j;
    }
  }
  return RadicalSum(std::move(impl));
}

RadicalSum operator-(const RadicalSum& a) { return Rational(-1) * a; }

RadicalSum operator-(const RadicalSum& a, const RadicalSum& b) { return a + (-b); }

RadicalSum operator*(const Rational& q, const RadicalSum& a) {
  if (q == 0 || a.is_zero()) return RadicalSum();
  if (q == 1) return a;
  auto impl = std::make_shared<RadicalSum::Impl>();
  impl->terms = a.terms();
  for (auto& t : impl->terms) t.coeff *= q;
  return RadicalSum(std::move(impl));
}

bool operator==(const RadicalSum& a, const RadicalSum& b) {
  return a.impl_ == b.impl_ || a.terms() == b.terms();
}

std::strong_ordering compare(const RadicalSum& a, const RadicalSum& b) {
  if (a == b) return std::strong_ordering::equal;
  const DyadicInterval& qa = a.quick_enclosure();
  const DyadicInterval& qb = b.quick_enclosure();
  if (qa.certainly_less(qb)) return std::strong_ordering::less;
  if (qb.certainly_less(qa)) return std::strong_ordering::greater;
  const RadicalSum diff = a - b;
  if (diff.is_rational()) return sgn(diff.rational_part()) < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  for (unsigned long precision = 64;; precision *= 2) {
    const DyadicInterval enclosure = diff.enclose(precision);
    if (enclosure.certainly_positive()) return std::strong_ordering::greater;
    if (enclosure.certainly_negative()) return std::strong_ordering::less;
  }
}

Integer floor_certified(const RadicalSum& a) {
  if (a.is_rational()) {
    const Rational q = a.rational_part();
    Integer out;
    mpz_fdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return out;
  }
  for (unsigned long precision = 64;; precision *= 2) {
    const DyadicInterval enclosure = precision == 64 ? a.quick_enclosure() : a.enclose(precision);
    const Rational lo = enclosure.lo_rational();
    Integer n;
    mpz_fdiv_q(n.get_mpz_t(), lo.get_num_mpz_t(), lo.get_den_mpz_t());
    if (enclosure.hi_rational() < Rational(n + 1)) return n;
  }
}

RadicalSum sum_of_roots(const Integer& r, unsigned long n) {
  std::vector<RadicalTerm> terms;
  for (unsigned long b = 1; b <= n; ++b) terms.push_back({Rational(1), r, b});
  return RadicalSum::from_terms(terms);
}

std::ostream& operator<<(std::ostream& os, const RadicalSum& a) { return os << a.to_string(); }

}  // namespace bpfree
