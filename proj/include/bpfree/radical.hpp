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

// Exact finite sums of rational multiples of real radicals, q_1 k_1^(1/d_1) + ...
//
// Every term is kept in a canonical form (radicand free of extractable powers,
// index minimal), so two sums denote the same real number exactly when their
// term lists coincide: real radicals whose pairwise ratios are irrational are
// linearly independent over Q. Ordering of distinct values is decided by
// refining interval enclosures, which always terminates.

#include <compare>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "bpfree/interval.hpp"

namespace bpfree {

// num/den in lowest terms.
inline Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw std::domain_error("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

struct RadicalTerm {
  Rational coeff;
  Integer radicand = 1;
  unsigned long index = 1;

  bool is_rational() const { return index == 1; }
  friend bool operator==(const RadicalTerm&, const RadicalTerm&) = default;
};

// Canonical term equal to coeff * k^(1/d). Perfect-power content of k moves
// into the coefficient and d is reduced to its minimum. Requires k >= 1,
// d >= 1; a zero coefficient yields the rational term 0.
RadicalTerm canonicalize_term(Rational coeff, const Integer& k, unsigned long d);

class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class RadicalSum {
 public:
  // Zero (the empty sum).
  RadicalSum();
  RadicalSum(const Rational& q);  // NOLINT: rationals embed implicitly
  RadicalSum(long q) : RadicalSum(Rational(q)) {}  // NOLINT

  // coeff * k^(1/d), canonicalized.
  static RadicalSum radical(const Rational& coeff, const Integer& k, unsigned long d);
  // Builds a sum from arbitrary (possibly non-canonical, repeated) terms.
  static RadicalSum from_terms(const std::vector<RadicalTerm>& terms);
  // Inverse of to_string(). Throws ParseError.
  static RadicalSum parse(std::string_view text);

  // Canonical terms, sorted by (index, radicand); the rational term first.
  const std::vector<RadicalTerm>& terms() const;
  bool is_zero() const { return terms().empty(); }
  bool is_rational() const;
  // Coefficient of the rational term (0 if absent).
  Rational rational_part() const;

  // Sorted "q * k^(1/d)" terms joined by " + "; rational term printed as "q".
  std::string to_string() const;

  // Enclosure of width <= 2^(1-precision) * max(1, |value|).
  DyadicInterval enclose(unsigned long precision) const;
  // enclose(64), computed once and cached.
  const DyadicInterval& quick_enclosure() const;

  friend RadicalSum operator+(const RadicalSum& a, const RadicalSum& b);
  friend RadicalSum operator-(const RadicalSum& a, const RadicalSum& b);
  friend RadicalSum operator-(const RadicalSum& a);
  friend RadicalSum operator*(const Rational& q, const RadicalSum& a);
  RadicalSum& operator+=(const RadicalSum& other) { return *this = *this + other; }

  // Canonical-form identity, which is real-number equality.
  friend bool operator==(const RadicalSum& a, const RadicalSum& b);

 private:
  struct Impl;
  explicit RadicalSum(std::shared_ptr<const Impl> impl);
  std::shared_ptr<const Impl> impl_;
};

inline RadicalSum add(const RadicalSum& a, const RadicalSum& b) { return a + b; }
inline RadicalSum scale(const Rational& q, const RadicalSum& a) { return q * a; }

// Certified real-number ordering. Equal iff canonical forms agree; otherwise
// enclosures of a - b are refined (64 bits, doubling) until the sign is known.
std::strong_ordering compare(const RadicalSum& a, const RadicalSum& b);

// Exact floor. Rational values are floored symbolically; irrational ones by
// refining an enclosure until it lies inside [n, n+1).
Integer floor_certified(const RadicalSum& a);

// Sum_{b=1}^{n} r^(1/b).
RadicalSum sum_of_roots(const Integer& r, unsigned long n);

std::ostream& operator<<(std::ostream& os, const RadicalSum& a);

}  // namespace bpfree
