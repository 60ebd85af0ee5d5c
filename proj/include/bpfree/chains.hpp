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

// Feasible (b, d) chains and their multiplicity-refined profiles.
//
// A chain for dimension n is (b_0, d_0) = (n, n), (b_1, d_1), ..., (b_s, d_s)
// with b strictly decreasing and positive, d strictly decreasing and positive,
// and b_i <= d_i. The terminal pair (0, 0) is implicit.

#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "bpfree/radical.hpp"

namespace bpfree {

struct ChainStep {
  Rational b;
  unsigned long d = 0;
  friend bool operator==(const ChainStep&, const ChainStep&) = default;
};

struct Chain {
  unsigned long n = 0;
  std::vector<ChainStep> steps;  // includes the leading (n, n)

  // Convenience for integral chains: {{b0, d0}, {b1, d1}, ...}.
  static Chain integral(unsigned long n, const std::vector<std::pair<long, unsigned long>>& pairs);

  // Number of non-leading steps.
  std::size_t s() const { return steps.empty() ? 0 : steps.size() - 1; }
  // b_i and d_i with the implicit terminal b_{s+1} = d_{s+1} = 0.
  Rational b(std::size_t i) const { return i < steps.size() ? steps[i].b : Rational(0); }
  unsigned long d(std::size_t i) const { return i < steps.size() ? steps[i].d : 0; }
  bool is_integral() const;

  friend bool operator==(const Chain&, const Chain&) = default;
};

struct SixfoldProfile {
  Chain chain;
  std::vector<Integer> m;  // m_1 .. m_s; m_0 = 1 is implicit
  friend bool operator==(const SixfoldProfile&, const SixfoldProfile&) = default;
};

enum class ViolationKind {
  kBadDimension,        // n < 1
  kBadLeadingPair,      // (b_0, d_0) != (n, n) or no steps
  kBNotDecreasing,
  kDNotDecreasing,
  kBNotPositive,
  kDNotPositive,
  kBExceedsD,
  kMultiplicityCount,   // m has the wrong length
  kMultiplicityNotPositive,
  kMultiplicityCap,     // m_i > binom(n - ceil(b_i), n - d_i)
  kCurveDiscrepancy,    // d_i = 2 but b_i > 2 / m_i
  kCodimensionOne,      // d_1 = n - 1
};

struct Violation {
  ViolationKind kind;
  std::size_t index;  // step index i the condition refers to
  std::string message;
};

std::vector<Violation> validate_chain(const Chain& c);
std::vector<Violation> validate_profile(const SixfoldProfile& p);

// binom(n, k) over arbitrary-size integers; 0 when k > n.
Integer binomial(unsigned long n, unsigned long k);
Integer ceil(const Rational& q);

// Visits every valid chain with integral b exactly once, depth-first: each
// chain is visited before its extensions, and extensions are tried in order of
// decreasing next b, then decreasing next d.
void for_each_integer_chain(unsigned long n, const std::function<void(const Chain&)>& visit);
std::vector<Chain> enumerate_integer_chains(unsigned long n);

// "b=[6,4]; d=[6,4]" and "b=[6,4]; d=[6,4]; m=[1]".
std::string format_chain(const Chain& c);
std::string format_profile(const SixfoldProfile& p);
// Comma-separated vector bodies, e.g. "[6,4]" / "[6,2/3]".
std::string format_b_vector(const Chain& c);
std::string format_d_vector(const Chain& c);
// Inverses of the formatters. n is taken from b_0. Throw ParseError.
Chain parse_chain(std::string_view text);
SixfoldProfile parse_profile(std::string_view text);

}  // namespace bpfree
