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

// Exact evaluation of the chain objectives.

#include <stdexcept>
#include <vector>

#include "bpfree/chains.hpp"
#include "bpfree/radical.hpp"

namespace bpfree {

// Raised when an objective is evaluated on an infeasible chain or profile.
class InvalidChainError : public std::invalid_argument {
 public:
  InvalidChainError(const std::string& what, std::vector<Violation> violations)
      : std::invalid_argument(what), violations_(std::move(violations)) {}
  const std::vector<Violation>& violations() const { return violations_; }

 private:
  std::vector<Violation> violations_;
};

// [r * binom(n - ceil(b), n - d)]^(1/d). Requires 0 < b <= d <= n.
// Throws std::domain_error otherwise.
RadicalSum term_value(const Rational& b, unsigned long d, unsigned long n, const Integer& r);

// f = sum_{i=0}^{s} (b_i - b_{i+1}) [r binom(n - ceil(b_i), n - d_i)]^(1/d_i).
RadicalSum f_eval(const Chain& c, const Integer& r);

// g = sum_{i=0}^{s} (b_i - b_{i+1}) m_i^(1/d_i) with m_0 = 1.
RadicalSum g_eval(const SixfoldProfile& p);

// Upper bound on g over profiles whose first non-integral entry sits on a
// curve (d_i = 2, b_i = 2/m_i) after the integral prefix (b_0,d_0)..(b_{i-1},d_{i-1}):
//   sum_{j<=i-2} (b_j - b_{j+1}) binom_j^(1/d_j)
//     + (b_{i-1} - 2/m_i) binom_{i-1}^(1/d_{i-1}) + 2 / m_i^(1/2),
// binom_j = binom(n - ceil(b_j), n - d_j). The prefix must be a valid integral
// chain with d_{i-1} > 2 and b_{i-1} >= 1; m_i >= 3. Throws std::invalid_argument.
RadicalSum g_bound_nonintegral(const Chain& prefix, const Integer& m_i);

// sum_{b=1}^{n} max_{b <= d <= n} [r binom(n - b, n - d)]^(1/d).
struct SumBound {
  RadicalSum value;
  std::vector<unsigned long> maximizing_d;  // entry b-1 is d(b); ties go to the smaller d
};
SumBound sumbound_upper(unsigned long n, const Integer& r);

}  // namespace bpfree
