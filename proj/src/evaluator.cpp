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

#include "bpfree/evaluator.hpp"

namespace bpfree {
namespace {

void require_valid(const std::vector<Violation>& violations, const char* what) {
  if (violations.empty()) return;
  std::string message = std::string(what) + ": " + violations.front().message;
  if (violations.size() > 1) message += " (and " + std::to_string(violations.size() - 1) + " more)";
  throw InvalidChainError(message, violations);
}

RadicalSum binomial_root(unsigned long n, const Rational& b, unsigned long d, const Integer& multiplier) {
  const Integer top = Integer(n) - ceil(b);
  return RadicalSum::radical(Rational(1), multiplier * binomial(top.get_ui(), n - d), d);
}

}  // namespace

RadicalSum term_value(const Rational& b, unsigned long d, unsigned long n, const Integer& r) {
  if (sgn(b) <= 0) throw std::domain_error("term_value: b must be positive");
  if (d > n) throw std::domain_error("term_value: d exceeds n");
  if (b > Rational(d)) throw std::domain_error("term_value: b exceeds d");
  if (r < 1) throw std::domain_error("term_value: r must be positive");
  return binomial_root(n, b, d, r);
}

RadicalSum f_eval(const Chain& c, const Integer& r) {
  require_valid(validate_chain(c), "f_eval");
  if (r < 1) throw std::domain_error("f_eval: r must be positive");
  std::vector<RadicalTerm> terms;
  for (std::size_t i = 0; i <= c.s(); ++i) {
    const Rational width = c.b(i) - c.b(i + 1);
    const Integer top = Integer(c.n) - ceil(c.b(i));
    terms.push_back({width, r * binomial(top.get_ui(), c.n - c.d(i)), c.d(i)});
  }
  return RadicalSum::from_terms(terms);
}

RadicalSum g_eval(const SixfoldProfile& p) {
  require_valid(validate_profile(p), "g_eval");
  const Chain& c = p.chain;
  std::vector<RadicalTerm> terms;
  for (std::size_t i = 0; i <= c.s(); ++i) {
    const Integer m = i == 0 ? Integer(1) : p.m[i - 1];
    terms.push_back({c.b(i) - c.b(i + 1), m, c.d(i)});
  }
  return RadicalSum::from_terms(terms);
}

RadicalSum g_bound_nonintegral(const Chain& prefix, const Integer& m_i) {
  require_valid(validate_chain(prefix), "g_bound_nonintegral");
  if (!prefix.is_integral()) throw std::invalid_argument("g_bound_nonintegral: prefix must be integral");
  if (m_i < 3) throw std::invalid_argument("g_bound_nonintegral: m_i must be at least 3");
  const std::size_t last = prefix.steps.size() - 1;
  if (prefix.d(last) <= 2) throw std::invalid_argument("g_bound_nonintegral: last prefix d must exceed 2");
  if (prefix.b(last) < 1) throw std::invalid_argument("g_bound_nonintegral: last prefix b must be at least 1");
  const Rational curve_b = Rational(2) / Rational(m_i);
  std::vector<RadicalTerm> terms;
  for (std::size_t j = 0; j <= last; ++j) {
    const Rational next = j < last ? prefix.b(j + 1) : curve_b;
    const Integer top = Integer(prefix.n) - ceil(prefix.b(j));
    terms.push_back({prefix.b(j) - next, binomial(top.get_ui(), prefix.n - prefix.d(j)), prefix.d(j)});
  }
  // 2 / m^(1/2) = (2/m) * m^(1/2)
  terms.push_back({curve_b, m_i, 2});
  return RadicalSum::from_terms(terms);
}

SumBound sumbound_upper(unsigned long n, const Integer& r) {
  if (n < 1) throw std::domain_error("sumbound_upper: n must be positive");
  if (r < 1) throw std::domain_error("sumbound_upper: r must be positive");
  SumBound out;
  for (unsigned long b = 1; b <= n; ++b) {
    RadicalSum best = term_value(Rational(static_cast<long>(b)), b, n, r);
    unsigned long best_d = b;
    for (unsigned long d = b + 1; d <= n; ++d) {
      RadicalSum candidate = term_value(Rational(static_cast<long>(b)), d, n, r);
      if (compare(candidate, best) > 0) {
        best = std::move(candidate);
        best_d = d;
      }
    }
    out.value += best;
    out.maximizing_d.push_back(best_d);
  }
  return out;
}

}  // namespace bpfree
