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

#include "factor.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

namespace bpfree::detail {
namespace {

std::vector<unsigned long> primes_up_to(unsigned long limit) {
  std::vector<bool> composite(limit + 1, false);
  std::vector<unsigned long> primes;
  for (unsigned long i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    primes.push_back(i);
    for (unsigned long j = i * i; j <= limit; j += i) composite[j] = true;
  }
  return primes;
}

const std::vector<unsigned long>& prime_table(unsigned long limit) {
  static std::mutex mutex;
  static std::map<unsigned long, std::vector<unsigned long>> tables;
  std::lock_guard lock(mutex);
  auto it = tables.find(limit);
  if (it == tables.end()) it = tables.emplace(limit, primes_up_to(limit)).first;
  return it->second;
}

// Returns a nontrivial factor of the odd composite n.
mpz_class pollard_brent(const mpz_class& n) {
  for (unsigned long c = 1;; ++c) {
    mpz_class x = 2, y = 2, d = 1;
    auto step = [&](mpz_class& v) {
      v = v * v + c;
      v %= n;
    };
    while (d == 1) {
      step(x);
      step(y);
      step(y);
      mpz_class diff = abs(x - y);
      d = gcd(diff, n);
    }
    if (d != n) return d;
  }
}

bool probably_prime(const mpz_class& n) { return mpz_probab_prime_p(n.get_mpz_t(), 40) > 0; }

void split_large(const mpz_class& n, unsigned long multiplicity, std::map<mpz_class, unsigned long>& out) {
  if (n == 1) return;
  // Largest exponent j with n = t^j.
  const auto bits = mpz_sizeinbase(n.get_mpz_t(), 2);
  for (unsigned long j = mpz_perfect_power_p(n.get_mpz_t()) ? bits : 1; j >= 2; --j) {
    mpz_class t;
    if (mpz_root(t.get_mpz_t(), n.get_mpz_t(), j) != 0) {
      split_large(t, multiplicity * j, out);
      return;
    }
  }
  if (probably_prime(n)) {
    out[n] += multiplicity;
    return;
  }
  mpz_class d = pollard_brent(n);
  mpz_class rest = n / d;
  split_large(d, multiplicity, out);
  split_large(rest, multiplicity, out);
}

// Refines the factor map into pairwise coprime bases (needed only if a
// pseudo-prime from the probabilistic branch shares a factor with another).
void coprime_refine(std::map<mpz_class, unsigned long>& factors) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto a = factors.begin(); a != factors.end() && !changed; ++a) {
      for (auto b = std::next(a); b != factors.end(); ++b) {
        mpz_class g = gcd(a->first, b->first);
        if (g == 1) continue;
        std::map<mpz_class, unsigned long> next;
        for (const auto& [base, mult] : factors) {
          if (base == a->first || base == b->first) continue;
          next[base] += mult;
        }
        const mpz_class ga = a->first / g, gb = b->first / g;
        next[g] += a->second + b->second;
        if (ga != 1) next[ga] += a->second;
        if (gb != 1) next[gb] += b->second;
        factors = std::move(next);
        changed = true;
        break;
      }
    }
  }
}

}  // namespace

std::vector<std::pair<mpz_class, unsigned long>> factorize(const mpz_class& k, unsigned long trial_limit) {
  if (k < 1) throw std::invalid_argument("factorize: argument must be positive");
  std::map<mpz_class, unsigned long> factors;
  mpz_class rest = k;
  for (unsigned long p : prime_table(std::max(trial_limit, 2UL))) {
    if (rest == 1) break;
    if (mpz_class(p) * p > rest) {
      factors[rest] += 1;
      rest = 1;
      break;
    }
    unsigned long e = 0;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
      mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
      ++e;
    }
    if (e > 0) factors[mpz_class(p)] += e;
  }
  if (rest != 1) {
    split_large(rest, 1, factors);
    coprime_refine(factors);
  }
  return {factors.begin(), factors.end()};
}

}  // namespace bpfree::detail
