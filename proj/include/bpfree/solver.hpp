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

// Exact maximization of f over all chains (F(n, r)) and the certified sixfold
// bound on the multiplicity-refined objective g.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "bpfree/chains.hpp"
#include "bpfree/radical.hpp"

namespace bpfree {

class GuardError : public std::length_error {
 public:
  using std::length_error::length_error;
};

struct SolveStats {
  std::uint64_t states = 0;
  std::uint64_t candidates = 0;
};

// A profile whose first non-integral entry is (b_i, d_i) = (2/m, 2), scored by
// g_bound_nonintegral over the integral prefix.
struct NonintegralCandidate {
  Chain prefix;
  Integer m;
  friend bool operator==(const NonintegralCandidate&, const NonintegralCandidate&) = default;
};

using Witness = std::variant<Chain, SixfoldProfile, NonintegralCandidate>;

struct SolveResult {
  RadicalSum value;
  Witness witness;
  Integer floor;
  SolveStats stats;
};

std::string describe_witness(const Witness& w);

// Dynamic program over states (b, d): M(b, d) is the best completion of a
// chain whose current pair is (b, d), F = M(n, n). Among maximizers the
// witness is the shortest chain, then the lexicographically smallest
// d-vector, then the lexicographically smallest b-vector.
SolveResult solve_F(unsigned long n, const Integer& r);

inline constexpr unsigned long kBruteForceMaxN = 8;
// Exhaustive maximization over enumerate_integer_chains(n), same tie-breaking.
// Throws GuardError for n > kBruteForceMaxN.
SolveResult solve_F_bruteforce(unsigned long n, const Integer& r);

// Maximum over (A) integral profiles with each m_i at its largest feasible
// value and (B) curve candidates scored by g_bound_nonintegral. This is an
// upper bound for the refined maximum G(n). Requires n >= 2.
SolveResult solve_G_sixfold(unsigned long n);

struct TableCell {
  unsigned long n;
  Integer r;
  Integer floor;
  RadicalSum value;
  Chain witness;
};

// One cell per (r, n), r in the given order, n = 2..n_max ascending.
std::vector<TableCell> build_table(unsigned long n_max, const std::vector<Integer>& r_values);

}  // namespace bpfree
