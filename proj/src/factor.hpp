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

#include <gmpxx.h>

#include <utility>
#include <vector>

namespace bpfree::detail {

// Default bound for trial division.
inline constexpr unsigned long kTrialDivisionLimit = 1000000;

// Factors k >= 1 into pairwise coprime bases with multiplicities. Bases below
// the trial limit are primes; larger cofactors are split by perfect-power
// detection and Pollard-Brent, and may (with negligible probability) be
// composite pseudo-primes, which does not affect the radical canonical form.
// The result is sorted by base.
std::vector<std::pair<mpz_class, unsigned long>> factorize(const mpz_class& k,
                                                           unsigned long trial_limit = kTrialDivisionLimit);

}  // namespace bpfree::detail
