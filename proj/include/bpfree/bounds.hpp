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

// Closed-form upper and lower bounds on F(n, r), evaluated with certified
// interval arithmetic and checked against the exact maximum.

#include <compare>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "bpfree/chains.hpp"
#include "bpfree/radical.hpp"
#include "bpfree/solver.hpp"

namespace bpfree {

// exact_part + remainder, where the remainder is transcendental (or absent)
// and is enclosed on demand at a requested precision.
class CertifiedValue {
 public:
  using Remainder = std::function<DyadicInterval(unsigned long precision)>;

  CertifiedValue() = default;
  explicit CertifiedValue(RadicalSum exact, Remainder remainder = {})
      : exact_(std::move(exact)), remainder_(std::move(remainder)) {}

  const RadicalSum& exact_part() const { return exact_; }
  bool is_algebraic() const { return !remainder_; }
  // Enclosure of the remainder alone ([0, 0] when algebraic).
  DyadicInterval remainder(unsigned long precision) const;
  DyadicInterval enclose(unsigned long precision) const;

 private:
  RadicalSum exact_;
  Remainder remainder_;
};

// Precision used when the first comparison is inconclusive.
inline constexpr unsigned long kEscalatedPrecision = 256;

// Ordering of `value` relative to `bound`. Exact when the bound is algebraic;
// otherwise by enclosures at `precision`, then once more at 256 bits.
// Returns nullopt if the enclosures still overlap.
std::optional<std::strong_ordering> certified_compare(const RadicalSum& value, const CertifiedValue& bound,
                                                      unsigned long precision = 64);

enum class Verdict { kTrue, kFalse, kUndecided };
const char* to_string(Verdict v);

// Three upper bounds for one term [r binom(n-b, n-d)]^(1/d), 1 <= b <= d <= n:
//   young   = r^(1/b) + n - b
//   refined = r^(1/b) + e n / b - e
//   wbased  = r^(1/b) exp(W(n / (b r^(1/b))))
struct TermBounds {
  CertifiedValue young;
  CertifiedValue refined;
  CertifiedValue wbased;
};
TermBounds term_upper_bounds(unsigned long b, unsigned long d, unsigned long n, const Integer& r);

// n(n-1)/2 + sum_b r^(1/b).
RadicalSum upper_simple(unsigned long n, const Integer& r);
// r = 1: max{n+1, n(log log n + 2.34)}; r >= 2: r + n - 1 + sqrt(r) n (log log n + 2.34).
// Throws std::domain_error for n < 2.
CertifiedValue upper_loglog(unsigned long n, const Integer& r);
// e n log n + sum_b r^(1/b).
CertifiedValue upper_enlogn(unsigned long n, const Integer& r);

// max{ r^(1/n) n log log n / (4e), sum_b r^(1/b) }. Requires n >= 2.
struct EasyLower {
  DyadicInterval log_term;  // first argument, at the requested precision
  RadicalSum root_sum;      // second argument, exact
  CertifiedValue value;     // the maximum
};
EasyLower lower_easy(unsigned long n, const Integer& r, unsigned long precision = 64);

// Chain with b = (n, floor(n/10), ..., 1) and d_j = b_j + ceil(b_j W(n/b_j)),
// scored at r = 1 against n log log n / (4e).
struct LowerConstruction {
  unsigned long n = 0;
  Chain chain;
  std::vector<Violation> violations;
  bool gap_two = false;        // d_j - d_{j+1} >= 2 for 1 <= j <= s (d_{s+1} = 0)
  bool window_holds = false;   // b W(n/b) <= d - b <= 2 b W(n/b) for every j >= 1
  std::optional<RadicalSum> value;  // f(chain, n, 1), when the chain is feasible
  DyadicInterval target;
  Verdict meets_target = Verdict::kUndecided;
  bool n_at_least_10 = false;  // n >= 10
  bool n_at_least_110 = false;  // n >= 110
};

class ConstructionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// For n >= 110 an infeasible chain throws ConstructionError; below that the
// result is reported as-is. Requires n >= 2.
LowerConstruction lower_construction(unsigned long n, unsigned long precision = 64);

struct ThresholdCertificate {
  Integer r;
  bool equal = false;  // F(n, r) == sum_b r^(1/b), canonical equality
  RadicalSum f_value;
  RadicalSum root_sum;
};

struct LargeRThreshold {
  std::optional<Integer> r0;  // smallest r0 with equality on all of [r0, r_limit]
  std::vector<ThresholdCertificate> certificates;  // ascending r
};

inline constexpr unsigned long kThresholdMaxN = 6;
// Throws GuardError unless 2 <= n <= 6; std::domain_error if r_limit < 1.
LargeRThreshold large_r_threshold(unsigned long n, unsigned long r_limit);

enum class BoundKind { kUpper, kLower };

struct BoundEntry {
  std::string name;
  BoundKind kind;
  CertifiedValue value;
  DyadicInterval enclosure;
  Verdict dominates_F;  // bound > F, when F was computed
};

struct BoundReportOptions {
  unsigned long precision = 64;
  bool with_construction = false;
  unsigned long solve_limit = 60;  // F is computed only for n <= solve_limit
};

struct BoundReport {
  unsigned long n = 0;
  Integer r;
  unsigned long precision = 64;
  std::optional<SolveResult> F;
  std::vector<BoundEntry> entries;
  std::optional<LowerConstruction> construction;
};

// Throws std::domain_error for n < 2 or r < 1.
BoundReport build_bound_report(unsigned long n, const Integer& r, const BoundReportOptions& options = {});

// One row per n = 2..n_max, for plotting.
struct SweepRow {
  unsigned long n = 0;
  std::optional<DyadicInterval> F;
  DyadicInterval young_sum;
  DyadicInterval enlogn_sum;
  DyadicInterval loglog_thm;
  DyadicInterval easy_lower;
};
std::vector<SweepRow> bound_sweep(unsigned long n_max, const Integer& r, const BoundReportOptions& options = {});

}  // namespace bpfree
