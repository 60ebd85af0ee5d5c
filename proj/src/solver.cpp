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

#include "bpfree/solver.hpp"

#include <algorithm>
#include <optional>

#include "bpfree/evaluator.hpp"

namespace bpfree {
namespace {

// Preference among chains of equal value: shorter, then smaller d-vector,
// then smaller b-vector (both lexicographic).
bool tie_less(const std::vector<ChainStep>& a, const std::vector<ChainStep>& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].d != b[i].d) return a[i].d < b[i].d;
  }
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].b != b[i].b) return a[i].b < b[i].b;
  }
  return false;
}

class ChainProgram {
 public:
  ChainProgram(unsigned long n, Integer r) : n_(n), r_(std::move(r)), nodes_((n + 1) * (n + 1)), best_d_((n + 1) * (n + 1), 0) {}

  SolveResult run() {
    for (unsigned long b = 1; b <= n_; ++b) {
      for (unsigned long d = b; d <= n_; ++d) solve_state(b, d);
      update_prefix_best(b);
    }
    const Node& top = node(n_, n_);
    SolveResult out{top.value, Chain{n_, path(n_, n_)}, floor_certified(top.value), stats_};
    return out;
  }

 private:
  struct Node {
    RadicalSum value;
    unsigned long next_b = 0;  // 0: chain ends after this pair
    unsigned long next_d = 0;
  };

  Node& node(unsigned long b, unsigned long d) { return nodes_[b * (n_ + 1) + d]; }
  unsigned long& best_d(unsigned long b, unsigned long d_max) { return best_d_[b * (n_ + 1) + d_max]; }

  std::vector<ChainStep> path(unsigned long b, unsigned long d) {
    std::vector<ChainStep> out;
    while (b != 0) {
      out.push_back({Rational(static_cast<long>(b)), d});
      const Node& cur = node(b, d);
      b = cur.next_b;
      d = cur.next_d;
    }
    return out;
  }

  void solve_state(unsigned long b, unsigned long d) {
    ++stats_.states;
    const RadicalSum v = term_value(Rational(static_cast<long>(b)), d, n_, r_);
    const DyadicInterval& v_enc = v.quick_enclosure();
    Node best{Rational(static_cast<long>(b)) * v, 0, 0};
    DyadicInterval best_enc = best.value.quick_enclosure();
    for (unsigned long next_b = b - 1; next_b >= 1; --next_b) {
      const unsigned long next_d = best_d(next_b, d - 1);
      const Node& tail = node(next_b, next_d);
      ++stats_.candidates;
      // Cheap enclosure first; the exact sum is only built when it may win.
      const DyadicInterval cand_enc = v_enc.scaled(Rational(static_cast<long>(b - next_b))) + tail.value.quick_enclosure();
      if (cand_enc.certainly_less(best_enc)) continue;
      RadicalSum candidate = Rational(static_cast<long>(b - next_b)) * v + tail.value;
      bool take = true;
      if (!best_enc.certainly_less(cand_enc)) {
        const auto order = compare(candidate, best.value);
        take = order > 0;
        if (order == 0) {
          // Both completions share the pair (b, d); compare what follows it.
          const std::vector<ChainStep> mine = best.next_b == 0 ? std::vector<ChainStep>{} : path(best.next_b, best.next_d);
          take = tie_less(path(next_b, next_d), mine);
        }
      }
      if (take) {
        best = Node{std::move(candidate), next_b, next_d};
        best_enc = best.value.quick_enclosure();
      }
    }
    node(b, d) = std::move(best);
  }

  void update_prefix_best(unsigned long b) {
    unsigned long current = b;
    for (unsigned long d = b; d <= n_; ++d) {
      if (d != b) {
        const auto order = compare(node(b, d).value, node(b, current).value);
        if (order > 0 || (order == 0 && tie_less(path(b, d), path(b, current)))) current = d;
      }
      best_d(b, d) = current;
    }
  }

  unsigned long n_;
  Integer r_;
  std::vector<Node> nodes_;
  std::vector<unsigned long> best_d_;
  SolveStats stats_;
};

void require_dimension(unsigned long n, const Integer& r) {
  if (n < 1) throw std::domain_error("n must be positive");
  if (r < 1) throw std::domain_error("r must be positive");
}

}  // namespace

std::string describe_witness(const Witness& w) {
  if (const auto* c = std::get_if<Chain>(&w)) return format_chain(*c);
  if (const auto* p = std::get_if<SixfoldProfile>(&w)) return format_profile(*p);
  const auto& nc = std::get<NonintegralCandidate>(w);
  return format_chain(nc.prefix) + "; curve b=2/" + nc.m.get_str() + ", d=2, m=" + nc.m.get_str();
}

SolveResult solve_F(unsigned long n, const Integer& r) {
  require_dimension(n, r);
  return ChainProgram(n, r).run();
}

SolveResult solve_F_bruteforce(unsigned long n, const Integer& r) {
  require_dimension(n, r);
  if (n > kBruteForceMaxN) {
    throw GuardError("solve_F_bruteforce: n = " + std::to_string(n) + " exceeds the exhaustive limit " +
                     std::to_string(kBruteForceMaxN));
  }
  SolveStats stats;
  std::optional<RadicalSum> best_value;
  Chain best_chain;
  for_each_integer_chain(n, [&](const Chain& c) {
    ++stats.candidates;
    RadicalSum value = f_eval(c, r);
    if (!best_value) {
      best_value = std::move(value);
      best_chain = c;
      return;
    }
    const auto order = compare(value, *best_value);
    if (order > 0 || (order == 0 && tie_less(c.steps, best_chain.steps))) {
      best_value = std::move(value);
      best_chain = c;
    }
  });
  stats.states = stats.candidates;
  return SolveResult{*best_value, best_chain, floor_certified(*best_value), stats};
}

SolveResult solve_G_sixfold(unsigned long n) {
  if (n < 2) throw std::domain_error("solve_G_sixfold: n must be at least 2");
  SolveStats stats;
  std::optional<RadicalSum> best_value;
  Witness best_witness;
  auto consider = [&](RadicalSum value, Witness witness) {
    ++stats.candidates;
    if (!best_value || compare(value, *best_value) > 0) {
      best_value = std::move(value);
      best_witness = std::move(witness);
    }
  };

  // (A) integral profiles; g increases with each m_i, so m_i is pinned to its cap.
  for_each_integer_chain(n, [&](const Chain& c) {
    if (c.s() >= 1 && c.d(1) + 1 == n) return;
    SixfoldProfile p{c, {}};
    for (std::size_t i = 1; i <= c.s(); ++i) {
      const unsigned long b = c.b(i).get_num().get_ui();
      Integer m = binomial(n - b, n - c.d(i));
      if (c.d(i) == 2) m = std::min(m, Integer(2 / b));
      p.m.push_back(std::move(m));
    }
    ++stats.states;
    RadicalSum value = g_eval(p);
    consider(std::move(value), std::move(p));
  });

  // (B) first non-integral entry (2/m, 2) after an integral prefix.
  for_each_integer_chain(n, [&](const Chain& prefix) {
    const std::size_t i = prefix.steps.size();  // index of the curve entry
    if (prefix.d(i - 1) <= 2) return;
    const unsigned long d1 = i == 1 ? 2 : prefix.d(1);
    if (d1 + 1 == n) return;
    ++stats.states;
    // m_i <= binom(n - ceil(2/m), n - 2) = n - 1.
    for (unsigned long m = 3; m + 1 <= n; ++m) {
      consider(g_bound_nonintegral(prefix, Integer(m)), NonintegralCandidate{prefix, Integer(m)});
    }
  });

  return SolveResult{*best_value, best_witness, floor_certified(*best_value), stats};
}

std::vector<TableCell> build_table(unsigned long n_max, const std::vector<Integer>& r_values) {
  if (n_max < 2) throw std::domain_error("build_table: n_max must be at least 2");
  std::vector<TableCell> out;
  for (const Integer& r : r_values) {
    for (unsigned long n = 2; n <= n_max; ++n) {
      SolveResult result = solve_F(n, r);
      out.push_back({n, r, result.floor, result.value, std::get<Chain>(result.witness)});
    }
  }
  return out;
}

}  // namespace bpfree
