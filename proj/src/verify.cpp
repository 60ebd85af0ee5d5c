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

#include "bpfree/verify.hpp"

#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

#include "bpfree/bounds.hpp"
#include "bpfree/evaluator.hpp"
#include "bpfree/lambert_w.hpp"
#include "bpfree/solver.hpp"

namespace bpfree {
namespace {

// Printed floors of F(n, r) for n = 2..17.
const std::map<long, std::vector<long>> kPublishedFloors = {
    {1, {2, 3, 4, 6, 8, 9, 11, 13, 15, 17, 19, 21, 24, 26, 28, 30}},
    {2, {3, 4, 6, 8, 10, 11, 13, 15, 18, 20, 22, 24, 26, 28, 30, 33}},
};

template <typename... Args>
std::string cat(const Args&... args) {
  std::ostringstream os;
  (os << ... << args);
  return os.str();
}

void table1(VerifyReport& out, unsigned long) {
  const auto cells = build_table(17, {Integer(1), Integer(2)});
  for (const auto& cell : cells) {
    const long expected = kPublishedFloors.at(cell.r.get_si())[cell.n - 2];
    out.checks.push_back({cat("floor F(", cell.n, ", ", cell.r, ")"), cell.floor == expected,
                          cat("expected ", expected, ", computed ", cell.floor, " from ", cell.value)});
  }
}

void sixfold(VerifyReport& out, unsigned long) {
  const SolveResult g6 = solve_G_sixfold(6);
  out.checks.push_back({"G(6) < 8", compare(g6.value, RadicalSum(8)) < 0,
                        cat(g6.value, " via ", describe_witness(g6.witness))});
  const SolveResult g2 = solve_G_sixfold(2);
  const SolveResult f2 = solve_F(2, Integer(1));
  out.checks.push_back({"G(2) <= F(2, 1)", compare(g2.value, f2.value) <= 0, cat(g2.value, " vs ", f2.value)});
  if (const auto* p = std::get_if<SixfoldProfile>(&g6.witness)) {
    const auto v = validate_profile(*p);
    out.checks.push_back({"G(6) witness validates", v.empty(), v.empty() ? "" : v.front().message});
  } else {
    const auto& nc = std::get<NonintegralCandidate>(g6.witness);
    const auto v = validate_chain(nc.prefix);
    const bool ok = v.empty() && compare(g_bound_nonintegral(nc.prefix, nc.m), g6.value) == 0;
    out.checks.push_back({"G(6) witness validates", ok, describe_witness(g6.witness)});
  }
}

void oracle(VerifyReport& out, unsigned long) {
  for (unsigned long n = 1; n <= 6; ++n) {
    for (long r = 1; r <= 3; ++r) {
      const SolveResult dp = solve_F(n, Integer(r));
      const SolveResult bf = solve_F_bruteforce(n, Integer(r));
      const Chain& a = std::get<Chain>(dp.witness);
      const Chain& b = std::get<Chain>(bf.witness);
      const bool ok = dp.value == bf.value && validate_chain(a).empty() && validate_chain(b).empty() &&
                      f_eval(a, Integer(r)) == dp.value && f_eval(b, Integer(r)) == bf.value;
      out.checks.push_back({cat("dp = brute force at n=", n, ", r=", r), ok, cat(dp.value, " | ", format_chain(a))});
    }
  }
}

void bounds(VerifyReport& out, unsigned long precision) {
  const long rs[] = {1, 2, 5};
  for (long r : rs) {
    const Integer rr(r);
    std::map<std::string, std::pair<int, std::string>> failures;
    const char* names[] = {"young_sum", "enlogn_sum", "loglog_thm", "sum_of_roots <= F"};
    for (const char* name : names) failures[name] = {0, ""};
    auto note = [&](const char* name, unsigned long n, bool ok) {
      if (ok) return;
      auto& f = failures[name];
      if (f.first++ == 0) f.second = cat("first failure at n=", n);
    };
    for (unsigned long n = 2; n <= 60; ++n) {
      const SolveResult F = solve_F(n, rr);
      note("young_sum", n, compare(F.value, upper_simple(n, rr)) < 0);
      const auto e = certified_compare(F.value, upper_enlogn(n, rr), precision);
      note("enlogn_sum", n, e && *e < 0);
      const auto l = certified_compare(F.value, upper_loglog(n, rr), precision);
      note("loglog_thm", n, l && *l < 0);
      note("sum_of_roots <= F", n, compare(sum_of_roots(rr, n), F.value) <= 0);
    }
    for (const char* name : names) {
      const auto& f = failures[name];
      const std::string label = std::string(name).find("<=") != std::string::npos
                                    ? cat(name, ", n <= 60, r = ", r)
                                    : cat(name, " > F, n <= 60, r = ", r);
      out.checks.push_back({label, f.first == 0, f.first == 0 ? "59 values" : cat(f.first, " failures, ", f.second)});
    }
  }
  for (long r : rs) {
    const Integer rr(r);
    int bad[3] = {0, 0, 0};
    std::string first[3];
    long count = 0;
    for (unsigned long n = 1; n <= 40; ++n) {
      for (unsigned long b = 1; b <= n; ++b) {
        for (unsigned long d = b; d <= n; ++d) {
          const RadicalSum t = term_value(Rational(static_cast<long>(b)), d, n, rr);
          const TermBounds tb = term_upper_bounds(b, d, n, rr);
          const CertifiedValue* bs[3] = {&tb.young, &tb.refined, &tb.wbased};
          for (int k = 0; k < 3; ++k) {
            const auto order = certified_compare(t, *bs[k], precision);
            if (!order || *order > 0) {
              if (bad[k]++ == 0) first[k] = cat("(b, d, n) = (", b, ", ", d, ", ", n, ")");
            }
          }
          ++count;
        }
      }
    }
    const char* names[] = {"young", "refined", "wbased"};
    for (int k = 0; k < 3; ++k) {
      out.checks.push_back({cat("term <= ", names[k], ", n <= 40, r = ", r), bad[k] == 0,
                            bad[k] == 0 ? cat(count, " terms") : cat(bad[k], " violations, first ", first[k])});
    }
  }
  // r^(1/b) e^W(x) = n / (b W(x)) with x = n / (b r^(1/b)).
  double worst = 0;
  for (long r : rs) {
    for (unsigned long n = 2; n <= 40; n += 3) {
      for (unsigned long b = 1; b <= n; b += 2) {
        const mpfr_prec_t bits = static_cast<mpfr_prec_t>(precision + 32);
        const DyadicInterval rt = rational_root(Integer(r), Rational(static_cast<long>(b)), bits);
        const DyadicInterval x = (DyadicInterval::point(Integer(n), bits) / rt).scaled(Rational(1, static_cast<long>(b)));
        const DyadicInterval w = lambert_w(x, precision);
        const DyadicInterval lhs = rt * exp(w, bits);
        const DyadicInterval rhs = DyadicInterval::point(Integer(n), bits) / delta(Rational(static_cast<long>(b)), Integer(n), Integer(r), precision);
        const double gap = std::max(std::abs((lhs - rhs).lo().to_double()), std::abs((lhs - rhs).hi().to_double()));
        worst = std::max(worst, gap / static_cast<double>(n));
      }
    }
  }
  out.checks.push_back({"W form of the term bound", worst <= 1e-10, cat("max relative gap ", worst)});
}

void appendix(VerifyReport& out, unsigned long precision) {
  for (unsigned long n : {110UL, 150UL, 200UL}) {
    const LowerConstruction c = lower_construction(n, precision);
    out.checks.push_back({cat("construction n=", n, " feasible"), c.violations.empty(), format_chain(c.chain)});
    out.checks.push_back({cat("construction n=", n, " gaps >= 2"), c.gap_two, ""});
    out.checks.push_back({cat("construction n=", n, " value >= n log log n / 4e"), c.meets_target == Verdict::kTrue,
                          cat("target ", c.target.to_string(12))});
  }
  auto threshold = [&](unsigned long n, long expected) {
    const LargeRThreshold t = large_r_threshold(n, 10);
    bool certified = t.r0.has_value();
    for (const auto& cert : t.certificates) {
      if (t.r0 && cert.r >= *t.r0) certified = certified && cert.equal;
    }
    const bool ok = certified && (expected > 0 ? *t.r0 == expected : *t.r0 >= -expected);
    out.checks.push_back({cat("large-r threshold n=", n), ok,
                          cat("r0 = ", t.r0 ? t.r0->get_str() : std::string("none"), " on [1, 10]")});
  };
  threshold(2, 1);
  threshold(3, 2);
  threshold(4, -2);
}

const std::map<std::string, std::function<void(VerifyReport&, unsigned long)>, std::less<>>& registry() {
  static const std::map<std::string, std::function<void(VerifyReport&, unsigned long)>, std::less<>> suites = {
      {"table1", table1}, {"sixfold", sixfold}, {"bounds", bounds}, {"oracle", oracle}, {"appendix", appendix},
  };
  return suites;
}

}  // namespace

bool VerifyReport::passed() const {
  for (const auto& c : checks) {
    if (!c.passed) return false;
  }
  return true;
}

const std::vector<std::string>& verify_suites() {
  static const std::vector<std::string> names = {"table1", "sixfold", "bounds", "oracle", "appendix"};
  return names;
}

VerifyReport run_verify(std::string_view suite, unsigned long precision) {
  const auto& suites = registry();
  const auto it = suites.find(suite);
  if (it == suites.end()) throw std::invalid_argument("unknown verify suite '" + std::string(suite) + "'");
  VerifyReport out;
  out.suite = std::string(suite);
  it->second(out, precision);
  return out;
}

}  // namespace bpfree
