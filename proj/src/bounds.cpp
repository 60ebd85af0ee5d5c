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

#include "bpfree/bounds.hpp"

#include <algorithm>
#include <stdexcept>

#include "bpfree/evaluator.hpp"
#include "bpfree/lambert_w.hpp"

namespace bpfree {
namespace {

constexpr unsigned long kGuard = 32;
constexpr unsigned long kMaxCeilBits = 1UL << 14;

mpfr_prec_t working_bits(unsigned long precision) { return static_cast<mpfr_prec_t>(precision + kGuard); }

DyadicInterval point(unsigned long v, mpfr_prec_t bits) { return DyadicInterval::point(Integer(v), bits); }

// log log n, n >= 2.
DyadicInterval loglog(unsigned long n, mpfr_prec_t bits) { return log(log(point(n, bits), bits), bits); }

// log log n + 2.34
DyadicInterval loglog_shifted(unsigned long n, mpfr_prec_t bits) {
  return loglog(n, bits) + DyadicInterval::enclose(Rational(234, 100), bits);
}

Integer floor_of(const Rational& q) {
  Integer out;
  mpz_fdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return out;
}

// Ceiling of an irrational quantity known through enclosures.
Integer certified_ceil(const std::function<DyadicInterval(unsigned long)>& f, unsigned long precision) {
  for (unsigned long bits = std::max(precision, 64UL); bits <= kMaxCeilBits; bits *= 2) {
    const DyadicInterval x = f(bits);
    const Rational lo = x.lo_rational();
    const Integer k = floor_of(lo);
    if (lo != Rational(k) && floor_of(x.hi_rational()) == k) return k + 1;
  }
  throw std::runtime_error("certified ceiling did not separate from an integer");
}

void require_positive(const Integer& r) {
  if (r < 1) throw std::domain_error("r must be at least 1");
}

Verdict verdict_from(std::optional<std::strong_ordering> order, std::strong_ordering want) {
  if (!order) return Verdict::kUndecided;
  return *order == want ? Verdict::kTrue : Verdict::kFalse;
}

}  // namespace

DyadicInterval CertifiedValue::remainder(unsigned long precision) const {
  if (!remainder_) return DyadicInterval();
  return remainder_(precision);
}

DyadicInterval CertifiedValue::enclose(unsigned long precision) const {
  if (!remainder_) return exact_.enclose(precision);
  return exact_.enclose(precision + kGuard) + remainder_(precision);
}

std::optional<std::strong_ordering> certified_compare(const RadicalSum& value, const CertifiedValue& bound,
                                                      unsigned long precision) {
  if (bound.is_algebraic()) return compare(value, bound.exact_part());
  const RadicalSum diff = value - bound.exact_part();
  for (unsigned long bits : {precision, std::max(precision, kEscalatedPrecision)}) {
    const DyadicInterval lhs = diff.enclose(bits);
    const DyadicInterval rhs = bound.remainder(bits);
    if (lhs.certainly_less(rhs)) return std::strong_ordering::less;
    if (rhs.certainly_less(lhs)) return std::strong_ordering::greater;
    if (bits == kEscalatedPrecision || precision >= kEscalatedPrecision) break;
  }
  return std::nullopt;
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::kTrue:
      return "true";
    case Verdict::kFalse:
      return "false";
    case Verdict::kUndecided:
      break;
  }
  return "undecided";
}

TermBounds term_upper_bounds(unsigned long b, unsigned long d, unsigned long n, const Integer& r) {
  if (!(1 <= b && b <= d && d <= n)) throw std::domain_error("term bounds need 1 <= b <= d <= n");
  require_positive(r);
  const RadicalSum root = RadicalSum::radical(Rational(1), r, b);
  TermBounds out;
  out.young = CertifiedValue(root + RadicalSum(Rational(static_cast<long>(n - b))));
  if (n == b) {
    out.refined = CertifiedValue(root);
  } else {
    const Rational factor = make_rational(Integer(n - b), Integer(b));
    out.refined = CertifiedValue(root, [factor](unsigned long p) {
      return DyadicInterval::e(working_bits(p)).scaled(factor);
    });
  }
  out.wbased = CertifiedValue(RadicalSum(), [b, n, r](unsigned long p) {
    const mpfr_prec_t bits = working_bits(p);
    const DyadicInterval rt = rational_root(r, Rational(static_cast<long>(b)), bits);
    const DyadicInterval x = (point(n, bits) / rt).scaled(Rational(1, static_cast<long>(b)));
    return rt * exp(lambert_w(x, p + kGuard), bits);
  });
  return out;
}

RadicalSum upper_simple(unsigned long n, const Integer& r) {
  if (n < 1) throw std::domain_error("n must be at least 1");
  require_positive(r);
  return RadicalSum(Rational(static_cast<long>(n * (n - 1) / 2))) + sum_of_roots(r, n);
}

CertifiedValue upper_loglog(unsigned long n, const Integer& r) {
  if (n < 2) throw std::domain_error("log log n is undefined for n < 2");
  require_positive(r);
  if (r == 1) {
    return CertifiedValue(RadicalSum(), [n](unsigned long p) {
      const mpfr_prec_t bits = working_bits(p);
      return max(point(n + 1, bits), loglog_shifted(n, bits).scaled(Rational(static_cast<long>(n))));
    });
  }
  const RadicalSum exact = RadicalSum(Rational(r + static_cast<long>(n) - 1));
  return CertifiedValue(exact, [n, r](unsigned long p) {
    const mpfr_prec_t bits = working_bits(p);
    return sqrt(DyadicInterval::point(r, bits), bits) * loglog_shifted(n, bits).scaled(Rational(static_cast<long>(n)));
  });
}

CertifiedValue upper_enlogn(unsigned long n, const Integer& r) {
  if (n < 1) throw std::domain_error("n must be at least 1");
  require_positive(r);
  RadicalSum roots = sum_of_roots(r, n);
  if (n == 1) return CertifiedValue(std::move(roots));
  return CertifiedValue(std::move(roots), [n](unsigned long p) {
    const mpfr_prec_t bits = working_bits(p);
    return (DyadicInterval::e(bits) * log(point(n, bits), bits)).scaled(Rational(static_cast<long>(n)));
  });
}

EasyLower lower_easy(unsigned long n, const Integer& r, unsigned long precision) {
  if (n < 2) throw std::domain_error("log log n is undefined for n < 2");
  require_positive(r);
  auto log_term = [n, r](unsigned long p) {
    const mpfr_prec_t bits = working_bits(p);
    const DyadicInterval rt = root(DyadicInterval::point(r, bits), n, bits);
    const DyadicInterval four_e = DyadicInterval::e(bits).scaled(Rational(4));
    return (rt * loglog(n, bits)).scaled(Rational(static_cast<long>(n))) / four_e;
  };
  EasyLower out;
  out.log_term = log_term(precision);
  out.root_sum = sum_of_roots(r, n);
  const CertifiedValue first(RadicalSum(), log_term);
  const auto order = certified_compare(out.root_sum, first, precision);
  if (order && *order != std::strong_ordering::less) {
    out.value = CertifiedValue(out.root_sum);
  } else if (order) {
    out.value = first;
  } else {
    const RadicalSum roots = out.root_sum;
    out.value = CertifiedValue(RadicalSum(), [roots, log_term](unsigned long p) {
      return max(roots.enclose(p + kGuard), log_term(p));
    });
  }
  return out;
}

LowerConstruction lower_construction(unsigned long n, unsigned long precision) {
  if (n < 2) throw std::domain_error("log log n is undefined for n < 2");
  LowerConstruction out;
  out.n = n;
  out.n_at_least_10 = n >= 10;
  out.n_at_least_110 = n >= 110;
  out.chain = Chain{n, {{Rational(static_cast<long>(n)), n}}};

  out.window_holds = true;
  for (unsigned long b = n / 10; b >= 1; --b) {
    auto delta_of = [n, b](unsigned long p) {
      return lambert_w(make_rational(Integer(n), Integer(b)), p).scaled(Rational(static_cast<long>(b)));
    };
    const Integer up = certified_ceil(delta_of, precision);
    const unsigned long d = b + up.get_ui();
    out.chain.steps.push_back({Rational(static_cast<long>(b)), d});
    // d - b = ceil(delta) >= delta always; the upper half needs 2 delta >= ceil(delta).
    if (!(delta_of(precision).lo_rational() * 2 >= Rational(up))) out.window_holds = false;
  }

  out.violations = validate_chain(out.chain);
  out.gap_two = true;
  for (std::size_t j = 1; j <= out.chain.s(); ++j) {
    if (out.chain.d(j) < out.chain.d(j + 1) + 2) out.gap_two = false;
  }

  auto target_of = [n](unsigned long p) {
    const mpfr_prec_t wb = working_bits(p);
    return loglog(n, wb).scaled(Rational(static_cast<long>(n))) / DyadicInterval::e(wb).scaled(Rational(4));
  };
  out.target = target_of(precision);

  if (out.violations.empty()) {
    out.value = f_eval(out.chain, Integer(1));
    const auto order = certified_compare(*out.value, CertifiedValue(RadicalSum(), target_of), precision);
    if (!order) {
      out.meets_target = Verdict::kUndecided;
    } else {
      out.meets_target = *order == std::strong_ordering::less ? Verdict::kFalse : Verdict::kTrue;
    }
  } else if (out.n_at_least_110) {
    throw ConstructionError("lower construction infeasible for n = " + std::to_string(n) + ": " +
                            out.violations.front().message);
  }
  return out;
}

LargeRThreshold large_r_threshold(unsigned long n, unsigned long r_limit) {
  if (n < 2 || n > kThresholdMaxN) {
    throw GuardError("large_r_threshold needs 2 <= n <= " + std::to_string(kThresholdMaxN));
  }
  if (r_limit < 1) throw std::domain_error("r_limit must be at least 1");
  LargeRThreshold out;
  for (unsigned long r = r_limit; r >= 1; --r) {
    ThresholdCertificate cert;
    cert.r = Integer(r);
    cert.f_value = solve_F(n, cert.r).value;
    cert.root_sum = sum_of_roots(cert.r, n);
    cert.equal = cert.f_value == cert.root_sum;
    const bool equal = cert.equal;
    out.certificates.push_back(std::move(cert));
    if (!equal) break;
    out.r0 = Integer(r);
  }
  std::reverse(out.certificates.begin(), out.certificates.end());
  return out;
}

BoundReport build_bound_report(unsigned long n, const Integer& r, const BoundReportOptions& options) {
  if (n < 2) throw std::domain_error("bounds need n >= 2 (log log n is undefined below)");
  require_positive(r);
  BoundReport out;
  out.n = n;
  out.r = r;
  out.precision = options.precision;
  if (n <= options.solve_limit) out.F = solve_F(n, r);

  auto add = [&](std::string name, BoundKind kind, CertifiedValue value) {
    BoundEntry entry{std::move(name), kind, value, value.enclose(options.precision), Verdict::kUndecided};
    if (out.F) entry.dominates_F = verdict_from(certified_compare(out.F->value, value, options.precision),
                                                std::strong_ordering::less);
    out.entries.push_back(std::move(entry));
  };
  add("young_sum", BoundKind::kUpper, CertifiedValue(upper_simple(n, r)));
  add("enlogn_sum", BoundKind::kUpper, upper_enlogn(n, r));
  add("loglog_thm", BoundKind::kUpper, upper_loglog(n, r));
  add("easy_lower", BoundKind::kLower, lower_easy(n, r, options.precision).value);
  if (options.with_construction) {
    out.construction = lower_construction(n, options.precision);
    if (out.construction->value) add("construction_lower", BoundKind::kLower, CertifiedValue(*out.construction->value));
  }
  return out;
}

std::vector<SweepRow> bound_sweep(unsigned long n_max, const Integer& r, const BoundReportOptions& options) {
  if (n_max < 2) throw std::domain_error("sweep needs n_max >= 2");
  require_positive(r);
  const unsigned long p = options.precision;
  std::vector<SweepRow> out;
  for (unsigned long n = 2; n <= n_max; ++n) {
    SweepRow row;
    row.n = n;
    if (n <= options.solve_limit) row.F = solve_F(n, r).value.enclose(p);
    row.young_sum = upper_simple(n, r).enclose(p);
    row.enlogn_sum = upper_enlogn(n, r).enclose(p);
    row.loglog_thm = upper_loglog(n, r).enclose(p);
    row.easy_lower = lower_easy(n, r, p).value.enclose(p);
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace bpfree
