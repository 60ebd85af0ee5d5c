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

#include "bpfree/chains.hpp"

#include <regex>
#include <sstream>

namespace bpfree {

Chain Chain::integral(unsigned long n, const std::vector<std::pair<long, unsigned long>>& pairs) {
  Chain c{n, {}};
  c.steps.reserve(pairs.size());
  for (const auto& [b, d] : pairs) c.steps.push_back({Rational(b), d});
  return c;
}

bool Chain::is_integral() const {
  for (const auto& step : steps) {
    if (step.b.get_den() != 1) return false;
  }
  return true;
}

Integer binomial(unsigned long n, unsigned long k) {
  Integer out;
  if (k > n) return out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

Integer ceil(const Rational& q) {
  Integer out;
  mpz_cdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return out;
}

namespace {

std::string describe(const char* what, std::size_t i) {
  std::ostringstream os;
  os << what << " at index " << i;
  return os.str();
}

}  // namespace

std::vector<Violation> validate_chain(const Chain& c) {
  std::vector<Violation> out;
  if (c.n < 1) out.push_back({ViolationKind::kBadDimension, 0, "dimension n must be positive"});
  if (c.steps.empty()) {
    out.push_back({ViolationKind::kBadLeadingPair, 0, "chain has no leading pair (n, n)"});
    return out;
  }
  if (c.steps[0].b != Rational(c.n) || c.steps[0].d != c.n) {
    out.push_back({ViolationKind::kBadLeadingPair, 0, "leading pair must be (n, n)"});
  }
  for (std::size_t i = 1; i < c.steps.size(); ++i) {
    const auto& prev = c.steps[i - 1];
    const auto& cur = c.steps[i];
    if (!(cur.b < prev.b)) out.push_back({ViolationKind::kBNotDecreasing, i, describe("b not strictly decreasing", i)});
    if (!(cur.d < prev.d)) out.push_back({ViolationKind::kDNotDecreasing, i, describe("d not strictly decreasing", i)});
    if (sgn(cur.b) <= 0) out.push_back({ViolationKind::kBNotPositive, i, describe("b not positive", i)});
    if (cur.d == 0) out.push_back({ViolationKind::kDNotPositive, i, describe("d not positive", i)});
    if (cur.b > Rational(cur.d)) out.push_back({ViolationKind::kBExceedsD, i, describe("b exceeds d", i)});
  }
  return out;
}

std::vector<Violation> validate_profile(const SixfoldProfile& p) {
  std::vector<Violation> out = validate_chain(p.chain);
  const Chain& c = p.chain;
  const std::size_t s = c.s();
  if (p.m.size() != s) {
    out.push_back({ViolationKind::kMultiplicityCount, 0, "expected one multiplicity per non-leading step"});
    return out;
  }
  for (std::size_t i = 1; i <= s; ++i) {
    const Integer& m = p.m[i - 1];
    if (m < 1) {
      out.push_back({ViolationKind::kMultiplicityNotPositive, i, describe("multiplicity not positive", i)});
      continue;
    }
    const Integer top = Integer(c.n) - ceil(c.b(i));
    const unsigned long d = c.d(i);
    if (top >= 0 && d <= c.n) {
      if (m > binomial(top.get_ui(), c.n - d)) {
        out.push_back({ViolationKind::kMultiplicityCap, i, describe("multiplicity exceeds binomial cap", i)});
      }
    }
    if (d == 2 && c.b(i) > Rational(2) / Rational(m)) {
      out.push_back({ViolationKind::kCurveDiscrepancy, i, describe("b exceeds 2/m on a curve", i)});
    }
  }
  if (s >= 1 && c.d(1) + 1 == c.n) {
    out.push_back({ViolationKind::kCodimensionOne, 1, "first center is a divisor (d_1 = n - 1)"});
  }
  return out;
}

namespace {

void visit_extensions(Chain& chain, const std::function<void(const Chain&)>& visit) {
  visit(chain);
  const long b = chain.steps.back().b.get_num().get_si();
  const unsigned long d = chain.steps.back().d;
  for (long next_b = b - 1; next_b >= 1; --next_b) {
    for (unsigned long next_d = d - 1; next_d >= static_cast<unsigned long>(next_b); --next_d) {
      chain.steps.push_back({Rational(next_b), next_d});
      visit_extensions(chain, visit);
      chain.steps.pop_back();
    }
  }
}

}  // namespace

void for_each_integer_chain(unsigned long n, const std::function<void(const Chain&)>& visit) {
  if (n < 1) throw std::invalid_argument("dimension must be positive");
  Chain chain{n, {{Rational(static_cast<long>(n)), n}}};
  visit_extensions(chain, visit);
}

std::vector<Chain> enumerate_integer_chains(unsigned long n) {
  std::vector<Chain> out;
  for_each_integer_chain(n, [&](const Chain& c) { out.push_back(c); });
  return out;
}

std::string format_b_vector(const Chain& c) {
  std::string out = "[";
  for (std::size_t i = 0; i < c.steps.size(); ++i) {
    if (i > 0) out += ",";
    out += c.steps[i].b.get_str();
  }
  return out + "]";
}

std::string format_d_vector(const Chain& c) {
  std::string out = "[";
  for (std::size_t i = 0; i < c.steps.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(c.steps[i].d);
  }
  return out + "]";
}

std::string format_chain(const Chain& c) { return "b=" + format_b_vector(c) + "; d=" + format_d_vector(c); }

std::string format_profile(const SixfoldProfile& p) {
  std::string m = "[";
  for (std::size_t i = 0; i < p.m.size(); ++i) {
    if (i > 0) m += ",";
    m += p.m[i].get_str();
  }
  return format_chain(p.chain) + "; m=" + m + "]";
}

namespace {

std::vector<std::string> split_list(const std::string& body) {
  std::vector<std::string> out;
  if (body.empty()) return out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = body.find(',', start);
    out.push_back(body.substr(start, comma == std::string::npos ? std::string::npos : comma - start));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

Rational parse_rational(const std::string& token) {
  static const std::regex re(R"(^\s*(-?\d+)(?:/(\d+))?\s*$)");
  std::smatch m;
  if (!std::regex_match(token, m, re)) throw ParseError("malformed rational: '" + token + "'");
  const Integer den = m[2].matched ? Integer(m[2].str()) : Integer(1);
  if (den == 0) throw ParseError("zero denominator: '" + token + "'");
  return make_rational(Integer(m[1].str()), den);
}

unsigned long parse_count(const std::string& token) {
  static const std::regex re(R"(^\s*(\d+)\s*$)");
  std::smatch m;
  if (!std::regex_match(token, m, re)) throw ParseError("malformed integer: '" + token + "'");
  const Integer v(m[1].str());
  if (!v.fits_ulong_p()) throw ParseError("integer out of range: '" + token + "'");
  return v.get_ui();
}

SixfoldProfile parse_any(std::string_view text, bool expect_m) {
  static const std::regex re(
      R"(^\s*b\s*=\s*\[([^\]]*)\]\s*;\s*d\s*=\s*\[([^\]]*)\]\s*(?:;\s*m\s*=\s*\[([^\]]*)\]\s*)?$)");
  const std::string s(text);
  std::smatch m;
  if (!std::regex_match(s, m, re)) throw ParseError("malformed chain: '" + s + "'");
  if (expect_m != m[3].matched) throw ParseError(expect_m ? "profile needs an m=[...] list" : "unexpected m=[...] list");
  const auto bs = split_list(m[1].str());
  const auto ds = split_list(m[2].str());
  if (bs.empty() || bs.size() != ds.size()) throw ParseError("b and d lists must be non-empty and of equal length");
  SixfoldProfile out;
  for (std::size_t i = 0; i < bs.size(); ++i) out.chain.steps.push_back({parse_rational(bs[i]), parse_count(ds[i])});
  const Rational& b0 = out.chain.steps.front().b;
  if (b0.get_den() != 1 || sgn(b0) <= 0 || !b0.get_num().fits_ulong_p()) throw ParseError("b_0 must be a positive integer");
  out.chain.n = b0.get_num().get_ui();
  if (expect_m) {
    for (const auto& token : split_list(m[3].str())) out.m.emplace_back(parse_count(token));
  }
  return out;
}

}  // namespace

Chain parse_chain(std::string_view text) { return parse_any(text, false).chain; }

SixfoldProfile parse_profile(std::string_view text) { return parse_any(text, true); }

}  // namespace bpfree
