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

#include "bpfree/bpfree.h"

#include <cstdlib>
#include <cstring>
#include <regex>
#include <string>

#include "bpfree/bounds.hpp"
#include "bpfree/evaluator.hpp"
#include "bpfree/lambert_w.hpp"
#include "bpfree/report.hpp"
#include "bpfree/solver.hpp"
#include "bpfree/verify.hpp"

struct bpfree_radsum {
  bpfree::RadicalSum value;
};
struct bpfree_solve_result {
  bpfree::SolveResult result;
  std::string kind;
  unsigned long n;
  bpfree::Integer r;
};
struct bpfree_table {
  std::vector<bpfree::TableCell> cells;
};
struct bpfree_bound_report {
  bpfree::BoundReport report;
};
struct bpfree_verify_report {
  bpfree::VerifyReport report;
};

namespace {

thread_local std::string g_last_error;

bpfree_status fail(bpfree_status status, const std::string& message) {
  g_last_error = message;
  return status;
}

// Runs body, translating exceptions into status codes.
template <typename F>
bpfree_status guarded(F&& body) {
  try {
    g_last_error.clear();
    return body();
  } catch (const bpfree::ParseError& e) {
    return fail(BPFREE_ERR_PARSE, e.what());
  } catch (const bpfree::InvalidChainError& e) {
    return fail(BPFREE_ERR_INVALID_ARGUMENT, e.what());
  } catch (const bpfree::GuardError& e) {
    return fail(BPFREE_ERR_GUARD, e.what());
  } catch (const bpfree::ConstructionError& e) {
    return fail(BPFREE_ERR_CERTIFICATION, e.what());
  } catch (const std::domain_error& e) {
    return fail(BPFREE_ERR_DOMAIN, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(BPFREE_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::length_error& e) {
    return fail(BPFREE_ERR_GUARD, e.what());
  } catch (const std::runtime_error& e) {
    return fail(BPFREE_ERR_CERTIFICATION, e.what());
  } catch (const std::exception& e) {
    return fail(BPFREE_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(BPFREE_ERR_INTERNAL, "unknown error");
  }
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

bpfree::Format to_format(bpfree_format f) {
  switch (f) {
    case BPFREE_FORMAT_CSV:
      return bpfree::Format::kCsv;
    case BPFREE_FORMAT_JSON:
      return bpfree::Format::kJson;
    case BPFREE_FORMAT_TEXT:
      return bpfree::Format::kText;
  }
  throw std::invalid_argument("unknown output format");
}

#define BPFREE_REQUIRE(cond)                                                            \
  do {                                                                                  \
    if (!(cond)) return fail(BPFREE_ERR_INVALID_ARGUMENT, "null or invalid argument: " #cond); \
  } while (0)

// "p", "p/q" or a plain decimal "a.b".
bpfree::Rational parse_rational_text(const std::string& text) {
  static const std::regex fraction(R"(^\s*(-?\d+)(?:/(\d+))?\s*$)");
  static const std::regex decimal(R"(^\s*(-?)(\d*)\.(\d+)\s*$)");
  std::smatch m;
  if (std::regex_match(text, m, fraction)) {
    return bpfree::make_rational(bpfree::Integer(m[1].str()),
                                 m[2].matched ? bpfree::Integer(m[2].str()) : bpfree::Integer(1));
  }
  if (std::regex_match(text, m, decimal)) {
    const std::string digits = m[2].str() + m[3].str();
    bpfree::Integer den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, m[3].length());
    bpfree::Integer num(digits);
    if (m[1].length() > 0) num = -num;
    return bpfree::make_rational(num, den);
  }
  throw bpfree::ParseError("malformed rational: '" + text + "'");
}

bpfree::DyadicInterval lambert_of_text(const std::string& x, unsigned long precision) {
  if (precision < 16) throw std::invalid_argument("precision must be at least 16 bits");
  if (x == "e") return bpfree::lambert_w(bpfree::DyadicInterval::e(static_cast<mpfr_prec_t>(precision + 64)), precision);
  return bpfree::lambert_w(parse_rational_text(x), precision);
}

void check_precision(unsigned long precision) {
  if (precision < 16) throw std::invalid_argument("precision must be at least 16 bits");
}

bpfree::BoundReportOptions to_options(const bpfree_bound_options* options) {
  bpfree::BoundReportOptions out;
  if (options != nullptr) {
    out.precision = options->precision;
    out.with_construction = options->with_construction != 0;
    out.solve_limit = options->solve_limit;
  }
  check_precision(out.precision);
  return out;
}

int verdict_code(bpfree::Verdict v) {
  switch (v) {
    case bpfree::Verdict::kTrue:
      return 1;
    case bpfree::Verdict::kFalse:
      return 0;
    case bpfree::Verdict::kUndecided:
      break;
  }
  return BPFREE_UNDECIDED;
}

}  // namespace

extern "C" {

const char* bpfree_version(void) { return "1.0.0"; }

const char* bpfree_status_name(bpfree_status status) {
  switch (status) {
    case BPFREE_OK:
      return "ok";
    case BPFREE_ERR_INVALID_ARGUMENT:
      return "invalid argument";
    case BPFREE_ERR_PARSE:
      return "parse error";
    case BPFREE_ERR_DOMAIN:
      return "domain error";
    case BPFREE_ERR_GUARD:
      return "size guard exceeded";
    case BPFREE_ERR_CERTIFICATION:
      return "certification failure";
    case BPFREE_ERR_INTERNAL:
      return "internal error";
  }
  return "unknown status";
}

const char* bpfree_last_error(void) { return g_last_error.c_str(); }

void bpfree_string_free(char* s) { std::free(s); }

bpfree_status bpfree_radsum_parse(const char* text, bpfree_radsum** out) {
  BPFREE_REQUIRE(text != nullptr && out != nullptr);
  return guarded([&] {
    *out = new bpfree_radsum{bpfree::RadicalSum::parse(text)};
    return BPFREE_OK;
  });
}

bpfree_status bpfree_radsum_radical(const char* coeff, const char* radicand, unsigned long index, bpfree_radsum** out) {
  BPFREE_REQUIRE(coeff != nullptr && radicand != nullptr && out != nullptr);
  return guarded([&] {
    const bpfree::Rational k = parse_rational_text(radicand);
    if (k.get_den() != 1) throw bpfree::ParseError("radicand must be an integer");
    if (k < 1) throw std::domain_error("radicand must be positive");
    if (index < 1) throw std::domain_error("index must be positive");
    *out = new bpfree_radsum{bpfree::RadicalSum::radical(parse_rational_text(coeff), k.get_num(), index)};
    return BPFREE_OK;
  });
}

void bpfree_radsum_free(bpfree_radsum* a) { delete a; }

bpfree_status bpfree_radsum_add(const bpfree_radsum* a, const bpfree_radsum* b, bpfree_radsum** out) {
  BPFREE_REQUIRE(a != nullptr && b != nullptr && out != nullptr);
  return guarded([&] {
    *out = new bpfree_radsum{a->value + b->value};
    return BPFREE_OK;
  });
}

bpfree_status bpfree_radsum_scale(const char* q, const bpfree_radsum* a, bpfree_radsum** out) {
  BPFREE_REQUIRE(q != nullptr && a != nullptr && out != nullptr);
  return guarded([&] {
    *out = new bpfree_radsum{parse_rational_text(q) * a->value};
    return BPFREE_OK;
  });
}

bpfree_status bpfree_radsum_compare(const bpfree_radsum* a, const bpfree_radsum* b, int* out) {
  BPFREE_REQUIRE(a != nullptr && b != nullptr && out != nullptr);
  return guarded([&] {
    const auto order = bpfree::compare(a->value, b->value);
    *out = order < 0 ? -1 : (order > 0 ? 1 : 0);
    return BPFREE_OK;
  });
}

bpfree_status bpfree_radsum_equal(const bpfree_radsum* a, const bpfree_radsum* b, int* out) {
  BPFREE_REQUIRE(a != nullptr && b != nullptr && out != nullptr);
  *out = a->value == b->value ? 1 : 0;
  return BPFREE_OK;
}

bpfree_status bpfree_radsum_floor(const bpfree_radsum* a, char** out) {
  BPFREE_REQUIRE(a != nullptr && out != nullptr);
  return guarded([&] {
    *out = copy_string(bpfree::floor_certified(a->value).get_str());
    return BPFREE_OK;
  });
}

bpfree_status bpfree_radsum_to_string(const bpfree_radsum* a, char** out) {
  BPFREE_REQUIRE(a != nullptr && out != nullptr);
  return guarded([&] {
    *out = copy_string(a->value.to_string());
    return BPFREE_OK;
  });
}

bpfree_status bpfree_radsum_enclose(const bpfree_radsum* a, unsigned long precision, char** lo, char** hi) {
  BPFREE_REQUIRE(a != nullptr && lo != nullptr && hi != nullptr);
  return guarded([&] {
    check_precision(precision);
    const bpfree::DyadicInterval x = a->value.enclose(precision);
    const int digits = bpfree::digits_for(precision);
    *lo = copy_string(x.lo().to_decimal(digits, MPFR_RNDD));
    *hi = copy_string(x.hi().to_decimal(digits, MPFR_RNDU));
    return BPFREE_OK;
  });
}

bpfree_status bpfree_lambert_w(const char* x, unsigned long precision, char** lo, char** hi) {
  BPFREE_REQUIRE(x != nullptr && lo != nullptr && hi != nullptr);
  return guarded([&] {
    const bpfree::DyadicInterval w = lambert_of_text(x, precision);
    const int digits = bpfree::digits_for(precision);
    *lo = copy_string(w.lo().to_decimal(digits, MPFR_RNDD));
    *hi = copy_string(w.hi().to_decimal(digits, MPFR_RNDU));
    return BPFREE_OK;
  });
}

bpfree_status bpfree_lambert_w_render(const char* x, unsigned long precision, bpfree_format format, char** out) {
  BPFREE_REQUIRE(x != nullptr && out != nullptr);
  return guarded([&] {
    const bpfree::DyadicInterval w = lambert_of_text(x, precision);
    *out = copy_string(bpfree::render_lambert_w(x, w, precision, to_format(format)));
    return BPFREE_OK;
  });
}

bpfree_status bpfree_solve_f(unsigned long n, unsigned long r, int bruteforce, bpfree_solve_result** out) {
  BPFREE_REQUIRE(out != nullptr);
  return guarded([&] {
    const bpfree::Integer rr(r);
    auto result = bruteforce != 0 ? bpfree::solve_F_bruteforce(n, rr) : bpfree::solve_F(n, rr);
    *out = new bpfree_solve_result{std::move(result), "F", n, rr};
    return BPFREE_OK;
  });
}

bpfree_status bpfree_solve_g(unsigned long n, bpfree_solve_result** out) {
  BPFREE_REQUIRE(out != nullptr);
  return guarded([&] {
    *out = new bpfree_solve_result{bpfree::solve_G_sixfold(n), "G", n, bpfree::Integer(1)};
    return BPFREE_OK;
  });
}

void bpfree_solve_result_free(bpfree_solve_result* result) { delete result; }

bpfree_status bpfree_solve_result_value(const bpfree_solve_result* result, bpfree_radsum** out) {
  BPFREE_REQUIRE(result != nullptr && out != nullptr);
  return guarded([&] {
    *out = new bpfree_radsum{result->result.value};
    return BPFREE_OK;
  });
}

bpfree_status bpfree_solve_result_floor(const bpfree_solve_result* result, char** out) {
  BPFREE_REQUIRE(result != nullptr && out != nullptr);
  return guarded([&] {
    *out = copy_string(result->result.floor.get_str());
    return BPFREE_OK;
  });
}

bpfree_status bpfree_solve_result_witness(const bpfree_solve_result* result, char** out) {
  BPFREE_REQUIRE(result != nullptr && out != nullptr);
  return guarded([&] {
    *out = copy_string(bpfree::describe_witness(result->result.witness));
    return BPFREE_OK;
  });
}

bpfree_status bpfree_solve_result_render(const bpfree_solve_result* result, bpfree_format format, char** out) {
  BPFREE_REQUIRE(result != nullptr && out != nullptr);
  return guarded([&] {
    *out = copy_string(bpfree::render_solve(result->kind, result->n, result->r, result->result, to_format(format)));
    return BPFREE_OK;
  });
}

bpfree_status bpfree_table_build(unsigned long n_max, const unsigned long* r_values, size_t r_count,
                                 bpfree_table** out) {
  BPFREE_REQUIRE(out != nullptr && (r_values != nullptr || r_count == 0));
  return guarded([&] {
    std::vector<bpfree::Integer> rs;
    for (size_t i = 0; i < r_count; ++i) {
      if (r_values[i] < 1) throw std::domain_error("r must be at least 1");
      rs.emplace_back(r_values[i]);
    }
    *out = new bpfree_table{bpfree::build_table(n_max, rs)};
    return BPFREE_OK;
  });
}

void bpfree_table_free(bpfree_table* table) { delete table; }

size_t bpfree_table_size(const bpfree_table* table) { return table == nullptr ? 0 : table->cells.size(); }

bpfree_status bpfree_table_cell(const bpfree_table* table, size_t i, unsigned long* n, unsigned long* r,
                                long* floor_value) {
  BPFREE_REQUIRE(table != nullptr && i < table->cells.size());
  const auto& cell = table->cells[i];
  if (n != nullptr) *n = cell.n;
  if (r != nullptr) *r = cell.r.get_ui();
  if (floor_value != nullptr) *floor_value = cell.floor.get_si();
  return BPFREE_OK;
}

bpfree_status bpfree_table_render(const bpfree_table* table, bpfree_format format, char** out) {
  BPFREE_REQUIRE(table != nullptr && out != nullptr);
  return guarded([&] {
    *out = copy_string(bpfree::render_table(table->cells, to_format(format)));
    return BPFREE_OK;
  });
}

void bpfree_bound_options_init(bpfree_bound_options* options) {
  if (options == nullptr) return;
  const bpfree::BoundReportOptions defaults;
  options->precision = defaults.precision;
  options->with_construction = defaults.with_construction ? 1 : 0;
  options->solve_limit = defaults.solve_limit;
}

bpfree_status bpfree_bounds_build(unsigned long n, unsigned long r, const bpfree_bound_options* options,
                                  bpfree_bound_report** out) {
  BPFREE_REQUIRE(out != nullptr);
  return guarded([&] {
    *out = new bpfree_bound_report{bpfree::build_bound_report(n, bpfree::Integer(r), to_options(options))};
    return BPFREE_OK;
  });
}

void bpfree_bounds_free(bpfree_bound_report* report) { delete report; }

size_t bpfree_bounds_count(const bpfree_bound_report* report) {
  return report == nullptr ? 0 : report->report.entries.size();
}

bpfree_status bpfree_bounds_entry(const bpfree_bound_report* report, size_t i, const char** name, int* is_upper,
                                  int* dominates) {
  BPFREE_REQUIRE(report != nullptr && i < report->report.entries.size());
  const auto& e = report->report.entries[i];
  if (name != nullptr) *name = e.name.c_str();
  if (is_upper != nullptr) *is_upper = e.kind == bpfree::BoundKind::kUpper ? 1 : 0;
  if (dominates != nullptr) *dominates = verdict_code(e.dominates_F);
  return BPFREE_OK;
}

bpfree_status bpfree_bounds_render(const bpfree_bound_report* report, bpfree_format format, char** out) {
  BPFREE_REQUIRE(report != nullptr && out != nullptr);
  return guarded([&] {
    *out = copy_string(bpfree::render_bounds(report->report, to_format(format)));
    return BPFREE_OK;
  });
}

bpfree_status bpfree_bounds_sweep(unsigned long n_max, unsigned long r, const bpfree_bound_options* options,
                                  bpfree_format format, char** out) {
  BPFREE_REQUIRE(out != nullptr);
  return guarded([&] {
    const bpfree::Integer rr(r);
    const auto rows = bpfree::bound_sweep(n_max, rr, to_options(options));
    *out = copy_string(bpfree::render_sweep(rows, rr, to_format(format)));
    return BPFREE_OK;
  });
}

bpfree_status bpfree_verify_run(const char* suite, unsigned long precision, bpfree_verify_report** out) {
  BPFREE_REQUIRE(suite != nullptr && out != nullptr);
  return guarded([&] {
    check_precision(precision);
    *out = new bpfree_verify_report{bpfree::run_verify(suite, precision)};
    return BPFREE_OK;
  });
}

void bpfree_verify_free(bpfree_verify_report* report) { delete report; }

int bpfree_verify_passed(const bpfree_verify_report* report) {
  return report != nullptr && report->report.passed() ? 1 : 0;
}

size_t bpfree_verify_count(const bpfree_verify_report* report) {
  return report == nullptr ? 0 : report->report.checks.size();
}

bpfree_status bpfree_verify_check(const bpfree_verify_report* report, size_t i, const char** name, int* passed) {
  BPFREE_REQUIRE(report != nullptr && i < report->report.checks.size());
  const auto& c = report->report.checks[i];
  if (name != nullptr) *name = c.name.c_str();
  if (passed != nullptr) *passed = c.passed ? 1 : 0;
  return BPFREE_OK;
}

bpfree_status bpfree_verify_render(const bpfree_verify_report* report, bpfree_format format, char** out) {
  BPFREE_REQUIRE(report != nullptr && out != nullptr);
  return guarded([&] {
    *out = copy_string(bpfree::render_verify(report->report, to_format(format)));
    return BPFREE_OK;
  });
}

}  // extern "C"
