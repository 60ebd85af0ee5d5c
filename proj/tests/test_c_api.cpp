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

#include <doctest.h>

#include <cstring>
#include <string>

#include "bpfree/bpfree.h"

namespace {

std::string take(char* s) {
  std::string out = s == nullptr ? "" : s;
  bpfree_string_free(s);
  return out;
}

}  // namespace

TEST_CASE("radical sums") {
  bpfree_radsum *a = nullptr, *b = nullptr, *sum = nullptr, *half = nullptr;
  REQUIRE(bpfree_radsum_parse("2 + 1 * 2^(1/2)", &a) == BPFREE_OK);
  REQUIRE(bpfree_radsum_radical("2", "8", 2, &b) == BPFREE_OK);  // 2 * 8^(1/2) = 4 * 2^(1/2)
  char* s = nullptr;
  REQUIRE(bpfree_radsum_to_string(b, &s) == BPFREE_OK);
  CHECK(take(s) == "4 * 2^(1/2)");
  REQUIRE(bpfree_radsum_add(a, b, &sum) == BPFREE_OK);
  REQUIRE(bpfree_radsum_to_string(sum, &s) == BPFREE_OK);
  CHECK(take(s) == "2 + 5 * 2^(1/2)");
  REQUIRE(bpfree_radsum_scale("1/2", sum, &half) == BPFREE_OK);
  REQUIRE(bpfree_radsum_to_string(half, &s) == BPFREE_OK);
  CHECK(take(s) == "1 + 5/2 * 2^(1/2)");
  int cmp = 0;
  REQUIRE(bpfree_radsum_compare(a, b, &cmp) == BPFREE_OK);
  CHECK(cmp == -1);
  REQUIRE(bpfree_radsum_compare(a, a, &cmp) == BPFREE_OK);
  CHECK(cmp == 0);
  int eq = 0;
  REQUIRE(bpfree_radsum_equal(a, a, &eq) == BPFREE_OK);
  CHECK(eq == 1);
  REQUIRE(bpfree_radsum_floor(a, &s) == BPFREE_OK);
  CHECK(take(s) == "3");
  char *lo = nullptr, *hi = nullptr;
  REQUIRE(bpfree_radsum_enclose(a, 64, &lo, &hi) == BPFREE_OK);
  CHECK(std::stod(take(lo)) <= 3.41421356237309505);
  CHECK(std::stod(take(hi)) >= 3.41421356237309504);
  bpfree_radsum_free(a);
  bpfree_radsum_free(b);
  bpfree_radsum_free(sum);
  bpfree_radsum_free(half);
}

TEST_CASE("errors carry a status and a message") {
  bpfree_radsum* a = nullptr;
  CHECK(bpfree_radsum_parse("2 + + 1", &a) == BPFREE_ERR_PARSE);
  CHECK(a == nullptr);
  CHECK(std::strlen(bpfree_last_error()) > 0);
  CHECK(bpfree_radsum_parse(nullptr, &a) == BPFREE_ERR_INVALID_ARGUMENT);
  CHECK(bpfree_radsum_radical("1", "0", 2, &a) == BPFREE_ERR_DOMAIN);
  char *lo = nullptr, *hi = nullptr;
  CHECK(bpfree_lambert_w("-1", 64, &lo, &hi) == BPFREE_ERR_DOMAIN);
  CHECK(bpfree_lambert_w("1", 8, &lo, &hi) == BPFREE_ERR_INVALID_ARGUMENT);
  bpfree_solve_result* r = nullptr;
  CHECK(bpfree_solve_f(9, 1, 1, &r) == BPFREE_ERR_GUARD);
  CHECK(bpfree_solve_f(0, 1, 0, &r) == BPFREE_ERR_DOMAIN);
  bpfree_bound_report* br = nullptr;
  CHECK(bpfree_bounds_build(1, 1, nullptr, &br) == BPFREE_ERR_DOMAIN);
  bpfree_verify_report* vr = nullptr;
  CHECK(bpfree_verify_run("nope", 64, &vr) == BPFREE_ERR_INVALID_ARGUMENT);
  CHECK(std::string(bpfree_status_name(BPFREE_ERR_GUARD)) == "size guard exceeded");
  // A successful call clears the message.
  REQUIRE(bpfree_radsum_parse("1", &a) == BPFREE_OK);
  CHECK(std::string(bpfree_last_error()).empty());
  bpfree_radsum_free(a);
}

TEST_CASE("lambert w") {
  char *lo = nullptr, *hi = nullptr;
  REQUIRE(bpfree_lambert_w("e", 64, &lo, &hi) == BPFREE_OK);
  CHECK(std::stod(take(lo)) <= 1.0);
  CHECK(std::stod(take(hi)) >= 1.0);
  REQUIRE(bpfree_lambert_w("0.5", 64, &lo, &hi) == BPFREE_OK);
  CHECK(std::abs(std::stod(take(lo)) - 0.35173371124919583) < 1e-15);
  take(hi);
  char* out = nullptr;
  REQUIRE(bpfree_lambert_w_render("10", 64, BPFREE_FORMAT_TEXT, &out) == BPFREE_OK);
  CHECK(take(out).rfind("W(10) in [1.745528002740699383", 0) == 0);
}

TEST_CASE("solvers") {
  bpfree_solve_result* r = nullptr;
  REQUIRE(bpfree_solve_f(3, 1, 0, &r) == BPFREE_OK);
  bpfree_radsum* v = nullptr;
  REQUIRE(bpfree_solve_result_value(r, &v) == BPFREE_OK);
  char* s = nullptr;
  REQUIRE(bpfree_radsum_to_string(v, &s) == BPFREE_OK);
  CHECK(take(s) == "2 + 1 * 2^(1/2)");
  REQUIRE(bpfree_solve_result_floor(r, &s) == BPFREE_OK);
  CHECK(take(s) == "3");
  REQUIRE(bpfree_solve_result_witness(r, &s) == BPFREE_OK);
  CHECK(take(s) == "b=[3,1]; d=[3,2]");
  bpfree_radsum_free(v);
  bpfree_solve_result_free(r);

  bpfree_solve_result* bf = nullptr;
  REQUIRE(bpfree_solve_f(5, 2, 1, &bf) == BPFREE_OK);
  REQUIRE(bpfree_solve_f(5, 2, 0, &r) == BPFREE_OK);
  bpfree_radsum *x = nullptr, *y = nullptr;
  bpfree_solve_result_value(bf, &x);
  bpfree_solve_result_value(r, &y);
  int eq = 0;
  bpfree_radsum_equal(x, y, &eq);
  CHECK(eq == 1);
  bpfree_radsum_free(x);
  bpfree_radsum_free(y);
  bpfree_solve_result_free(bf);
  bpfree_solve_result_free(r);

  REQUIRE(bpfree_solve_g(6, &r) == BPFREE_OK);
  bpfree_solve_result_value(r, &v);
  bpfree_radsum* eight = nullptr;
  bpfree_radsum_parse("8", &eight);
  int cmp = 0;
  bpfree_radsum_compare(v, eight, &cmp);
  CHECK(cmp == -1);
  REQUIRE(bpfree_solve_result_render(r, BPFREE_FORMAT_JSON, &s) == BPFREE_OK);
  CHECK(take(s).find("\"kind\": \"solve_G\"") != std::string::npos);
  bpfree_radsum_free(v);
  bpfree_radsum_free(eight);
  bpfree_solve_result_free(r);
}

TEST_CASE("table") {
  const unsigned long rs[] = {1, 2};
  bpfree_table* t = nullptr;
  REQUIRE(bpfree_table_build(5, rs, 2, &t) == BPFREE_OK);
  CHECK(bpfree_table_size(t) == 8);
  unsigned long n = 0, r = 0;
  long fl = 0;
  REQUIRE(bpfree_table_cell(t, 3, &n, &r, &fl) == BPFREE_OK);
  CHECK(n == 5);
  CHECK(r == 1);
  CHECK(fl == 6);
  CHECK(bpfree_table_cell(t, 8, &n, &r, &fl) == BPFREE_ERR_INVALID_ARGUMENT);
  char* s = nullptr;
  REQUIRE(bpfree_table_render(t, BPFREE_FORMAT_CSV, &s) == BPFREE_OK);
  CHECK(take(s).rfind("n,r,floor_F,exact_value,witness_b,witness_d\n2,1,2,", 0) == 0);
  bpfree_table_free(t);
  const unsigned long bad[] = {0};
  CHECK(bpfree_table_build(5, bad, 1, &t) == BPFREE_ERR_DOMAIN);
}

TEST_CASE("bounds") {
  bpfree_bound_options opts;
  bpfree_bound_options_init(&opts);
  CHECK(opts.precision == 64);
  bpfree_bound_report* rep = nullptr;
  REQUIRE(bpfree_bounds_build(6, 1, &opts, &rep) == BPFREE_OK);
  REQUIRE(bpfree_bounds_count(rep) == 4);
  const char* name = nullptr;
  int upper = 0, dom = 0;
  REQUIRE(bpfree_bounds_entry(rep, 2, &name, &upper, &dom) == BPFREE_OK);
  CHECK(std::string(name) == "loglog_thm");
  CHECK(upper == 1);
  CHECK(dom == 1);
  REQUIRE(bpfree_bounds_entry(rep, 3, &name, &upper, &dom) == BPFREE_OK);
  CHECK(upper == 0);
  CHECK(dom == 0);
  bpfree_bounds_free(rep);
  opts.solve_limit = 0;
  REQUIRE(bpfree_bounds_build(6, 1, &opts, &rep) == BPFREE_OK);
  bpfree_bounds_entry(rep, 0, &name, &upper, &dom);
  CHECK(dom == BPFREE_UNDECIDED);
  bpfree_bounds_free(rep);
  opts.precision = 4;
  CHECK(bpfree_bounds_build(6, 1, &opts, &rep) == BPFREE_ERR_INVALID_ARGUMENT);
  bpfree_bound_options_init(&opts);
  char* s = nullptr;
  REQUIRE(bpfree_bounds_sweep(5, 1, &opts, BPFREE_FORMAT_CSV, &s) == BPFREE_OK);
  CHECK(take(s).rfind("n,F,young_sum,enlogn_sum,loglog_thm,easy_lower\n2,2,3,", 0) == 0);
}

TEST_CASE("verify") {
  bpfree_verify_report* v = nullptr;
  REQUIRE(bpfree_verify_run("oracle", 64, &v) == BPFREE_OK);
  CHECK(bpfree_verify_passed(v) == 1);
  CHECK(bpfree_verify_count(v) == 18);
  const char* name = nullptr;
  int passed = 0;
  REQUIRE(bpfree_verify_check(v, 0, &name, &passed) == BPFREE_OK);
  CHECK(passed == 1);
  char* s = nullptr;
  REQUIRE(bpfree_verify_render(v, BPFREE_FORMAT_TEXT, &s) == BPFREE_OK);
  CHECK(take(s).find("oracle: 18/18 checks passed") != std::string::npos);
  bpfree_verify_free(v);
}
