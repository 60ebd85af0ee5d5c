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

// bpfree: tables, solvers, bounds and self-checks from the command line.
//
// Exit codes: 0 success, 1 certification or internal failure, 2 usage or
// domain error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bpfree/bpfree.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

constexpr unsigned long kTableGuard = 40;
constexpr unsigned long kSolveGuard = 60;

struct Common {
  std::string format;
  std::string output;
  unsigned long precision = 64;
  bool no_guard = false;
};

class CliError : public std::runtime_error {
 public:
  CliError(int code, const std::string& what) : std::runtime_error(what), code_(code) {}
  int code() const { return code_; }

 private:
  int code_;
};

int exit_code_for(bpfree_status s) {
  switch (s) {
    case BPFREE_OK:
      return kExitOk;
    case BPFREE_ERR_INVALID_ARGUMENT:
    case BPFREE_ERR_PARSE:
    case BPFREE_ERR_DOMAIN:
    case BPFREE_ERR_GUARD:
      return kExitUsage;
    case BPFREE_ERR_CERTIFICATION:
    case BPFREE_ERR_INTERNAL:
      break;
  }
  return kExitFailure;
}

void check(bpfree_status s) {
  if (s != BPFREE_OK) throw CliError(exit_code_for(s), std::string(bpfree_status_name(s)) + ": " + bpfree_last_error());
}

struct StringDeleter {
  void operator()(char* s) const { bpfree_string_free(s); }
};
using OwnedString = std::unique_ptr<char, StringDeleter>;

bpfree_format to_format(const std::string& name) {
  static const std::map<std::string, bpfree_format> formats = {
      {"csv", BPFREE_FORMAT_CSV}, {"json", BPFREE_FORMAT_JSON}, {"text", BPFREE_FORMAT_TEXT}};
  return formats.at(name);
}

void emit(const Common& common, char* raw) {
  OwnedString text(raw);
  if (common.output.empty()) {
    std::fputs(text.get(), stdout);
    std::fflush(stdout);
    return;
  }
  std::ofstream out(common.output, std::ios::binary | std::ios::trunc);
  if (!out) throw CliError(kExitUsage, "cannot open output file '" + common.output + "'");
  out << text.get();
  if (!out.flush()) throw CliError(kExitFailure, "failed writing '" + common.output + "'");
}

void add_common(CLI::App* cmd, Common& common, const std::string& default_format, bool with_guard) {
  common.format = default_format;
  cmd->add_option("--format", common.format, "Output format")
      ->check(CLI::IsMember({"csv", "json", "text"}))
      ->capture_default_str();
  cmd->add_option("-o,--output", common.output, "Write to this file instead of stdout");
  cmd->add_option("--precision", common.precision, "Interval precision in bits")
      ->check(CLI::Range(16UL, 1UL << 20))
      ->capture_default_str();
  if (with_guard) cmd->add_flag("--no-guard", common.no_guard, "Lift the size guard on n");
}

void guard(const Common& common, unsigned long n, unsigned long limit, const char* what) {
  if (!common.no_guard && n > limit) {
    throw CliError(kExitUsage, std::string(what) + " = " + std::to_string(n) + " exceeds the guard " +
                                   std::to_string(limit) + " (pass --no-guard to override)");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Certified bounds and exact maxima for chain-weight optimization"};
  app.require_subcommand(1);
  app.set_version_flag("--version", bpfree_version());

  Common table_opts, solve_f_opts, solve_g_opts, bounds_opts, verify_opts, lambert_opts;

  unsigned long table_n_max = 17;
  std::vector<unsigned long> table_r = {1, 2};
  auto* table = app.add_subcommand("table", "Floors of F(n, r) for n = 2..n_max");
  table->add_option("--n-max", table_n_max, "Largest n")->check(CLI::Range(2UL, 1UL << 16))->capture_default_str();
  table->add_option("--r", table_r, "Comma-separated r values")->delimiter(',')->check(CLI::PositiveNumber);
  add_common(table, table_opts, "csv", true);

  unsigned long f_n = 0, f_r = 1;
  bool bruteforce = false;
  auto* solve_f = app.add_subcommand("solve-f", "Exact maximum F(n, r) with a witness chain");
  solve_f->add_option("--n", f_n, "Dimension")->required()->check(CLI::PositiveNumber);
  solve_f->add_option("--r", f_r, "Weight r")->check(CLI::PositiveNumber)->capture_default_str();
  solve_f->add_flag("--bruteforce", bruteforce, "Exhaustive search instead of dynamic programming (n <= 8)");
  add_common(solve_f, solve_f_opts, "text", true);

  unsigned long g_n = 6;
  auto* solve_g = app.add_subcommand("solve-g", "Certified candidate maximum for the refined objective G(n)");
  solve_g->add_option("--n", g_n, "Dimension")->check(CLI::Range(2UL, 12UL))->capture_default_str();
  add_common(solve_g, solve_g_opts, "text", false);

  unsigned long b_n = 0, b_r = 1;
  bool with_construction = false, sweep = false;
  auto* bounds = app.add_subcommand("bounds", "Closed-form bounds checked against F(n, r)");
  bounds->add_option("--n", b_n, "Dimension (largest n with --sweep)")->required();
  bounds->add_option("--r", b_r, "Weight r")->check(CLI::PositiveNumber)->capture_default_str();
  bounds->add_flag("--with-construction", with_construction, "Include the explicit lower-bound chain");
  bounds->add_flag("--sweep", sweep, "Plot-ready rows for n = 2..N");
  add_common(bounds, bounds_opts, "csv", true);

  std::string suite;
  auto* verify = app.add_subcommand("verify", "Run a self-check suite");
  verify->add_option("suite", suite, "table1 | sixfold | bounds | oracle | appendix")
      ->required()
      ->check(CLI::IsMember({"table1", "sixfold", "bounds", "oracle", "appendix"}));
  add_common(verify, verify_opts, "text", false);

  std::string x;
  auto* lambertw = app.add_subcommand("lambertw", "Certified enclosure of the principal Lambert W");
  lambertw->add_option("x", x, "Rational x >= 0 (p, p/q or decimal), or e")->required();
  add_common(lambertw, lambert_opts, "text", false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*table) {
      guard(table_opts, table_n_max, kTableGuard, "n_max");
      bpfree_table* t = nullptr;
      check(bpfree_table_build(table_n_max, table_r.data(), table_r.size(), &t));
      std::unique_ptr<bpfree_table, decltype(&bpfree_table_free)> owned(t, &bpfree_table_free);
      char* out = nullptr;
      check(bpfree_table_render(t, to_format(table_opts.format), &out));
      emit(table_opts, out);
    } else if (*solve_f) {
      guard(solve_f_opts, f_n, kSolveGuard, "n");
      bpfree_solve_result* res = nullptr;
      check(bpfree_solve_f(f_n, f_r, bruteforce ? 1 : 0, &res));
      std::unique_ptr<bpfree_solve_result, decltype(&bpfree_solve_result_free)> owned(res, &bpfree_solve_result_free);
      char* out = nullptr;
      check(bpfree_solve_result_render(res, to_format(solve_f_opts.format), &out));
      emit(solve_f_opts, out);
    } else if (*solve_g) {
      bpfree_solve_result* res = nullptr;
      check(bpfree_solve_g(g_n, &res));
      std::unique_ptr<bpfree_solve_result, decltype(&bpfree_solve_result_free)> owned(res, &bpfree_solve_result_free);
      char* out = nullptr;
      check(bpfree_solve_result_render(res, to_format(solve_g_opts.format), &out));
      emit(solve_g_opts, out);
    } else if (*bounds) {
      bpfree_bound_options options;
      bpfree_bound_options_init(&options);
      options.precision = bounds_opts.precision;
      options.with_construction = with_construction ? 1 : 0;
      if (bounds_opts.no_guard) options.solve_limit = static_cast<unsigned long>(-1);
      char* out = nullptr;
      if (sweep) {
        check(bpfree_bounds_sweep(b_n, b_r, &options, to_format(bounds_opts.format), &out));
      } else {
        bpfree_bound_report* report = nullptr;
        check(bpfree_bounds_build(b_n, b_r, &options, &report));
        std::unique_ptr<bpfree_bound_report, decltype(&bpfree_bounds_free)> owned(report, &bpfree_bounds_free);
        check(bpfree_bounds_render(report, to_format(bounds_opts.format), &out));
      }
      emit(bounds_opts, out);
    } else if (*verify) {
      bpfree_verify_report* report = nullptr;
      check(bpfree_verify_run(suite.c_str(), verify_opts.precision, &report));
      std::unique_ptr<bpfree_verify_report, decltype(&bpfree_verify_free)> owned(report, &bpfree_verify_free);
      char* out = nullptr;
      check(bpfree_verify_render(report, to_format(verify_opts.format), &out));
      emit(verify_opts, out);
      return bpfree_verify_passed(report) ? kExitOk : kExitFailure;
    } else if (*lambertw) {
      char* out = nullptr;
      check(bpfree_lambert_w_render(x.c_str(), lambert_opts.precision, to_format(lambert_opts.format), &out));
      emit(lambert_opts, out);
    }
  } catch (const CliError& e) {
    std::cerr << "bpfree: " << e.what() << "\n";
    return e.code();
  } catch (const std::exception& e) {
    std::cerr << "bpfree: internal error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitOk;
}
