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

// Text, CSV and JSON renderings of solver, bound and verification results.
// Output is a pure function of the input, so repeated runs are byte-identical.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bpfree/bounds.hpp"
#include "bpfree/solver.hpp"
#include "bpfree/verify.hpp"

namespace bpfree {

enum class Format { kCsv, kJson, kText };

inline constexpr int kSchemaVersion = 1;

std::optional<Format> parse_format(std::string_view name);

// Decimal digits that resolve `precision` bits.
int digits_for(unsigned long precision);

std::string render_table(const std::vector<TableCell>& cells, Format format);
// kind is "F" or "G".
std::string render_solve(std::string_view kind, unsigned long n, const Integer& r, const SolveResult& result,
                         Format format);
std::string render_bounds(const BoundReport& report, Format format);
std::string render_sweep(const std::vector<SweepRow>& rows, const Integer& r, Format format);
std::string render_lambert_w(std::string_view x, const DyadicInterval& w, unsigned long precision, Format format);
std::string render_verify(const VerifyReport& report, Format format);

}  // namespace bpfree
