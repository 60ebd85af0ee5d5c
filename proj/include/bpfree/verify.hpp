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

// Named self-check suites run from the command line.

#include <string>
#include <string_view>
#include <vector>

namespace bpfree {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerifyReport {
  std::string suite;
  std::vector<CheckResult> checks;

  bool passed() const;
};

// table1, sixfold, bounds, oracle, appendix
const std::vector<std::string>& verify_suites();

// Throws std::invalid_argument for an unknown suite name.
VerifyReport run_verify(std::string_view suite, unsigned long precision = 64);

}  // namespace bpfree
