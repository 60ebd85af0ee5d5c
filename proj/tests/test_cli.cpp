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

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(BPFREE_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

int count_lines(const std::string& s) {
  int n = 0;
  for (char c : s) n += c == '\n';
  return n;
}

}  // namespace

TEST_CASE("table") {
  auto r = run("table --n-max 17 --r 1,2 --format csv");
  CHECK(r.code == 0);
  CHECK(count_lines(r.out) == 33);
  r = run("table --n-max 2 --r 1");
  CHECK(r.code == 0);
  CHECK(r.out.find("\n2,1,2,") != std::string::npos);
  r = run("table --n-max 3 --r 1 --format json");
  CHECK(r.code == 0);
  CHECK(r.out.find("\"floor_F\": 2") != std::string::npos);
  CHECK(r.out.find("\"floor_F\": 3") != std::string::npos);
  CHECK(r.out.find("\"schema_version\": 1") != std::string::npos);
}

TEST_CASE("guards and usage errors exit 2") {
  CHECK(run("table --n-max 41").code == 2);
  CHECK(run("table --n-max 3 --format xml").code == 2);
  CHECK(run("table --n-max 3 --precision 8").code == 2);
  CHECK(run("bounds --n 1 --r 1").code == 2);
  CHECK(run("solve-f --n 61").code == 2);
  CHECK(run("solve-f --n 9 --bruteforce").code == 2);
  CHECK(run("lambertw -1").code == 2);
  CHECK(run("lambertw abc").code == 2);
  CHECK(run("verify nothing").code == 2);
  CHECK(run("frobnicate").code == 2);
  CHECK(run("").code == 2);
  CHECK(run("--help").code == 0);
}

TEST_CASE("solve and bounds") {
  auto r = run("solve-f --n 3 --r 1");
  CHECK(r.code == 0);
  CHECK(r.out.find("F(3, 1) = 2 + 1 * 2^(1/2)") != std::string::npos);
  r = run("solve-g --n 6 --format csv");
  CHECK(r.code == 0);
  CHECK(r.out.find("G,6,,7,") != std::string::npos);
  r = run("bounds --n 6 --r 1");
  CHECK(r.code == 0);
  CHECK(r.out.find("6,1,loglog_thm,17.539188484695955") != std::string::npos);
  CHECK(r.out.find("6,1,loglog_thm,") != std::string::npos);
  r = run("bounds --n 6 --r 1 --format json");
  CHECK(r.out.find("\"floor\": 8") != std::string::npos);
  r = run("bounds --n 110 --r 1 --with-construction --format json");
  CHECK(r.code == 0);
  CHECK(r.out.find("\"construction\"") != std::string::npos);
  CHECK(r.out.find("\"meets_target\": \"true\"") != std::string::npos);
  r = run("bounds --n 12 --r 2 --sweep");
  CHECK(r.code == 0);
  CHECK(count_lines(r.out) == 12);
  r = run("lambertw e --precision 80");
  CHECK(r.code == 0);
  CHECK(r.out.rfind("W(e) in [0.99999", 0) == 0);
}

TEST_CASE("verify exit codes") {
  auto r = run("verify sixfold");
  CHECK(r.code == 0);
  CHECK(r.out.find("PASS G(6) < 8") != std::string::npos);
  r = run("verify oracle --format json");
  CHECK(r.code == 0);
  CHECK(r.out.find("\"passed\": true") != std::string::npos);
}

TEST_CASE("output files are byte-identical across runs") {
  const std::string dir = BPFREE_TEST_TMP;
  const std::string a = dir + "/cli_a.json", b = dir + "/cli_b.json";
  CHECK(run("table --n-max 12 --r 1,3 --format json --output " + a).code == 0);
  CHECK(run("table --n-max 12 --r 1,3 --format json --output " + b).code == 0);
  const std::string first = slurp(a);
  CHECK_FALSE(first.empty());
  CHECK(first == slurp(b));
  CHECK(run("bounds --n 20 --r 5 --output " + a).code == 0);
  CHECK(run("bounds --n 20 --r 5 --output " + b).code == 0);
  CHECK(slurp(a) == slurp(b));
  CHECK(run("table --n-max 3 --output /nonexistent-dir/x.csv").code == 2);
}
