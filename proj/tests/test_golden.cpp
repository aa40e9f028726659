// Copyright 2026 The wirecat authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <sys/wait.h>

#include <cstdio>
#include <doctest.h>
#include <fstream>
#include <sstream>
#include <string>

#include "wirecat/cayley_io.hpp"
#include "wirecat/corpus.hpp"
#include "wirecat/reports.hpp"
#include "wirecat/semigroupad.hpp"

using namespace wirecat;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE_MESSAGE(in.good(), "missing file ", path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

std::string golden(const std::string& name) {
  return slurp(std::string(WIRECAT_GOLDEN_DIR) + "/" + name);
}

std::string fixture_path(const std::string& name) {
  return std::string(WIRECAT_FIXTURE_DIR) + "/" + name + ".tbl";
}

struct CommandResult {
  int exit_code = -1;
  std::string output;
};

CommandResult run_command(const std::string& command) {
  CommandResult result;
  FILE* pipe = popen((command + " 2>&1").c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buffer[512];
  while (size_t n = fread(buffer, 1, sizeof buffer, pipe)) {
    result.output.append(buffer, n);
  }
  int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

}  // namespace

TEST_CASE("fixture table files parse to the built-in fixtures") {
  for (const auto& [name, s] : fixtures()) {
    CHECK(read_cayley_file(fixture_path(name)) == s);
  }
}

TEST_CASE("golden analyze reports") {
  for (const auto& [name, s] : fixtures()) {
    CHECK(analyze_report(s) == golden("analyze_" + name + ".txt"));
  }
}

TEST_CASE("golden karoubi summaries") {
  for (const auto& [name, s] : fixtures()) {
    CHECK(karoubi_summary(s) == golden("karoubi_" + name + ".txt"));
  }
}

TEST_CASE("golden karoubi json export") {
  CHECK(karoubi_json(fixture("SL2")) == golden("karoubi_SL2.json"));
}

TEST_CASE("golden theta and factorize reports") {
  CHECK(theta_report_text(fixture("SL2")) == golden("theta_SL2.txt"));
  CHECK(factorize_report_text(fixture("SL2")) == golden("factorize_SL2.txt"));
}

TEST_CASE("golden induced tables") {
  auto nepow = nepow_semigroupad();
  for (const auto& [name, s] : fixtures()) {
    CHECK(format_cayley(induced_operation(*nepow, s)) ==
          golden("induced_nepow_" + name + ".txt"));
  }
  auto writer = writer_semigroupad(fixture("Z2"));
  CHECK(format_cayley(induced_operation(*writer, fixture("Z2"))) ==
        golden("induced_writer_Z2_Z2.txt"));
}

TEST_CASE("golden constants reports") {
  auto nepow = nepow_semigroupad();
  CHECK(constants_report_text(*nepow, nullptr, 3) ==
        golden("constants_nepow.txt"));
  auto writer = writer_semigroupad(fixture("Z2"));
  FiniteSemigroup z2 = fixture("Z2");
  CHECK(constants_report_text(*writer, &z2, 3) ==
        golden("constants_writer_Z2_Z2.txt"));
}

TEST_CASE("cli analyze matches the golden report") {
  CommandResult r =
      run_command(std::string(WIRECAT_CLI_PATH) + " analyze " +
                  fixture_path("NULL2"));
  CHECK(r.exit_code == 0);
  CHECK(r.output == golden("analyze_NULL2.txt"));
}

TEST_CASE("cli karoubi summary") {
  CommandResult r = run_command(std::string(WIRECAT_CLI_PATH) + " karoubi " +
                                fixture_path("SL2"));
  CHECK(r.exit_code == 0);
  CHECK(r.output == golden("karoubi_SL2.txt"));
}

TEST_CASE("cli induced emits a re-ingestible table") {
  CommandResult r = run_command(std::string(WIRECAT_CLI_PATH) +
                                " induced --functor nepow --semigroup " +
                                fixture_path("Z2"));
  CHECK(r.exit_code == 0);
  CHECK(r.output == golden("induced_nepow_Z2.txt"));

  CommandResult w = run_command(std::string(WIRECAT_CLI_PATH) +
                                " induced --functor writer:" +
                                fixture_path("Z2") + " --semigroup " +
                                fixture_path("Z2"));
  CHECK(w.exit_code == 0);
  CHECK(w.output == golden("induced_writer_Z2_Z2.txt"));
}

TEST_CASE("cli exit codes") {
  // Malformed input file: exit 2 and a line number in the message.
  std::string bad = std::string(WIRECAT_FIXTURE_DIR) + "/malformed.txt";
  CommandResult r =
      run_command(std::string(WIRECAT_CLI_PATH) + " analyze " + bad);
  CHECK(r.exit_code == 2);
  CHECK(r.output.find("line") != std::string::npos);

  CommandResult missing =
      run_command(std::string(WIRECAT_CLI_PATH) + " analyze /no/such/file");
  CHECK(missing.exit_code == 2);

  CommandResult verify = run_command(
      std::string(WIRECAT_CLI_PATH) +
      " verify --suite regularity --max-order 1");
  CHECK(verify.exit_code == 0);
  CHECK(verify.output.find("RESULT PASS") != std::string::npos);
}

TEST_CASE("cli verify accepts every suite name") {
  for (const char* suite :
       {"regularity", "adjunction", "theta", "semigroupad", "constants"}) {
    CommandResult r = run_command(std::string(WIRECAT_CLI_PATH) +
                                  " verify --suite " + suite +
                                  " --max-order 1");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("RESULT PASS") != std::string::npos);
  }
  CommandResult bogus = run_command(std::string(WIRECAT_CLI_PATH) +
                                    " verify --suite bogus --max-order 1");
  CHECK(bogus.exit_code == 2);
}

TEST_CASE("cli honors the WIRECAT_MAX_ARROWS override") {
  CommandResult r =
      run_command("WIRECAT_MAX_ARROWS=2 " + std::string(WIRECAT_CLI_PATH) +
                  " karoubi " + fixture_path("SL2"));
  CHECK(r.exit_code == 2);
  CHECK(r.output.find("size bound") != std::string::npos);

  CommandResult ok =
      run_command("WIRECAT_MAX_ARROWS=64 " + std::string(WIRECAT_CLI_PATH) +
                  " karoubi " + fixture_path("SL2"));
  CHECK(ok.exit_code == 0);
}
