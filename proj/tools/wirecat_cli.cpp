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

// Command-line front end.  Everything goes through the C API of the shared
// library; this file holds argument plumbing only.
//
// Exit codes: 0 success, 1 verification failure, 2 input error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>

#include <CLI11.hpp>

#include "wirecat/capi.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitInputError = 2;

int exit_code(wirecat_status status) {
  switch (status) {
    case WIRECAT_OK:
      return kExitOk;
    case WIRECAT_ERROR_VERIFY_FAILED:
      return kExitVerifyFailed;
    default:
      return kExitInputError;
  }
}

int report_error(wirecat_status status) {
  std::cerr << "error: " << wirecat_last_error() << " ("
            << wirecat_status_name(status) << ")\n";
  return exit_code(status);
}

struct SemigroupHandle {
  wirecat_semigroup* ptr = nullptr;
  ~SemigroupHandle() { wirecat_semigroup_free(ptr); }
};

struct StringHandle {
  char* ptr = nullptr;
  ~StringHandle() { wirecat_string_free(ptr); }
};

int load_semigroup(const std::string& path, SemigroupHandle& handle) {
  wirecat_status status = wirecat_semigroup_read_file(path.c_str(), &handle.ptr);
  if (status != WIRECAT_OK) {
    return report_error(status);
  }
  return kExitOk;
}

// The functor argument is either "nepow" or "writer:<cayley-file>".
bool parse_functor_spec(const std::string& spec, bool& is_writer,
                        std::string& writer_path) {
  if (spec == "nepow") {
    is_writer = false;
    return true;
  }
  if (spec.rfind("writer:", 0) == 0) {
    is_writer = true;
    writer_path = spec.substr(7);
    return !writer_path.empty();
  }
  return false;
}

int max_arrows_from_env() {
  const char* env = std::getenv("WIRECAT_MAX_ARROWS");
  if (env == nullptr || *env == '\0') {
    return 0;  // library default
  }
  return std::atoi(env);
}

int emit(wirecat_status status, const StringHandle& text) {
  if (status != WIRECAT_OK) {
    return report_error(status);
  }
  std::cout << text.ptr;
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite semigroups, Karoubi envelopes and induced operations"};
  app.require_subcommand(1);
  int max_arrows = max_arrows_from_env();

  std::string analyze_file;
  CLI::App* analyze = app.add_subcommand(
      "analyze", "Idempotents, regularity and the support morphism");
  analyze->add_option("file", analyze_file, "Cayley table file")->required();

  std::string karoubi_file, karoubi_export;
  CLI::App* karoubi =
      app.add_subcommand("karoubi", "Karoubi envelope summary");
  karoubi->add_option("file", karoubi_file, "Cayley table file")->required();
  karoubi->add_option("--export", karoubi_export,
                      "write the wired-category JSON export to this path");

  std::string theta_file;
  CLI::App* theta_cmd = app.add_subcommand(
      "theta", "Principal identifier relation on the Karoubi envelope");
  theta_cmd->add_option("file", theta_file, "Cayley table file")->required();

  std::string factorize_file;
  CLI::App* factorize = app.add_subcommand(
      "factorize", "Split epi -- split mono factorizations in K(S)");
  factorize->add_option("file", factorize_file, "Cayley table file")
      ->required();

  std::string induced_functor, induced_semigroup;
  CLI::App* induced = app.add_subcommand(
      "induced", "Induced semigroup on T(S), printed as a Cayley table");
  induced
      ->add_option("--functor", induced_functor,
                   "nepow or writer:<cayley-file>")
      ->required();
  induced->add_option("--semigroup", induced_semigroup, "Cayley table file")
      ->required();

  std::string constants_functor, constants_semigroup;
  int constants_bound = 3;
  CLI::App* constants = app.add_subcommand(
      "constants", "Natural families and their constant classification");
  constants
      ->add_option("--functor", constants_functor,
                   "nepow or writer:<cayley-file>")
      ->required();
  constants->add_option("--semigroup", constants_semigroup,
                        "also check constant transfer into T(S)");
  constants->add_option("--max-size", constants_bound,
                        "skeleton size bound (default 3)");

  int enumerate_order = 0;
  CLI::App* enumerate =
      app.add_subcommand("enumerate", "All labeled semigroups of an order");
  enumerate->add_option("--order", enumerate_order, "order (1..3)")
      ->required();

  std::string verify_suite = "all";
  int verify_max_order = 3;
  CLI::App* verify =
      app.add_subcommand("verify", "Run the verification suites");
  verify->add_option(
      "--suite", verify_suite,
      "all, regularity, adjunction, theta, semigroupad or constants");
  verify->add_option("--max-order", verify_max_order,
                     "corpus order bound (1..3, default 3)");

  CLI11_PARSE(app, argc, argv);

  if (analyze->parsed()) {
    SemigroupHandle s;
    if (int rc = load_semigroup(analyze_file, s); rc != kExitOk) {
      return rc;
    }
    StringHandle text;
    return emit(wirecat_analyze_report(s.ptr, &text.ptr), text);
  }

  if (karoubi->parsed()) {
    SemigroupHandle s;
    if (int rc = load_semigroup(karoubi_file, s); rc != kExitOk) {
      return rc;
    }
    StringHandle summary;
    wirecat_status status =
        wirecat_karoubi_summary(s.ptr, max_arrows, &summary.ptr);
    if (status != WIRECAT_OK) {
      return report_error(status);
    }
    if (!karoubi_export.empty()) {
      StringHandle json;
      status = wirecat_karoubi_json(s.ptr, max_arrows, &json.ptr);
      if (status != WIRECAT_OK) {
        return report_error(status);
      }
      std::ofstream out(karoubi_export, std::ios::binary);
      if (!out) {
        std::cerr << "error: cannot write '" << karoubi_export << "'\n";
        return kExitInputError;
      }
      out << json.ptr;
    }
    std::cout << summary.ptr;
    return kExitOk;
  }

  if (theta_cmd->parsed()) {
    SemigroupHandle s;
    if (int rc = load_semigroup(theta_file, s); rc != kExitOk) {
      return rc;
    }
    StringHandle text;
    return emit(wirecat_theta_report(s.ptr, max_arrows, &text.ptr), text);
  }

  if (factorize->parsed()) {
    SemigroupHandle s;
    if (int rc = load_semigroup(factorize_file, s); rc != kExitOk) {
      return rc;
    }
    StringHandle text;
    return emit(wirecat_factorize_report(s.ptr, max_arrows, &text.ptr), text);
  }

  if (induced->parsed() || constants->parsed()) {
    bool is_writer = false;
    std::string writer_path;
    const std::string& spec =
        induced->parsed() ? induced_functor : constants_functor;
    if (!parse_functor_spec(spec, is_writer, writer_path)) {
      std::cerr << "error: --functor must be nepow or writer:<file>\n";
      return kExitInputError;
    }
    SemigroupHandle s0;
    if (is_writer) {
      if (int rc = load_semigroup(writer_path, s0); rc != kExitOk) {
        return rc;
      }
    }
    if (induced->parsed()) {
      SemigroupHandle s;
      if (int rc = load_semigroup(induced_semigroup, s); rc != kExitOk) {
        return rc;
      }
      StringHandle table;
      wirecat_status status =
          is_writer ? wirecat_induced_writer(s0.ptr, s.ptr, &table.ptr)
                    : wirecat_induced_nepow(s.ptr, &table.ptr);
      return emit(status, table);
    }
    SemigroupHandle transfer;
    if (!constants_semigroup.empty()) {
      if (int rc = load_semigroup(constants_semigroup, transfer);
          rc != kExitOk) {
        return rc;
      }
    }
    StringHandle text;
    wirecat_status status =
        is_writer ? wirecat_constants_report_writer(
                        s0.ptr, transfer.ptr, constants_bound, &text.ptr)
                  : wirecat_constants_report_nepow(transfer.ptr,
                                                   constants_bound, &text.ptr);
    return emit(status, text);
  }

  if (enumerate->parsed()) {
    StringHandle text;
    return emit(wirecat_enumerate_corpus(enumerate_order, &text.ptr), text);
  }

  if (verify->parsed()) {
    StringHandle text;
    wirecat_status status = wirecat_verify(verify_suite.c_str(),
                                           verify_max_order, max_arrows,
                                           &text.ptr);
    if (text.ptr != nullptr) {
      std::cout << text.ptr;
    }
    if (status == WIRECAT_OK || status == WIRECAT_ERROR_VERIFY_FAILED) {
      return exit_code(status);
    }
    return report_error(status);
  }

  return kExitInputError;
}
