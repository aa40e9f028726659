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

#include "wirecat/capi.h"

#include <cstdlib>
#include <cstring>
#include <functional>
#include <string>

#include "wirecat/cayley_io.hpp"
#include "wirecat/corpus.hpp"
#include "wirecat/errors.hpp"
#include "wirecat/reports.hpp"
#include "wirecat/semigroupad.hpp"
#include "wirecat/suite.hpp"

struct wirecat_semigroup {
  wirecat::FiniteSemigroup value;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& text) {
  char* out = static_cast<char*>(std::malloc(text.size() + 1));
  std::memcpy(out, text.c_str(), text.size() + 1);
  return out;
}

// Runs body(), routing the result into *out and exceptions into status
// codes plus the thread-local message.
wirecat_status guarded_string(char** out,
                              const std::function<std::string()>& body) {
  if (out == nullptr) {
    g_last_error = "output pointer is NULL";
    return WIRECAT_ERROR_ARGUMENT;
  }
  *out = nullptr;
  try {
    *out = dup_string(body());
    g_last_error.clear();
    return WIRECAT_OK;
  } catch (const wirecat::ParseError& e) {
    g_last_error = e.what();
    return WIRECAT_ERROR_PARSE;
  } catch (const wirecat::SizeBoundError& e) {
    g_last_error = e.what();
    return WIRECAT_ERROR_SIZE_BOUND;
  } catch (const wirecat::ShapeMismatchError& e) {
    g_last_error = e.what();
    return WIRECAT_ERROR_ARGUMENT;
  } catch (const wirecat::ValidationError& e) {
    g_last_error = e.what();
    return WIRECAT_ERROR_VALIDATION;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return WIRECAT_ERROR_INTERNAL;
  }
}

wirecat_status guarded_semigroup(
    wirecat_semigroup** out,
    const std::function<wirecat::FiniteSemigroup()>& body) {
  if (out == nullptr) {
    g_last_error = "output pointer is NULL";
    return WIRECAT_ERROR_ARGUMENT;
  }
  *out = nullptr;
  try {
    *out = new wirecat_semigroup{body()};
    g_last_error.clear();
    return WIRECAT_OK;
  } catch (const wirecat::ParseError& e) {
    g_last_error = e.what();
    return WIRECAT_ERROR_PARSE;
  } catch (const wirecat::SizeBoundError& e) {
    g_last_error = e.what();
    return WIRECAT_ERROR_SIZE_BOUND;
  } catch (const wirecat::ValidationError& e) {
    g_last_error = e.what();
    return WIRECAT_ERROR_VALIDATION;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return WIRECAT_ERROR_INTERNAL;
  }
}

int arrows_or_default(int max_arrows) {
  return max_arrows <= 0 ? wirecat::kDefaultMaxArrows : max_arrows;
}

bool require(const void* pointer, const char* what) {
  if (pointer == nullptr) {
    g_last_error = std::string(what) + " is NULL";
    return false;
  }
  return true;
}

}  // namespace

extern "C" {

const char* wirecat_version(void) { return "1.0.0"; }

const char* wirecat_status_name(wirecat_status status) {
  switch (status) {
    case WIRECAT_OK: return "ok";
    case WIRECAT_ERROR_ARGUMENT: return "argument error";
    case WIRECAT_ERROR_PARSE: return "parse error";
    case WIRECAT_ERROR_VALIDATION: return "validation error";
    case WIRECAT_ERROR_SIZE_BOUND: return "size bound exceeded";
    case WIRECAT_ERROR_VERIFY_FAILED: return "verification failed";
    case WIRECAT_ERROR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* wirecat_last_error(void) { return g_last_error.c_str(); }

void wirecat_string_free(char* text) { std::free(text); }

wirecat_status wirecat_semigroup_parse(const char* text,
                                       wirecat_semigroup** out) {
  if (!require(text, "input text")) {
    return WIRECAT_ERROR_ARGUMENT;
  }
  return guarded_semigroup(out,
                           [&] { return wirecat::parse_cayley(text); });
}

wirecat_status wirecat_semigroup_read_file(const char* path,
                                           wirecat_semigroup** out) {
  if (!require(path, "path")) {
    return WIRECAT_ERROR_ARGUMENT;
  }
  return guarded_semigroup(out,
                           [&] { return wirecat::read_cayley_file(path); });
}

wirecat_status wirecat_semigroup_from_table(int n, const int* table,
                                            wirecat_semigroup** out) {
  if (!require(table, "table")) {
    return WIRECAT_ERROR_ARGUMENT;
  }
  if (n < 1) {
    g_last_error = "order must be >= 1";
    return WIRECAT_ERROR_ARGUMENT;
  }
  return guarded_semigroup(out, [&] {
    std::vector<int> entries(table, table + static_cast<size_t>(n) * n);
    return wirecat::validate_semigroup(n, std::move(entries));
  });
}

wirecat_status wirecat_fixture(const char* name, wirecat_semigroup** out) {
  if (!require(name, "fixture name")) {
    return WIRECAT_ERROR_ARGUMENT;
  }
  return guarded_semigroup(out, [&] { return wirecat::fixture(name); });
}

void wirecat_semigroup_free(wirecat_semigroup* s) { delete s; }

int wirecat_semigroup_order(const wirecat_semigroup* s) {
  return s == nullptr ? 0 : s->value.n;
}

wirecat_status wirecat_semigroup_format(const wirecat_semigroup* s,
                                        char** out) {
  if (!require(s, "semigroup")) {
    return WIRECAT_ERROR_ARGUMENT;
  }
  return guarded_string(out, [&] { return wirecat::format_cayley(s->value); });
}

wirecat_status wirecat_analyze_report(const wirecat_semigroup* s, char** out) {
  if (!require(s, "semigroup")) {
    return WIRECAT_ERROR_ARGUMENT;
  }
  return guarded_string(out, [&] { return wirecat::analyze_report(s->value); });
}

wirecat_status wirecat_karoubi_summary(const wirecat_semigroup* s,
                                       int max_arrows, char** out) {
  if (!require(s, "semigroup")) {
    return WIRECAT_ERROR_ARGUMENT;
  }
  return guarded_string(out, [&] {
    return wirecat::karoubi_summary(s->value, arrows_or_default(max_arrows));
  });
}

wirecat_status wirecat_karoubi_json(const wirecat_semigroup* s,
                                    int max_arrows, char** out) {
  if (!require(s, "semigroup")) {
    return WIRECAT_ERROR_ARGUMENT;
  }
  return guarded_string(out, [&] {
    return wirecat::karoubi_json(s->value, arrows_or_default(max_arrows));
  });
}

wirecat_status wirecat_theta_report(const wirecat_semigroup* s,
                                    int max_arrows, char** out) {
  if (!require(s, "semigroup")) {
    return WIRECAT_ERROR_ARGUMENT;
  }
  return guarded_string(out, [&] {
    return wirecat::theta_report_text(s->value, arrows_or_default(max_arrows));
  });
}

wirecat_status wirecat_factorize_report(const wirecat_semigroup* s,
                                        int max_arrows, char** out) {
  if (!require(s, "semigroup")) {
    return WIRECAT_ERROR_ARGUMENT;
  }
  return guarded_string(out, [&] {
    return wirecat::factorize_report_text(s->value,
                                          arrows_or_default(max_arrows));
  });
}

wirecat_status wirecat_induced_writer(const wirecat_semigroup* s0,
                                      const wirecat_semigroup* s, char** out) {
  if (!require(s0, "writer semigroup") || !require(s, "semigroup")) {
    return WIRECAT_ERROR_ARGUMENT;
  }
  return guarded_string(out, [&] {
    auto t = wirecat::writer_semigroupad(s0->value);
    return wirecat::format_cayley(wirecat::induced_operation(*t, s->value));
  });
}

wirecat_status wirecat_induced_nepow(const wirecat_semigroup* s, char** out) {
  if (!require(s, "semigroup")) {
    return WIRECAT_ERROR_ARGUMENT;
  }
  return guarded_string(out, [&] {
    auto t = wirecat::nepow_semigroupad();
    return wirecat::format_cayley(wirecat::induced_operation(*t, s->value));
  });
}

wirecat_status wirecat_constants_report_writer(
    const wirecat_semigroup* s0, const wirecat_semigroup* transfer,
    int size_bound, char** out) {
  if (!require(s0, "writer semigroup")) {
    return WIRECAT_ERROR_ARGUMENT;
  }
  return guarded_string(out, [&] {
    auto t = wirecat::writer_semigroupad(s0->value);
    return wirecat::constants_report_text(
        *t, transfer == nullptr ? nullptr : &transfer->value, size_bound);
  });
}

wirecat_status wirecat_constants_report_nepow(
    const wirecat_semigroup* transfer, int size_bound, char** out) {
  return guarded_string(out, [&] {
    auto t = wirecat::nepow_semigroupad();
    return wirecat::constants_report_text(
        *t, transfer == nullptr ? nullptr : &transfer->value, size_bound);
  });
}

wirecat_status wirecat_enumerate_corpus(int order, char** out) {
  return guarded_string(out, [&] {
    return wirecat::corpus_export(wirecat::enumerate_semigroups(order));
  });
}

wirecat_status wirecat_verify(const char* suite, int max_order,
                              int max_arrows, char** out) {
  if (!require(suite, "suite name")) {
    return WIRECAT_ERROR_ARGUMENT;
  }
  wirecat::SuiteReport report;
  wirecat_status status = guarded_string(out, [&] {
    wirecat::SuiteOptions options;
    options.suite = suite;
    options.max_order = max_order;
    options.max_arrows = arrows_or_default(max_arrows);
    report = wirecat::run_suite(options);
    return report.text();
  });
  if (status != WIRECAT_OK) {
    return status;
  }
  if (!report.ok()) {
    g_last_error = std::to_string(report.failures) + " checks failed";
    return WIRECAT_ERROR_VERIFY_FAILED;
  }
  return WIRECAT_OK;
}

}  // extern "C"
