// Copyright 2026 The ampcode Authors
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

#include "ampcode/ampcode.h"

#include <cstdlib>
#include <cstring>
#include <fstream>
#include <sstream>
#include <string>

#include "ampcode/catalog.hpp"
#include "ampcode/code.hpp"
#include "ampcode/commands.hpp"
#include "ampcode/error.hpp"

struct ampc_code {
  ampcode::Code code;
  std::vector<std::string> warnings;
};

struct ampc_report {
  ampcode::Report report;
};

namespace {

thread_local std::string last_error;

ampc_status fail(ampc_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

// Runs `body`, translating exceptions into status codes.
template <typename F>
ampc_status guarded(F&& body) {
  try {
    last_error.clear();
    return body();
  } catch (const ampcode::ParseError& e) {
    return fail(AMPC_ERR_PARSE, e.what());
  } catch (const ampcode::NormalizationError& e) {
    return fail(AMPC_ERR_NORMALIZATION, e.what());
  } catch (const ampcode::StructureError& e) {
    return fail(AMPC_ERR_STRUCTURE, e.what());
  } catch (const ampcode::ConstructionError& e) {
    return fail(AMPC_ERR_CONSTRUCTION, e.what());
  } catch (const ampcode::CriteriaError& e) {
    return fail(AMPC_ERR_CRITERIA, e.what());
  } catch (const ampcode::DomainError& e) {
    return fail(AMPC_ERR_DOMAIN, e.what());
  } catch (const std::bad_alloc&) {
    return fail(AMPC_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(AMPC_ERR_INTERNAL, e.what());
  }
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

ampc_status emit(ampcode::Report report, ampc_report** out) {
  *out = new ampc_report{std::move(report)};
  return AMPC_OK;
}

std::optional<unsigned> optional_t(int t) {
  if (t < 0) return std::nullopt;
  return static_cast<unsigned>(t);
}

ampcode::CatalogVariant to_variant(ampc_variant v) {
  switch (v) {
    case AMPC_VARIANT_AS_PRINTED: return ampcode::CatalogVariant::as_printed;
    case AMPC_VARIANT_CORRECTED: return ampcode::CatalogVariant::corrected;
    default: return ampcode::CatalogVariant::preferred;
  }
}

#define AMPC_REQUIRE(cond, what) \
  if (!(cond)) return fail(AMPC_ERR_INVALID_ARGUMENT, what)

}  // namespace

extern "C" {

const char* ampc_version(void) { return "0.1.0"; }

const char* ampc_last_error(void) { return last_error.c_str(); }

const char* ampc_status_name(ampc_status status) {
  switch (status) {
    case AMPC_OK: return "ok";
    case AMPC_ERR_INVALID_ARGUMENT: return "invalid argument";
    case AMPC_ERR_PARSE: return "parse error";
    case AMPC_ERR_NORMALIZATION: return "normalization error";
    case AMPC_ERR_STRUCTURE: return "structure error";
    case AMPC_ERR_DOMAIN: return "domain error";
    case AMPC_ERR_CONSTRUCTION: return "construction error";
    case AMPC_ERR_CRITERIA: return "criteria violated";
    case AMPC_ERR_NOT_FOUND: return "not found";
    case AMPC_ERR_IO: return "i/o error";
    case AMPC_ERR_INTERNAL: return "internal error";
  }
  return "unknown";
}

ampc_status ampc_code_parse(const char* text, ampc_code** out) {
  AMPC_REQUIRE(text && out, "null argument");
  return guarded([&] {
    ampcode::ParsedCode parsed = ampcode::parse_code(text);
    *out = new ampc_code{std::move(parsed.code), std::move(parsed.warnings)};
    return AMPC_OK;
  });
}

ampc_status ampc_code_load(const char* path, ampc_code** out) {
  AMPC_REQUIRE(path && out, "null argument");
  std::ifstream in(path);
  if (!in) return fail(AMPC_ERR_IO, std::string("cannot open ") + path);
  std::ostringstream text;
  text << in.rdbuf();
  const std::string contents = text.str();
  return ampc_code_parse(contents.c_str(), out);
}

ampc_status ampc_code_from_catalog(int id, ampc_variant variant, ampc_code** out) {
  AMPC_REQUIRE(out, "null argument");
  try {
    const ampcode::CatalogEntry& entry = ampcode::catalog_entry(id);
    if (variant == AMPC_VARIANT_CORRECTED && !entry.corrected)
      return fail(AMPC_ERR_NOT_FOUND, "example " + std::to_string(id) + " has no corrected variant");
  } catch (const ampcode::DomainError& e) {
    return fail(AMPC_ERR_NOT_FOUND, e.what());
  }
  return guarded([&] {
    *out = new ampc_code{ampcode::catalog(id, to_variant(variant)), {}};
    return AMPC_OK;
  });
}

void ampc_code_free(ampc_code* code) { delete code; }

ampc_status ampc_code_serialize(const ampc_code* code, char** out) {
  AMPC_REQUIRE(code && out, "null argument");
  return guarded([&] {
    *out = copy_string(ampcode::serialize_code(code->code));
    return AMPC_OK;
  });
}

ampc_status ampc_code_descriptor(const ampc_code* code, char** out) {
  AMPC_REQUIRE(code && out, "null argument");
  return guarded([&] {
    *out = copy_string(code->code.descriptor());
    return AMPC_OK;
  });
}

unsigned ampc_code_design_t(const ampc_code* code) { return code ? code->code.design_t() : 0; }

size_t ampc_code_codeword_count(const ampc_code* code) { return code ? code->code.size() : 0; }

size_t ampc_code_warning_count(const ampc_code* code) { return code ? code->warnings.size() : 0; }

const char* ampc_code_warning(const ampc_code* code, size_t index) {
  if (!code || index >= code->warnings.size()) return nullptr;
  return code->warnings[index].c_str();
}

void ampc_string_free(char* text) { std::free(text); }

void ampc_verify_options_init(ampc_verify_options* options) {
  if (!options) return;
  options->t = -1;
  options->numeric = 0;
  options->gamma = nullptr;
  options->tolerance = 1e-12;
  options->timings = 0;
}

ampc_status ampc_verify(const ampc_code* code, const ampc_verify_options* options, ampc_report** out) {
  AMPC_REQUIRE(code && out, "null argument");
  ampc_verify_options defaults;
  ampc_verify_options_init(&defaults);
  const ampc_verify_options& o = options ? *options : defaults;
  return guarded([&] {
    ampcode::VerifyOptions v;
    v.t = optional_t(o.t);
    v.numeric = o.numeric != 0;
    if (o.gamma) v.gamma = ampcode::Rational::parse(o.gamma);
    v.tolerance = o.tolerance;
    v.timings = o.timings != 0;
    return emit(ampcode::cmd_verify(code->code, v, code->warnings), out);
  });
}

ampc_status ampc_fidelity(const ampc_code* code, int t, const char* gamma, ampc_report** out) {
  AMPC_REQUIRE(code && out, "null argument");
  return guarded([&] {
    std::optional<ampcode::Rational> g;
    if (gamma) g = ampcode::Rational::parse(gamma);
    return emit(ampcode::cmd_fidelity(code->code, optional_t(t), g), out);
  });
}

ampc_status ampc_rate(const ampc_code* code, ampc_report** out) {
  AMPC_REQUIRE(code && out, "null argument");
  return guarded([&] { return emit(ampcode::cmd_rate(code->code), out); });
}

ampc_status ampc_bound(unsigned l_o, unsigned t, unsigned m, ampc_report** out) {
  AMPC_REQUIRE(out, "null argument");
  return guarded([&] { return emit(ampcode::cmd_bound(l_o, t, m), out); });
}

ampc_status ampc_optimal_t(const char* gamma, double f, double alpha, unsigned l_o, ampc_report** out) {
  AMPC_REQUIRE(gamma && out, "null argument");
  return guarded([&] { return emit(ampcode::cmd_optimal_t(ampcode::Rational::parse(gamma), f, alpha, l_o), out); });
}

void ampc_simulate_options_init(ampc_simulate_options* options) {
  if (!options) return;
  options->t = -1;
  options->gamma = "0";
  options->shots = 100000;
  options->seed = 0;
  options->coefficients = nullptr;
  options->coefficient_count = 0;
  options->threads = 1;
  options->timings = 0;
}

ampc_status ampc_simulate(const ampc_code* code, const ampc_simulate_options* options, ampc_report** out) {
  AMPC_REQUIRE(code && options && out && options->gamma, "null argument");
  AMPC_REQUIRE(options->coefficients || options->coefficient_count == 0, "null coefficient array");
  return guarded([&] {
    ampcode::SimulateOptions s;
    s.t = optional_t(options->t);
    s.gamma = ampcode::Rational::parse(options->gamma);
    s.shots = options->shots;
    s.seed = options->seed;
    if (options->coefficients)
      s.coefficients.assign(options->coefficients, options->coefficients + options->coefficient_count);
    s.threads = options->threads;
    s.timings = options->timings != 0;
    return emit(ampcode::cmd_simulate(code->code, s), out);
  });
}

ampc_status ampc_construct_t1(unsigned n, unsigned m, unsigned d, ampc_report** out) {
  AMPC_REQUIRE(out, "null argument");
  return guarded([&] { return emit(ampcode::cmd_construct_t1(n, m, d), out); });
}

ampc_status ampc_construct_t2(const unsigned* x, size_t m, unsigned d, ampc_report** out) {
  AMPC_REQUIRE(x && m > 0 && out, "null or empty argument");
  return guarded([&] {
    return emit(ampcode::cmd_construct_t2(ampcode::OccupationVector(std::vector<unsigned>(x, x + m)), d), out);
  });
}

ampc_status ampc_construct_weights(const char* supports_text, unsigned t, ampc_report** out) {
  AMPC_REQUIRE(supports_text && out, "null argument");
  return guarded([&] { return emit(ampcode::cmd_construct_weights(supports_text, t), out); });
}

ampc_status ampc_catalog_list(ampc_report** out) {
  AMPC_REQUIRE(out, "null argument");
  return guarded([&] { return emit(ampcode::cmd_catalog_list(), out); });
}

ampc_status ampc_catalog_show(int id, ampc_variant variant, ampc_report** out) {
  AMPC_REQUIRE(out, "null argument");
  try {
    const ampcode::CatalogEntry& entry = ampcode::catalog_entry(id);
    if (variant == AMPC_VARIANT_CORRECTED && !entry.corrected)
      return fail(AMPC_ERR_NOT_FOUND, "example " + std::to_string(id) + " has no corrected variant");
  } catch (const ampcode::DomainError& e) {
    return fail(AMPC_ERR_NOT_FOUND, e.what());
  }
  return guarded([&] { return emit(ampcode::cmd_catalog_show(id, to_variant(variant)), out); });
}

ampc_status ampc_catalog_verify_all(ampc_report** out) {
  AMPC_REQUIRE(out, "null argument");
  return guarded([&] { return emit(ampcode::cmd_catalog_verify_all(), out); });
}

int ampc_report_passed(const ampc_report* report) { return report && report->report.passed ? 1 : 0; }

ampc_status ampc_report_render(const ampc_report* report, ampc_format format, char** out) {
  AMPC_REQUIRE(report && out, "null argument");
  return guarded([&] {
    *out = copy_string(format == AMPC_FORMAT_JSON ? report->report.json() : report->report.text());
    return AMPC_OK;
  });
}

ampc_status ampc_report_payload(const ampc_report* report, char** out) {
  AMPC_REQUIRE(report && out, "null argument");
  return guarded([&] {
    *out = copy_string(report->report.payload);
    return AMPC_OK;
  });
}

void ampc_report_free(ampc_report* report) { delete report; }

}  // extern "C"
