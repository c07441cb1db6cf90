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

// Command-line front end over the C API.
//
// Exit codes: 0 when every requested check passes, 1 on a verification or
// construction failure, 2 on usage, parse or input errors.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ampcode/ampcode.h"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct CodeSource {
  std::string file;
  int catalog = 0;
  bool as_printed = false;

  void attach(CLI::App* app) {
    auto* f = app->add_option("--file", file, "Code file in the text code format");
    auto* c = app->add_option("--catalog", catalog, "Catalog example id (1-11)");
    f->excludes(c);
    app->add_flag("--as-printed", as_printed, "Use the catalog entry exactly as printed");
  }
};

struct Output {
  std::string format = "text";
  std::string out;
  bool timings = false;

  void attach(CLI::App* app, bool with_out = false) {
    app->add_option("--format", format, "Report format")->check(CLI::IsMember({"text", "json"}));
    if (with_out) app->add_option("--out", out, "Write the code file here instead of standard output");
  }
};

int exit_for(ampc_status status) {
  return status == AMPC_ERR_CONSTRUCTION || status == AMPC_ERR_CRITERIA ? kExitFail : kExitUsage;
}

int report_error(ampc_status status) {
  std::cerr << "error: " << ampc_status_name(status) << ": " << ampc_last_error() << "\n";
  return exit_for(status);
}

std::string render(const ampc_report* report, ampc_format format) {
  char* text = nullptr;
  if (ampc_report_render(report, format, &text) != AMPC_OK) return {};
  std::string out(text);
  ampc_string_free(text);
  return out;
}

std::string payload(const ampc_report* report) {
  char* text = nullptr;
  if (ampc_report_payload(report, &text) != AMPC_OK) return {};
  std::string out(text);
  ampc_string_free(text);
  return out;
}

// Prints the report and returns the exit code it implies.
int finish(ampc_status status, ampc_report*& report, const Output& output, bool emits_code = false) {
  if (status != AMPC_OK) return report_error(status);
  const ampc_format format = output.format == "json" ? AMPC_FORMAT_JSON : AMPC_FORMAT_TEXT;
  const int code = ampc_report_passed(report) ? kExitPass : kExitFail;
  const std::string body = payload(report);
  if (emits_code && !body.empty() && !output.out.empty()) {
    std::ofstream file(output.out);
    if (!file || !(file << body)) {
      ampc_report_free(report);
      std::cerr << "error: cannot write " << output.out << "\n";
      return kExitUsage;
    }
    std::cout << render(report, format);
  } else if (emits_code && !body.empty() && format == AMPC_FORMAT_TEXT) {
    std::cout << body;
    std::cerr << render(report, format);
  } else {
    std::cout << render(report, format);
  }
  ampc_report_free(report);
  return code;
}

ampc_status load(const CodeSource& source, ampc_code** code) {
  if (!source.file.empty()) {
    if (source.as_printed) std::cerr << "warning: --as-printed applies to catalog entries only\n";
    return ampc_code_load(source.file.c_str(), code);
  }
  if (source.catalog == 0) {
    std::cerr << "error: one of --file or --catalog is required\n";
    return AMPC_ERR_INVALID_ARGUMENT;
  }
  return ampc_code_from_catalog(source.catalog, source.as_printed ? AMPC_VARIANT_AS_PRINTED : AMPC_VARIANT_PREFERRED,
                                code);
}

std::string read_file(const std::string& path, bool& ok) {
  std::ifstream in(path);
  ok = static_cast<bool>(in);
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Verify, construct and simulate amplitude-damping codes built from quasi-classical states"};
  app.require_subcommand(1);
  app.set_version_flag("--version", ampc_version());

  // verify
  auto* verify = app.add_subcommand("verify", "Check the error-correction conditions exactly or numerically");
  CodeSource verify_src;
  Output verify_out;
  int verify_t = -1;
  std::string verify_mode = "exact";
  std::string verify_gamma;
  double verify_tol = 1e-12;
  verify_src.attach(verify);
  verify_out.attach(verify);
  verify->add_option("--t", verify_t, "Correctable losses (default: design t)");
  verify->add_option("--mode", verify_mode, "exact or numeric")->check(CLI::IsMember({"exact", "numeric"}));
  verify->add_option("--gamma", verify_gamma, "Damping rate for numeric mode (default 0.1)");
  verify->add_option("--tol", verify_tol, "Numeric tolerance");
  verify->add_flag("--timings", verify_out.timings, "Include elapsed time");

  // construct
  auto* construct = app.add_subcommand("construct", "Build codes");
  construct->require_subcommand(1);
  Output construct_out;
  auto* t1 = construct->add_subcommand("t1", "Cyclic-orbit family correcting one loss");
  unsigned t1_n = 0, t1_m = 0, t1_d = 2;
  t1->add_option("--n", t1_n, "Photons before scaling")->required();
  t1->add_option("--m", t1_m, "Modes")->required();
  t1->add_option("--d", t1_d, "Scale factor");
  construct_out.attach(t1, true);
  auto* t2 = construct->add_subcommand("t2", "Orbit pair correcting two losses");
  std::vector<unsigned> t2_x;
  unsigned t2_d = 3;
  t2->add_option("--x", t2_x, "Seed state, comma separated")->required()->delimiter(',');
  t2->add_option("--d", t2_d, "Scale factor");
  construct_out.attach(t2, true);
  auto* weights = construct->add_subcommand("weights", "Solve weights on given supports");
  std::string weights_file;
  unsigned weights_t = 1;
  weights->add_option("--supports", weights_file, "Supports file")->required();
  weights->add_option("--t", weights_t, "Correctable losses")->required();
  construct_out.attach(weights, true);

  // fidelity
  auto* fidelity = app.add_subcommand("fidelity", "Fidelity polynomial of a code");
  CodeSource fid_src;
  Output fid_out;
  int fid_t = -1;
  std::string fid_gamma;
  fid_src.attach(fidelity);
  fid_out.attach(fidelity);
  fidelity->add_option("--t", fid_t, "Correctable losses (default: design t)");
  fidelity->add_option("--gamma", fid_gamma, "Evaluate at this damping rate");

  // rate
  auto* rate = app.add_subcommand("rate", "Encoding rate");
  CodeSource rate_src;
  Output rate_out;
  rate_src.attach(rate);
  rate_out.attach(rate);

  // bound
  auto* bound = app.add_subcommand("bound", "Photon count guaranteed to admit a code");
  unsigned bound_lo = 1, bound_t = 1, bound_m = 2;
  Output bound_out;
  bound->add_option("--lo", bound_lo, "Logical states")->required();
  bound->add_option("--t", bound_t, "Correctable losses")->required();
  bound->add_option("--m", bound_m, "Modes")->required();
  bound_out.attach(bound);

  // simulate
  auto* simulate = app.add_subcommand("simulate", "Monte Carlo channel plus recovery");
  CodeSource sim_src;
  Output sim_out;
  int sim_t = -1;
  std::string sim_gamma;
  std::uint64_t sim_shots = 100000, sim_seed = 0;
  std::optional<double> sim_a, sim_b;
  std::vector<double> sim_coeffs;
  unsigned sim_threads = 1;
  sim_src.attach(simulate);
  sim_out.attach(simulate);
  simulate->add_option("--t", sim_t, "Correctable losses (default: design t)");
  simulate->add_option("--gamma", sim_gamma, "Damping rate")->required();
  simulate->add_option("--shots", sim_shots, "Number of shots");
  simulate->add_option("--seed", sim_seed, "Random seed");
  auto* a_opt = simulate->add_option("--a", sim_a, "Coefficient of the first codeword");
  auto* b_opt = simulate->add_option("--b", sim_b, "Coefficient of the second codeword");
  auto* c_opt = simulate->add_option("--coeffs", sim_coeffs, "All codeword coefficients")->delimiter(',');
  c_opt->excludes(a_opt)->excludes(b_opt);
  simulate->add_option("--threads", sim_threads, "Worker threads");
  simulate->add_flag("--timings", sim_out.timings, "Include elapsed time");

  // optimal-t
  auto* optimal = app.add_subcommand("optimal-t", "Estimate the best number of correctable losses");
  std::string opt_gamma;
  double opt_f = 0.5, opt_alpha = 3.0;
  unsigned opt_lo = 1;
  Output opt_out;
  optimal->add_option("--gamma", opt_gamma, "Damping rate")->required();
  optimal->add_option("--f", opt_f, "Scaling prefactor in N = f l_o t^alpha");
  optimal->add_option("--alpha", opt_alpha, "Scaling exponent");
  optimal->add_option("--lo", opt_lo, "Logical states");
  opt_out.attach(optimal);

  // catalog
  auto* catalog = app.add_subcommand("catalog", "Codes from the explicit examples");
  catalog->require_subcommand(1);
  Output cat_out;
  auto* cat_list = catalog->add_subcommand("list", "List entries");
  cat_out.attach(cat_list);
  auto* cat_show = catalog->add_subcommand("show", "Print one entry as a code file");
  int show_id = 0;
  bool show_printed = false;
  cat_show->add_option("id", show_id, "Entry id")->required();
  cat_show->add_flag("--as-printed", show_printed, "Show the printed variant");
  cat_out.attach(cat_show);
  auto* cat_verify = catalog->add_subcommand("verify-all", "Verify every entry");
  cat_out.attach(cat_verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  ampc_report* report = nullptr;
  ampc_code* code = nullptr;
  auto with_code = [&](const CodeSource& source, auto&& run, const Output& output) {
    ampc_status status = load(source, &code);
    if (status != AMPC_OK) return ampc_last_error()[0] ? report_error(status) : kExitUsage;
    for (size_t i = 0; i < ampc_code_warning_count(code); ++i)
      std::cerr << "warning: " << ampc_code_warning(code, i) << "\n";
    status = run(code);
    ampc_code_free(code);
    return finish(status, report, output);
  };

  if (*verify) {
    return with_code(
        verify_src,
        [&](ampc_code* c) {
          ampc_verify_options o;
          ampc_verify_options_init(&o);
          o.t = verify_t;
          o.numeric = verify_mode == "numeric";
          o.gamma = verify_gamma.empty() ? nullptr : verify_gamma.c_str();
          o.tolerance = verify_tol;
          o.timings = verify_out.timings;
          return ampc_verify(c, &o, &report);
        },
        verify_out);
  }
  if (*construct) {
    if (*t1) return finish(ampc_construct_t1(t1_n, t1_m, t1_d, &report), report, construct_out, true);
    if (*t2) return finish(ampc_construct_t2(t2_x.data(), t2_x.size(), t2_d, &report), report, construct_out, true);
    bool ok = false;
    const std::string text = read_file(weights_file, ok);
    if (!ok) {
      std::cerr << "error: cannot open " << weights_file << "\n";
      return kExitUsage;
    }
    return finish(ampc_construct_weights(text.c_str(), weights_t, &report), report, construct_out, true);
  }
  if (*fidelity) {
    return with_code(
        fid_src,
        [&](ampc_code* c) { return ampc_fidelity(c, fid_t, fid_gamma.empty() ? nullptr : fid_gamma.c_str(), &report); },
        fid_out);
  }
  if (*rate) return with_code(rate_src, [&](ampc_code* c) { return ampc_rate(c, &report); }, rate_out);
  if (*bound) return finish(ampc_bound(bound_lo, bound_t, bound_m, &report), report, bound_out);
  if (*simulate) {
    return with_code(
        sim_src,
        [&](ampc_code* c) {
          std::vector<double> coeffs = sim_coeffs;
          if (sim_a || sim_b) coeffs = {sim_a.value_or(0.0), sim_b.value_or(0.0)};
          ampc_simulate_options o;
          ampc_simulate_options_init(&o);
          o.t = sim_t;
          o.gamma = sim_gamma.c_str();
          o.shots = sim_shots;
          o.seed = sim_seed;
          o.coefficients = coeffs.empty() ? nullptr : coeffs.data();
          o.coefficient_count = coeffs.size();
          o.threads = sim_threads;
          o.timings = sim_out.timings;
          return ampc_simulate(c, &o, &report);
        },
        sim_out);
  }
  if (*optimal) return finish(ampc_optimal_t(opt_gamma.c_str(), opt_f, opt_alpha, opt_lo, &report), report, opt_out);
  if (*cat_list) return finish(ampc_catalog_list(&report), report, cat_out);
  if (*cat_show) {
    return finish(ampc_catalog_show(show_id, show_printed ? AMPC_VARIANT_AS_PRINTED : AMPC_VARIANT_PREFERRED, &report),
                  report, cat_out);
  }
  if (*cat_verify) return finish(ampc_catalog_verify_all(&report), report, cat_out);
  return kExitUsage;
}
