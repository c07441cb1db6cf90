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

#include "ampcode/commands.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "ampcode/construct.hpp"
#include "ampcode/criteria.hpp"
#include "ampcode/error.hpp"
#include "ampcode/metrics.hpp"
#include "ampcode/simulate.hpp"

namespace ampcode {

using Json = nlohmann::ordered_json;

std::string Report::text() const {
  std::string out;
  for (const std::string& line : lines) out += line + "\n";
  return out;
}

std::string Report::json() const { return data.dump(2) + "\n"; }

namespace {

std::string fixed(double value, int digits) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.*f", digits, value);
  return buffer;
}

std::string general(double value, int digits = 10) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.*g", digits, value);
  return buffer;
}

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

Json rational_array(const std::vector<Rational>& values) {
  Json out = Json::array();
  for (const Rational& v : values) out.push_back(v.str());
  return out;
}

Json violation_json(const Violation& v) {
  Json out;
  out["kind"] = to_string(v.kind);
  out["codewords"] = v.codewords;
  Json patterns = Json::array();
  for (const ErrorPattern& k : v.patterns) patterns.push_back(k.values());
  out["patterns"] = patterns;
  if (!v.columns.empty()) {
    std::vector<unsigned> one_based;
    for (unsigned c : v.columns) one_based.push_back(c + 1);
    out["columns"] = one_based;
  }
  out["value"] = v.value;
  return out;
}

constexpr std::size_t kShownViolations = 5;

void add_check(Report& report, Json& checks, const std::string& label, const CriteriaReport& r) {
  Json entry;
  entry["name"] = r.check;
  entry["status"] = to_string(r.status);
  entry["violation_count"] = r.violation_count;
  Json violations = Json::array();
  for (const Violation& v : r.violations) violations.push_back(violation_json(v));
  entry["violations"] = violations;
  if (!r.note.empty()) entry["note"] = r.note;
  checks.push_back(entry);

  std::string line = "  " + label;
  line.resize(20, ' ');
  line += to_string(r.status);
  if (!r.note.empty()) line += "  (" + r.note + ")";
  report.lines.push_back(line);
  for (std::size_t i = 0; i < r.violations.size() && i < kShownViolations; ++i)
    report.lines.push_back("      " + r.violations[i].str());
  if (r.violation_count > kShownViolations)
    report.lines.push_back("      ... " + std::to_string(r.violation_count - kShownViolations) + " more");
}

std::string header(const std::string& command, const Code& code) {
  return command + " " + code.name() + " " + code.descriptor();
}

}  // namespace

// ------------------------------------------------------------------ parsing

std::vector<std::vector<OccupationVector>> parse_supports(std::string_view text) {
  std::vector<std::vector<OccupationVector>> out;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream tokens(raw);
    std::string first;
    if (!(tokens >> first)) continue;
    if (first == "code") continue;
    if (first == "word") {
      std::size_t index = 0;
      if (!(tokens >> index) || index != out.size())
        throw ParseError(line_no, "expected 'word " + std::to_string(out.size()) + "'");
      out.emplace_back();
      continue;
    }
    if (out.empty()) throw ParseError(line_no, "state before the first 'word' line");
    std::string rest = raw;
    if (auto colon = rest.find(':'); colon != std::string::npos) rest = rest.substr(colon + 1);
    std::istringstream numbers(rest);
    std::vector<unsigned> values;
    std::string token;
    while (numbers >> token) {
      if (token.find_first_not_of("0123456789") != std::string::npos)
        throw ParseError(line_no, "expected a non-negative integer, got '" + token + "'");
      values.push_back(static_cast<unsigned>(std::stoul(token)));
    }
    if (values.empty()) throw ParseError(line_no, "empty state");
    out.back().emplace_back(std::move(values));
  }
  if (out.empty()) throw ParseError(line_no, "no 'word' blocks found");
  return out;
}

// ------------------------------------------------------------------- verify

Report cmd_verify(const Code& code, const VerifyOptions& options, const std::vector<std::string>& warnings) {
  const unsigned t = options.t.value_or(code.design_t());
  Report report;
  report.command = "verify";
  Stopwatch clock;
  report.lines.push_back(header("verify", code) + " t=" + std::to_string(t) +
                         " mode=" + (options.numeric ? "numeric" : "exact"));
  Json& d = report.data;
  d["command"] = "verify";
  d["code"] = code.name();
  d["descriptor"] = code.descriptor();
  d["t"] = t;
  d["mode"] = options.numeric ? "numeric" : "exact";
  d["warnings"] = warnings;
  for (const std::string& w : warnings) report.lines.push_back("  warning: " + w);

  const std::vector<ValidationIssue> issues = code.validate();
  Json validation = Json::array();
  bool valid = true;
  for (const ValidationIssue& issue : issues) {
    const bool warning_only = issue.kind == ValidationIssue::Kind::unequal_row_sums;
    valid = valid && warning_only;
    validation.push_back({{"codeword", issue.codeword}, {"message", issue.message}, {"fatal", !warning_only}});
  }
  d["validation"] = validation;
  report.lines.push_back(std::string("  validation        ") + (valid ? "pass" : "fail"));
  for (const ValidationIssue& issue : issues) report.lines.push_back("      " + issue.message);

  Json checks = Json::array();
  if (options.numeric) {
    const CriteriaReport numeric = check_numeric(code, t, options.gamma.to_double(), options.tolerance);
    d["gamma"] = options.gamma.str();
    d["tolerance"] = options.tolerance;
    add_check(report, checks, "numeric", numeric);
    report.passed = valid && numeric.passed();
  } else {
    const VerificationSummary s = verify_code(code, t);
    add_check(report, checks, "orthogonality", s.orthogonality);
    add_check(report, checks, "non-deformation", s.nondeformation);
    add_check(report, checks, "moments", s.moments);
    add_check(report, checks, "distance", s.distance);
    Json norms = Json::object();
    for (const auto& [k, g] : s.nondeformation.syndrome_norms) norms[k.str()] = g.str();
    d["syndrome_norms"] = norms;
    if (!s.nondeformation.syndrome_norms.empty())
      report.lines.push_back("  syndromes         " + std::to_string(s.nondeformation.syndrome_norms.size()));
    report.passed = s.passed();
  }
  d["checks"] = checks;
  d["passed"] = report.passed;
  if (options.timings) d["seconds"] = clock.seconds();
  report.lines.push_back(std::string("result: ") + (report.passed ? "PASS" : "FAIL"));
  if (options.timings) report.lines.push_back("time: " + fixed(clock.seconds(), 3) + " s");
  return report;
}

// ----------------------------------------------------------------- metrics

Report cmd_fidelity(const Code& code, std::optional<unsigned> t_opt, std::optional<Rational> gamma) {
  const unsigned t = t_opt.value_or(code.design_t());
  const FidelityResult f = fidelity_poly(code.total_photons(), t);
  Report report;
  report.command = "fidelity";
  const std::string expanded = format_expanded(f.coefficients);
  report.lines.push_back(header("fidelity", code) + " N=" + std::to_string(f.N) + " t=" + std::to_string(t));
  report.lines.push_back("  F(g) = " + expanded);
  report.lines.push_back("  leading deficit C(" + std::to_string(f.N) + "," + std::to_string(t + 1) +
                         ") = " + f.leading_deficit.get_str());
  Json& d = report.data;
  d["command"] = "fidelity";
  d["code"] = code.name();
  d["descriptor"] = code.descriptor();
  d["N"] = f.N;
  d["t"] = t;
  d["coefficients"] = rational_array(f.coefficients);
  d["expanded"] = expanded;
  d["leading_deficit"] = f.leading_deficit.get_str();

  // Cross-check against the channel: sum of correctable syndrome norms.
  const CriteriaReport nondef = check_nondeformation(code, t);
  if (nondef.passed()) {
    GammaPolynomial total;
    for (const auto& [k, g] : nondef.syndrome_norms) total += g;
    const bool agrees = total == f.polynomial;
    d["channel_agrees"] = agrees;
    report.lines.push_back(std::string("  channel sum of correctable branches ") + (agrees ? "agrees" : "DIFFERS"));
    report.passed = agrees;
  } else {
    d["channel_agrees"] = nullptr;
    report.lines.push_back("  channel cross-check skipped: non-deformation fails at t = " + std::to_string(t));
  }
  if (gamma) {
    const Rational value = poly_eval(f.coefficients, *gamma);
    d["gamma"] = gamma->str();
    d["value"] = value.str();
    d["value_decimal"] = value.to_double();
    report.lines.push_back("  F(" + gamma->str() + ") = " + value.str() + " ~ " + general(value.to_double(), 12));
  }
  d["passed"] = report.passed;
  return report;
}

Report cmd_rate(const Code& code) {
  const RateResult r = rate(code);
  Report report;
  report.command = "rate";
  report.lines.push_back(header("rate", code));
  report.lines.push_back("  k = log2(" + std::to_string(r.codewords) + ") = " + fixed(r.k, 4));
  report.lines.push_back("  m log2(N+1) = " + std::to_string(r.modes) + " log2(" +
                         std::to_string(r.total_photons + 1) + ") = " + fixed(r.denominator, 4));
  report.lines.push_back("  rate = " + fixed(r.rate, 4));
  Json& d = report.data;
  d["command"] = "rate";
  d["code"] = code.name();
  d["descriptor"] = code.descriptor();
  d["codewords"] = r.codewords;
  d["k"] = r.k;
  d["denominator"] = r.denominator;
  d["rate"] = r.rate;
  d["rate_rounded"] = fixed(r.rate, 4);
  d["passed"] = true;
  return report;
}

Report cmd_bound(unsigned l_o, unsigned t, unsigned m) {
  const unsigned long n = existence_min_N(l_o, t, m);
  BigInt small = 0;
  for (unsigned s = 0; s <= t; ++s) small += partition_count(s, m);
  const BigInt needed = 1 + BigInt(l_o) + BigInt(l_o) * small;
  Report report;
  report.command = "bound";
  report.lines.push_back("bound l_o=" + std::to_string(l_o) + " t=" + std::to_string(t) + " m=" + std::to_string(m));
  report.lines.push_back("  need P(N/" + std::to_string(t + 1) + ", " + std::to_string(m) + ") >= " + needed.get_str());
  report.lines.push_back("  N >= " + std::to_string(n));
  Json& d = report.data;
  d["command"] = "bound";
  d["l_o"] = l_o;
  d["t"] = t;
  d["m"] = m;
  d["required_count"] = needed.get_str();
  d["min_N"] = n;
  d["passed"] = true;
  return report;
}

Report cmd_optimal_t(const Rational& gamma, double f, double alpha, unsigned l_o) {
  const OptimalT r = optimal_t(gamma, f, alpha, l_o);
  Report report;
  report.command = "optimal-t";
  report.lines.push_back("optimal-t gamma=" + gamma.str() + " f=" + general(f) + " alpha=" + general(alpha) +
                         " l_o=" + std::to_string(l_o));
  report.lines.push_back("  t_opt = " + fixed(r.t_opt, 4));
  Json& d = report.data;
  d["command"] = "optimal-t";
  d["gamma"] = gamma.str();
  d["f"] = f;
  d["alpha"] = alpha;
  d["l_o"] = l_o;
  d["t_opt"] = r.t_opt;
  Json neighbors = Json::array();
  for (const OptimalT::Neighbor& nb : {r.lower, r.upper}) {
    Json entry{{"t", nb.t}, {"N", nb.N}};
    if (nb.valid) {
      entry["fidelity"] = nb.fidelity;
      report.lines.push_back("  t=" + std::to_string(nb.t) + " N=" + std::to_string(nb.N) +
                             " F=" + general(nb.fidelity, 12));
    } else {
      entry["fidelity"] = nullptr;
      report.lines.push_back("  t=" + std::to_string(nb.t) + " N=" + std::to_string(nb.N) + " (t >= N)");
    }
    neighbors.push_back(entry);
  }
  d["neighbors"] = neighbors;
  d["passed"] = true;
  return report;
}

// ---------------------------------------------------------------- simulate

Report cmd_simulate(const Code& code, const SimulateOptions& options) {
  const unsigned t = options.t.value_or(code.design_t());
  std::vector<double> coefficients = options.coefficients;
  if (coefficients.empty()) {
    coefficients.assign(code.size(), 0.0);
    coefficients[0] = 1.0;
  }
  Stopwatch clock;
  const SimulationResult r =
      run_monte_carlo(code, t, coefficients, options.gamma, options.shots, options.seed, options.threads);
  const double exact = r.exact_fidelity.to_double();
  Report report;
  report.command = "simulate";
  std::string input;
  for (std::size_t i = 0; i < coefficients.size(); ++i) input += (i ? ", " : "") + general(coefficients[i], 12);
  report.lines.push_back(header("simulate", code) + " t=" + std::to_string(t) + " gamma=" + options.gamma.str() +
                         " shots=" + std::to_string(r.shots) + " seed=" + std::to_string(r.seed));
  report.lines.push_back("  input (" + input + ")");
  report.lines.push_back("  successes " + std::to_string(r.successes) + " / " + std::to_string(r.shots));
  report.lines.push_back("  estimate " + general(r.estimated_fidelity, 12));
  report.lines.push_back("  exact " + r.exact_fidelity.str() + " ~ " + general(exact, 12));
  report.lines.push_back("  |estimate - exact| " + general(std::abs(r.estimated_fidelity - exact), 6) + ", sigma " +
                         general(r.sigma, 6) + ", z " + fixed(r.z_score, 4));
  Json& d = report.data;
  d["command"] = "simulate";
  d["code"] = code.name();
  d["descriptor"] = code.descriptor();
  d["t"] = t;
  d["gamma"] = options.gamma.str();
  d["input"] = coefficients;
  d["shots"] = r.shots;
  d["seed"] = r.seed;
  d["successes"] = r.successes;
  d["estimated_fidelity"] = r.estimated_fidelity;
  d["exact_fidelity"] = r.exact_fidelity.str();
  d["exact_fidelity_decimal"] = exact;
  d["sigma"] = r.sigma;
  d["z_score"] = r.z_score;
  d["passed"] = true;
  if (options.timings) {
    d["seconds"] = clock.seconds();
    report.lines.push_back("time: " + fixed(clock.seconds(), 3) + " s");
  }
  return report;
}

// --------------------------------------------------------------- construct

namespace {

void finish_construct(Report& report, const Code& code, const std::vector<std::string>& warnings,
                      const std::string& echo) {
  report.payload = serialize_code(code);
  const VerificationSummary s = verify_code(code, code.design_t());
  report.passed = s.passed();
  report.lines.push_back(echo + ": " + std::to_string(code.size()) + " codewords " + code.descriptor() +
                         " design t=" + std::to_string(code.design_t()) +
                         ", verify " + (report.passed ? "pass" : "FAIL"));
  for (const std::string& w : warnings) report.lines.push_back("  warning: " + w);
  Json& d = report.data;
  d["command"] = "construct";
  d["code"] = code.name();
  d["descriptor"] = code.descriptor();
  d["design_t"] = code.design_t();
  d["codewords"] = code.size();
  d["warnings"] = warnings;
  d["verified"] = report.passed;
  d["code_text"] = report.payload;
  d["passed"] = report.passed;
}

}  // namespace

Report cmd_construct_t1(unsigned n, unsigned m, unsigned d) {
  const OrbitCodeFamily family = build_t1_family(n, m, d);
  Report report;
  report.command = "construct";
  report.data["kind"] = "t1";
  finish_construct(report, family.code, {},
                   "construct t1 n=" + std::to_string(n) + " m=" + std::to_string(m) + " d=" + std::to_string(d));
  return report;
}

Report cmd_construct_t2(const OccupationVector& x, unsigned d) {
  const ConstructedCode built = build_t2_pair(x, d);
  Report report;
  report.command = "construct";
  report.data["kind"] = "t2";
  finish_construct(report, built.code, built.warnings, "construct t2 x=" + x.str() + " d=" + std::to_string(d));
  return report;
}

Report cmd_construct_weights(std::string_view supports_text, unsigned t, std::string name) {
  const auto supports = parse_supports(supports_text);
  const WeightSolveResult solved = solve_unbalanced_weights(supports, t);
  Report report;
  report.command = "construct";
  Json& d = report.data;
  d["kind"] = "weights";
  d["status"] = to_string(solved.status);
  d["equations"] = solved.equations;
  d["unknowns"] = solved.unknowns;
  d["rank"] = solved.rank;
  d["residual_constraints"] = solved.residual_constraints;
  const std::string echo = "construct weights t=" + std::to_string(t);
  if (!solved.ok()) {
    report.passed = false;
    d["failing_constraints"] = solved.failing_constraints;
    d["warnings"] = solved.warnings;
    d["passed"] = false;
    report.lines.push_back(echo + ": infeasible (" + std::to_string(solved.equations) + " equations, " +
                           std::to_string(solved.unknowns) + " unknowns, rank " + std::to_string(solved.rank) + ")");
    report.lines.push_back("  no strictly positive weights satisfy:");
    for (const std::string& c : solved.failing_constraints) report.lines.push_back("    " + c);
    for (const std::string& w : solved.warnings) report.lines.push_back("  warning: " + w);
    return report;
  }
  Json weights = Json::array();
  for (const auto& w : solved.weights) weights.push_back(rational_array(w));
  d["weights"] = weights;
  finish_construct(report, solved.to_code(supports, std::move(name), t), solved.warnings, echo);
  report.lines.insert(report.lines.begin() + 1, "  status " + std::string(to_string(solved.status)) + ", " +
                                                    std::to_string(solved.equations) + " equations, " +
                                                    std::to_string(solved.unknowns) + " unknowns, rank " +
                                                    std::to_string(solved.rank));
  return report;
}

// ----------------------------------------------------------------- catalog

namespace {

std::string flag_summary(const CatalogEntry& e) {
  return e.flags.empty() ? "none" : std::to_string(e.flags.size()) + " flag(s)";
}

}  // namespace

Report cmd_catalog_list() {
  Report report;
  report.command = "catalog list";
  Json entries = Json::array();
  for (const CatalogEntry& e : catalog_entries()) {
    std::string line = "  " + std::to_string(e.id);
    line.resize(6, ' ');
    line += e.printed_descriptor;
    line.resize(22, ' ');
    line += "t=" + std::to_string(e.design_t) + "  flags: " + flag_summary(e);
    if (e.corrected) line += "  (corrected variant available)";
    report.lines.push_back(line);
    entries.push_back({{"id", e.id},
                       {"name", e.printed.name()},
                       {"descriptor", e.printed_descriptor},
                       {"design_t", e.design_t},
                       {"flags", e.flags},
                       {"corrected", e.corrected.has_value()}});
  }
  report.data["command"] = "catalog list";
  report.data["entries"] = entries;
  report.data["passed"] = true;
  return report;
}

Report cmd_catalog_show(int id, CatalogVariant variant) {
  const CatalogEntry& e = catalog_entry(id);
  const Code code = catalog(id, variant);
  const bool is_printed = variant == CatalogVariant::as_printed || !e.corrected;
  Report report;
  report.command = "catalog show";
  report.payload = serialize_code(code);
  report.lines.push_back(e.title + " " + e.printed_descriptor + " design t=" + std::to_string(e.design_t) +
                         (is_printed ? " (as printed)" : " (corrected)"));
  if (!e.note.empty()) report.lines.push_back("  note: " + e.note);
  for (const std::string& f : e.flags) report.lines.push_back("  flag: " + f);
  std::istringstream body(report.payload);
  for (std::string line; std::getline(body, line);) report.lines.push_back(line);
  Json& d = report.data;
  d["command"] = "catalog show";
  d["id"] = id;
  d["variant"] = is_printed ? "as_printed" : "corrected";
  d["descriptor"] = code.descriptor();
  d["design_t"] = e.design_t;
  d["flags"] = e.flags;
  d["note"] = e.note;
  d["code_text"] = report.payload;
  d["passed"] = true;
  return report;
}

Report cmd_catalog_verify_all() {
  Report report;
  report.command = "catalog verify-all";
  Json entries = Json::array();
  std::size_t passing = 0, flagged = 0;
  for (const CatalogEntry& e : catalog_entries()) {
    const bool printed_ok = verify_code(e.printed, e.design_t).passed();
    std::optional<bool> corrected_ok;
    if (e.corrected) corrected_ok = verify_code(*e.corrected, e.design_t).passed();
    std::string status;
    if (printed_ok && !e.flagged()) {
      status = "pass";
      ++passing;
    } else if (e.flagged()) {
      status = "flagged";
      ++flagged;
    } else {
      status = "fail";
      report.passed = false;
    }
    std::string line = "  " + std::to_string(e.id);
    line.resize(6, ' ');
    line += e.printed_descriptor;
    line.resize(22, ' ');
    line += "t=" + std::to_string(e.design_t) + "  " + status;
    if (corrected_ok) line += std::string("  corrected: ") + (*corrected_ok ? "pass" : "FAIL");
    if (e.repair) line += std::string("  repair: ") + to_string(e.repair->status);
    report.lines.push_back(line);
    for (const std::string& f : e.flags) report.lines.push_back("      " + f);
    if (e.repair && !e.repair->ok())
      for (const std::string& c : e.repair->failing_constraints) report.lines.push_back("      unsatisfiable: " + c);
    if (corrected_ok && !*corrected_ok) report.passed = false;

    Json entry{{"id", e.id}, {"descriptor", e.printed_descriptor}, {"design_t", e.design_t},
               {"status", status}, {"printed_passes", printed_ok}, {"flags", e.flags}};
    entry["corrected_passes"] = corrected_ok ? Json(*corrected_ok) : Json(nullptr);
    if (e.repair) {
      Json repair{{"status", to_string(e.repair->status)}};
      Json weights = Json::array();
      for (const auto& w : e.repair->weights) weights.push_back(rational_array(w));
      repair["weights"] = weights;
      repair["failing_constraints"] = e.repair->failing_constraints;
      entry["repair"] = repair;
    }
    entries.push_back(entry);
  }
  report.lines.push_back(std::to_string(passing) + " pass, " + std::to_string(flagged) + " flagged");
  report.data["command"] = "catalog verify-all";
  report.data["entries"] = entries;
  report.data["pass_count"] = passing;
  report.data["flagged_count"] = flagged;
  report.data["passed"] = report.passed;
  return report;
}

}  // namespace ampcode
