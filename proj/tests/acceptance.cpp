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

// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// nonzero when any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "ampcode/catalog.hpp"
#include "ampcode/channel.hpp"
#include "ampcode/commands.hpp"
#include "ampcode/construct.hpp"
#include "ampcode/criteria.hpp"
#include "ampcode/error.hpp"
#include "ampcode/fock.hpp"
#include "ampcode/metrics.hpp"
#include "ampcode/simulate.hpp"

namespace ampcode {
namespace {

// Tolerances and limits.
constexpr double kCheckSeconds = 10.0;        // per catalog check
constexpr double kRateDecimals = 0.005;       // two-decimal agreement
constexpr double kProofSeconds = 300.0;       // whole t = 2 sweep
constexpr double kSimulationSeconds = 60.0;   // per Monte Carlo run
constexpr double kSigmaBand = 3.0;
constexpr std::uint64_t kShots = 1000000;
constexpr std::uint64_t kSeed = 42;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

Rational q(long n, long d = 1) { return Rational(BigInt(n), BigInt(d)); }

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool condition, const std::string& what) {
    if (!condition) {
      pass = false;
      detail << " [" << what << "]";
    }
  }
};

bool same_codeword_set(const Code& a, const Code& b) {
  if (a.size() != b.size()) return false;
  std::vector<bool> used(b.size(), false);
  for (const Codeword& w : a.codewords()) {
    bool found = false;
    for (std::size_t j = 0; j < b.size() && !found; ++j) {
      if (!used[j] && w == b.codewords()[j]) found = used[j] = true;
    }
    if (!found) return false;
  }
  return true;
}

void criterion_catalog(Outcome& out) {
  double slowest = 0.0;
  for (int id : {1, 3, 4, 5, 6, 7, 8, 9}) {
    const CatalogEntry& e = catalog_entry(id);
    const auto start = Clock::now();
    const CriteriaReport ortho = check_orthogonality(e.printed, e.design_t);
    const CriteriaReport nondef = check_nondeformation(e.printed, e.design_t);
    const double elapsed = seconds_since(start);
    slowest = std::max(slowest, elapsed);
    out.require(ortho.passed() && nondef.passed(), "example " + std::to_string(id) + " fails");
    out.require(elapsed < kCheckSeconds, "example " + std::to_string(id) + " too slow");
    out.require(!e.flagged(), "example " + std::to_string(id) + " flagged");
  }
  const std::vector<unsigned> expected_t = {1, 1, 1, 2, 1, 1, 2, 2, 3};
  for (int id = 1; id <= 9; ++id)
    out.require(catalog_entry(id).design_t == expected_t[id - 1], "design t of example " + std::to_string(id));

  const CatalogEntry& two = catalog_entry(2);
  out.require(!check_nondeformation(two.printed, 1).passed(), "example 2 as printed passes");
  out.require(two.corrected.has_value() && verify_code(*two.corrected, 1).passed(), "corrected example 2 fails");

  const CatalogEntry& ten = catalog_entry(10);
  bool moment_flag = false;
  for (const std::string& f : ten.flags) moment_flag = moment_flag || f.find("moment-mismatch") != std::string::npos;
  out.require(moment_flag, "example 10 lacks moment flag");
  out.require(ten.repair.has_value(), "example 10 repair not recorded");

  const CatalogEntry& eleven = catalog_entry(11);
  bool weight_flag = false;
  for (const std::string& f : eleven.flags) weight_flag = weight_flag || f.find("89/90") != std::string::npos;
  out.require(weight_flag, "example 11 lacks weight-sum flag");
  out.require(eleven.repair.has_value(), "example 11 repair not recorded");

  out.detail << " slowest check " << slowest << " s;";
  if (ten.repair) out.detail << " example 10 repair: " << to_string(ten.repair->status) << ";";
  if (eleven.repair) out.detail << " example 11 repair: " << to_string(eleven.repair->status) << ";";
}

void criterion_deficits(Outcome& out) {
  const std::vector<long> printed = {6, 66, 15, 84, 15, 21, 84, 84, 1820, 4845, 2118760};
  for (int id = 1; id <= 11; ++id) {
    const CatalogEntry& e = catalog_entry(id);
    const BigInt deficit = fidelity_poly(e.printed.total_photons(), e.design_t).leading_deficit;
    out.require(deficit == BigInt(printed[id - 1]), "example " + std::to_string(id) + " deficit " + deficit.get_str());
    out.require(e.printed_deficit == BigInt(printed[id - 1]), "catalog constant of example " + std::to_string(id));
  }
}

void criterion_example1_fidelity(Outcome& out) {
  const FidelityResult f = fidelity_poly(4, 1);
  out.require(f.coefficients == std::vector<Rational>{q(1), q(0), q(-6), q(8), q(-3)}, "coefficients");
  const CriteriaReport r = check_nondeformation(catalog(1), 1);
  GammaPolynomial branches;
  for (const auto& [k, g] : r.syndrome_norms) branches += g;
  out.require(r.passed() && poly_expand(branches) == f.coefficients, "channel sum differs");
  out.detail << " F = " << format_expanded(f.coefficients) << ";";
}

void criterion_rates(Outcome& out) {
  const double one = rate(catalog(1)).rate;
  const double two = rate(catalog(2)).rate;
  out.require(std::abs(one - 0.2153) < kRateDecimals, "example 1 rate");
  out.require(std::abs(two - 0.2994) < kRateDecimals, "example 2 rate");
  char buffer[96];
  std::snprintf(buffer, sizeof buffer, " r1 = %.6f, r2 = %.6f;", one, two);
  out.detail << buffer;
}

void criterion_construction(Outcome& out) {
  out.require(same_codeword_set(build_t1_family(2, 2, 2).code, catalog(1)), "t1(2,2,2) vs example 1");
  out.require(same_codeword_set(build_t1_family(3, 3, 2).code, catalog(3)), "t1(3,3,2) vs example 3");
  out.require(build_t1_family(6, 3, 2).code.size() == 10, "t1(6,3,2) count");
  out.require(same_codeword_set(build_t2_pair(OccupationVector{1, 0, 2}, 3).code, catalog(4)), "t2 vs example 4");
}

void criterion_t2_proof(Outcome& out) {
  const auto start = Clock::now();
  std::size_t tested = 0, skipped = 0, counterexamples = 0;
  for (unsigned m : {3u, 4u}) {
    for (unsigned n = 0; n <= 6; ++n) {
      for (const OccupationVector& x : enumerate_qcs(n, m).members) {
        if (reversed(x) == x) continue;
        ConstructedCode built;
        try {
          built = build_t2_pair(x, 3);
        } catch (const ConstructionError&) {
          ++skipped;  // reverse lies in the cyclic orbit
          continue;
        }
        ++tested;
        if (!check_nondeformation(built.code, 2).passed()) {
          ++counterexamples;
          out.detail << " counterexample " << x.str() << ";";
        }
      }
    }
  }
  const double elapsed = seconds_since(start);
  out.require(counterexamples == 0, "counterexamples found");
  out.require(tested > 0, "nothing tested");
  out.require(elapsed < kProofSeconds, "too slow");
  out.detail << " " << tested << " pairs checked, " << skipped << " with reverse in orbit, " << elapsed << " s;";
}

void criterion_completeness(Outcome& out) {
  std::mt19937_64 rng(2026);
  std::uniform_int_distribution<unsigned> modes(1, 4), photons(0, 20), rows(1, 4), weight(1, 9), sign(0, 1);
  unsigned max_n = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const unsigned m = modes(rng);
    std::vector<OccupationVector> states;
    const unsigned count = rows(rng);
    for (unsigned attempt = 0; attempt < 50 && states.size() < count; ++attempt) {
      std::vector<unsigned> x(m, 0);
      const unsigned n = photons(rng);
      for (unsigned p = 0; p < n; ++p) ++x[std::uniform_int_distribution<unsigned>(0, m - 1)(rng)];
      OccupationVector v(x);
      if (std::find(states.begin(), states.end(), v) == states.end()) states.push_back(v);
    }
    long total = 0;
    std::vector<long> w;
    for (std::size_t i = 0; i < states.size(); ++i) total += w.emplace_back(weight(rng));
    std::vector<CodewordRow> body;
    for (std::size_t i = 0; i < states.size(); ++i) {
      body.push_back({q(w[i], total), sign(rng) ? -1 : +1, states[i]});
      max_n = std::max(max_n, states[i].row_sum());
    }
    const PureBranch psi = PureBranch::from_codeword(Codeword(body));
    GammaPolynomial sum;
    for (unsigned s = 0; s <= 20; ++s)
      for (const ErrorPattern& k : enumerate_error_patterns(m, s)) sum += kraus_apply(psi, k).norm_squared();
    const std::vector<Rational> expanded = poly_expand(sum);
    const bool one = expanded.size() == 1 && expanded[0] == q(1);
    out.require(one, "trial " + std::to_string(trial));
  }
  out.detail << " 100 states, largest N " << max_n << ";";
}

void criterion_pattern_identity(Outcome& out) {
  std::size_t rows_checked = 0;
  for (const CatalogEntry& e : catalog_entries()) {
    for (const Code* code : {&e.printed, e.corrected ? &*e.corrected : nullptr}) {
      if (!code) continue;
      for (const Codeword& w : code->codewords()) {
        for (const CodewordRow& row : w.rows()) {
          ++rows_checked;
          const unsigned n = row.qcs.row_sum();
          for (unsigned s = 0; s <= 5; ++s) {
            BigInt sum = 0;
            for (const ErrorPattern& k : enumerate_error_patterns(static_cast<unsigned>(row.qcs.modes()), s)) {
              BigInt product = 1;
              for (std::size_t j = 0; j < row.qcs.modes(); ++j) product *= binomial(row.qcs[j], k[j]);
              sum += product;
            }
            if (sum != binomial(n, s)) out.require(false, "example " + std::to_string(e.id) + " " + row.qcs.str());
          }
        }
      }
    }
  }
  out.detail << " " << rows_checked << " rows;";
}

void criterion_monte_carlo(Outcome& out) {
  for (const auto& [text, gamma] : std::vector<std::pair<std::string, Rational>>{
           {"0.01", q(1, 100)}, {"0.05", q(1, 20)}, {"0.1", q(1, 10)}}) {
    SimulateOptions options;
    options.gamma = gamma;
    options.shots = kShots;
    options.seed = kSeed;
    const auto start = Clock::now();
    const SimulationResult r = run_monte_carlo(catalog(1), 1, std::vector<double>{1.0, 0.0}, gamma, kShots, kSeed);
    const double elapsed = seconds_since(start);
    const double exact = r.exact_fidelity.to_double();
    const double sigma = std::sqrt(exact * (1.0 - exact) / static_cast<double>(kShots));
    out.require(std::abs(r.estimated_fidelity - exact) <= kSigmaBand * sigma, "gamma " + text + " outside band");
    out.require(elapsed < kSimulationSeconds, "gamma " + text + " too slow");
    const std::string first = cmd_simulate(catalog(1), options).json();
    const std::string second = cmd_simulate(catalog(1), options).json();
    out.require(first == second, "gamma " + text + " output differs on repeat");
    char buffer[128];
    std::snprintf(buffer, sizeof buffer, " g=%s z=%+.3f %.2fs;", text.c_str(), (r.estimated_fidelity - exact) / sigma,
                  elapsed);
    out.detail << buffer;
  }
}

void criterion_existence(Outcome& out) {
  const unsigned long one = existence_min_N(1, 1, 2);
  const unsigned long two = existence_min_N(1, 2, 2);
  out.require(one == 8, "t = 1 gives " + std::to_string(one));
  out.require(two == 21, "t = 2 gives " + std::to_string(two));
  out.require(catalog(1).total_photons() == 4, "example 1 N");
  out.detail << " bound N >= " << one << " while example 1 uses N = 4;";
}

}  // namespace
}  // namespace ampcode

int main() {
  using namespace ampcode;
  const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria = {
      {"catalog verification", criterion_catalog},
      {"fidelity leading deficits", criterion_deficits},
      {"example 1 fidelity polynomial", criterion_example1_fidelity},
      {"rates", criterion_rates},
      {"construction reproduction", criterion_construction},
      {"t = 2 pair construction sweep", criterion_t2_proof},
      {"kraus completeness", criterion_completeness},
      {"pattern binomial identity", criterion_pattern_identity},
      {"monte carlo", criterion_monte_carlo},
      {"existence bound", criterion_existence},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome out;
    try {
      criteria[i].second(out);
    } catch (const std::exception& e) {
      out.pass = false;
      out.detail << " [exception: " << e.what() << "]";
    }
    if (!out.pass) ++failures;
    std::printf("%s %2zu %s:%s\n", out.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                out.detail.str().c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
