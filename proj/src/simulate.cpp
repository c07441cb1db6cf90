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

#include "ampcode/simulate.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <thread>

#include "ampcode/criteria.hpp"
#include "ampcode/error.hpp"

namespace ampcode {

const Syndrome* RecoveryMap::find(const ErrorPattern& pattern) const {
  for (const Syndrome& s : syndromes_)
    if (s.pattern == pattern) return &s;
  return nullptr;
}

std::vector<GammaAmplitude> RecoveryMap::recover(const ErrorPattern& pattern, const PureBranch& branch) const {
  const Syndrome* syndrome = find(pattern);
  if (!syndrome) throw DomainError("pattern " + pattern.str() + " is not correctable at t = " + std::to_string(t_));
  std::vector<GammaAmplitude> out;
  for (const PureBranch& basis : syndrome->normalized) out.push_back(inner_product(basis, branch));
  return out;
}

RecoveryMap build_recovery(const Code& code, unsigned t) {
  const CriteriaReport ortho = check_orthogonality(code, t);
  if (!ortho.passed()) throw CriteriaError("no recovery at t = " + std::to_string(t) + ": " + ortho.violations.front().str());
  const CriteriaReport nondef = check_nondeformation(code, t);
  if (!nondef.passed()) throw CriteriaError("no recovery at t = " + std::to_string(t) + ": " + nondef.violations.front().str());

  std::vector<Syndrome> syndromes;
  for (const auto& [pattern, norm] : nondef.syndrome_norms) {
    Syndrome s{pattern, norm, {}, {}};
    if (norm.is_zero()) continue;
    const auto mono = norm.single_monomial();
    if (!mono || !mono->second.is_rational())
      throw DomainError("g" + pattern.str() + " = " + norm.str() + " is not a single monomial");
    const GammaPowers powers = mono->first;
    const RadicalSum inv_root = RadicalSum::sqrt(Rational(1) / mono->second.rational_value());
    for (const Codeword& c : code.codewords()) {
      PureBranch damaged = kraus_apply(c, pattern);
      PureBranch unit;
      for (const auto& [state, amplitude] : damaged.terms()) {
        const auto& monos = amplitude.monomials();
        if (monos.size() != 1 || monos.begin()->first != powers)
          throw DomainError("damaged amplitude " + amplitude.str() + " does not factor through g" + pattern.str());
        unit.add(state, GammaAmplitude(monos.begin()->second * inv_root));
      }
      s.damaged.push_back(std::move(damaged));
      s.normalized.push_back(std::move(unit));
    }
    syndromes.push_back(std::move(s));
  }
  std::stable_sort(syndromes.begin(), syndromes.end(), [](const Syndrome& a, const Syndrome& b) {
    return a.pattern.weight() != b.pattern.weight() ? a.pattern.weight() < b.pattern.weight() : a.pattern < b.pattern;
  });
  return RecoveryMap(code, t, std::move(syndromes));
}

Rational exact_success_probability(const RecoveryMap& recovery, const Rational& gamma) {
  Rational total;
  for (const Syndrome& s : recovery.syndromes()) total += poly_eval(s.norm, gamma);
  return total;
}

Rational exact_success_probability(const Code& code, unsigned t, const Rational& gamma) {
  return exact_success_probability(build_recovery(code, t), gamma);
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Every pattern with k_j <= max occupation of mode j over the code.
std::vector<ErrorPattern> pattern_box(const Code& code) {
  std::vector<unsigned> bound(code.modes(), 0);
  for (const Codeword& c : code.codewords())
    for (const CodewordRow& row : c.rows())
      for (std::size_t j = 0; j < bound.size(); ++j) bound[j] = std::max(bound[j], row.qcs[j]);
  std::vector<ErrorPattern> out;
  std::vector<unsigned> k(bound.size(), 0);
  for (;;) {
    out.emplace_back(k);
    std::size_t j = k.size();
    while (j > 0 && k[j - 1] == bound[j - 1]) k[--j] = 0;
    if (j == 0) break;
    ++k[j - 1];
  }
  return out;
}

}  // namespace

double shot_uniform(std::uint64_t seed, std::uint64_t index) {
  const std::uint64_t bits = splitmix64(splitmix64(seed) ^ splitmix64(index + 0x632be59bd9b4e019ULL));
  return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

SimulationResult run_monte_carlo(const Code& code, unsigned t, std::span<const double> coefficients,
                                 const Rational& gamma, std::uint64_t shots, std::uint64_t seed,
                                 unsigned threads) {
  if (coefficients.size() != code.size())
    throw DomainError("expected " + std::to_string(code.size()) + " input coefficients");
  double norm = 0.0;
  for (double c : coefficients) norm += c * c;
  if (std::abs(norm - 1.0) > 1e-9) throw DomainError("input coefficients are not normalized");
  if (gamma.sign() < 0 || gamma > Rational(1)) throw DomainError("gamma outside [0, 1]");

  const RecoveryMap recovery = build_recovery(code, t);
  const double g = gamma.to_double();

  std::vector<double> cumulative;
  std::vector<bool> correctable;
  double running = 0.0;
  for (const ErrorPattern& k : pattern_box(code)) {
    std::vector<PureBranch> branches;
    for (const Codeword& c : code.codewords()) branches.push_back(kraus_apply(c, k));
    double p = 0.0;
    for (std::size_t a = 0; a < branches.size(); ++a)
      for (std::size_t b = 0; b < branches.size(); ++b)
        if (coefficients[a] != 0.0 && coefficients[b] != 0.0)
          p += coefficients[a] * coefficients[b] * inner_product(branches[a], branches[b]).evaluate(g);
    running += std::max(p, 0.0);
    cumulative.push_back(running);
    correctable.push_back(k.weight() <= t);
  }
  const double total = running;

  auto count = [&](std::uint64_t begin, std::uint64_t end) {
    std::uint64_t ok = 0;
    for (std::uint64_t i = begin; i < end; ++i) {
      const double u = shot_uniform(seed, i) * total;
      const auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
      const std::size_t idx = std::min<std::size_t>(static_cast<std::size_t>(it - cumulative.begin()), cumulative.size() - 1);
      ok += correctable[idx];
    }
    return ok;
  };

  threads = std::max(1u, threads);
  std::vector<std::uint64_t> partial(threads, 0);
  if (threads == 1) {
    partial[0] = count(0, shots);
  } else {
    std::vector<std::thread> workers;
    for (unsigned w = 0; w < threads; ++w) {
      const std::uint64_t begin = shots * w / threads, end = shots * (w + 1) / threads;
      workers.emplace_back([&, w, begin, end] { partial[w] = count(begin, end); });
    }
    for (std::thread& worker : workers) worker.join();
  }

  SimulationResult out;
  out.shots = shots;
  out.seed = seed;
  for (std::uint64_t p : partial) out.successes += p;
  out.estimated_fidelity = shots ? static_cast<double>(out.successes) / static_cast<double>(shots) : 0.0;
  out.exact_fidelity = exact_success_probability(recovery, gamma);
  const double f = out.exact_fidelity.to_double();
  out.sigma = shots ? std::sqrt(f * (1.0 - f) / static_cast<double>(shots)) : 0.0;
  out.z_score = out.sigma > 0.0 ? (out.estimated_fidelity - f) / out.sigma : 0.0;
  return out;
}

}  // namespace ampcode
