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

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "ampcode/catalog.hpp"
#include "ampcode/code.hpp"
#include "ampcode/fock.hpp"
#include "ampcode/rational.hpp"

namespace ampcode {

// Result of one command: human-readable lines, a structured record with
// stable field names, and for construction commands the emitted code file.
struct Report {
  std::string command;
  bool passed = true;
  std::vector<std::string> lines;
  nlohmann::ordered_json data = nlohmann::ordered_json::object();
  std::string payload;

  std::string text() const;
  std::string json() const;
};

struct VerifyOptions {
  std::optional<unsigned> t;  // default: the code's design t
  bool numeric = false;
  Rational gamma = Rational(1, 10);  // numeric mode only
  double tolerance = 1e-12;
  bool timings = false;
};

struct SimulateOptions {
  std::optional<unsigned> t;
  Rational gamma;
  std::uint64_t shots = 100000;
  std::uint64_t seed = 0;
  // Input coefficients over the codewords; default |c_0>.
  std::vector<double> coefficients;
  unsigned threads = 1;
  bool timings = false;
};

// Supports file: "word i" headers followed by occupation rows, either bare
// ("0 9") or in code-file form ("+ 1/4 : 0 9", weight ignored).
std::vector<std::vector<OccupationVector>> parse_supports(std::string_view text);

Report cmd_verify(const Code& code, const VerifyOptions& options,
                  const std::vector<std::string>& warnings = {});
Report cmd_fidelity(const Code& code, std::optional<unsigned> t, std::optional<Rational> gamma);
Report cmd_rate(const Code& code);
Report cmd_bound(unsigned l_o, unsigned t, unsigned m);
Report cmd_simulate(const Code& code, const SimulateOptions& options);
Report cmd_optimal_t(const Rational& gamma, double f, double alpha, unsigned l_o);
Report cmd_construct_t1(unsigned n, unsigned m, unsigned d);
Report cmd_construct_t2(const OccupationVector& x, unsigned d);
Report cmd_construct_weights(std::string_view supports_text, unsigned t, std::string name = "solved");
Report cmd_catalog_list();
Report cmd_catalog_show(int id, CatalogVariant variant);
Report cmd_catalog_verify_all();

}  // namespace ampcode
