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

#include <optional>
#include <string>
#include <vector>

#include "ampcode/code.hpp"
#include "ampcode/construct.hpp"
#include "ampcode/rational.hpp"

namespace ampcode {

enum class CatalogVariant { preferred, as_printed, corrected };

struct CatalogEntry {
  int id = 0;
  std::string title;
  std::string printed_descriptor;  // as printed, "[[4,2,2,2]]"
  unsigned design_t = 0;
  BigInt printed_deficit;          // the constant in F ~ 1 - c g^(t+1)
  Code printed;
  // Repaired code when one exists; unset when the printed code is correct
  // or no repair was found.
  std::optional<Code> corrected;
  // Weight-solver outcome on the printed supports, for entries that needed it.
  std::optional<WeightSolveResult> repair;
  std::vector<std::string> flags;
  std::string note;

  bool flagged() const { return !flags.empty(); }
  // corrected if present, else printed.
  const Code& preferred() const { return corrected ? *corrected : printed; }
};

// Examples 1-11, built on first use.
const std::vector<CatalogEntry>& catalog_entries();

// Throws DomainError for an unknown id.
const CatalogEntry& catalog_entry(int id);

// Throws DomainError for an unknown id, or when `corrected` is requested for
// an entry without one.
Code catalog(int id, CatalogVariant variant = CatalogVariant::preferred);

}  // namespace ampcode
