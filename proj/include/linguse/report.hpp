// Copyright 2026 The linguse Authors
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
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "linguse/linguistic.hpp"
#include "linguse/scoring.hpp"
#include "linguse/sus_scale.hpp"

namespace linguse {

struct AdjectiveEntry {
  std::string scope;  // role id or "global"
  int alternative;
  TwoTuple ucd;
  UnbalancedSusValue value;
};

struct AdjectiveUsabilityReport {
  std::vector<AdjectiveEntry> entries;  // roles in order, then global
  std::vector<SusLabel> usability;      // label of the global value per alternative
};

struct ScopedUcd {
  std::string scope;
  std::vector<TwoTuple> ucd;
};

/// Retranslates every ucd to the adjective scale. The usability adjective is
/// taken from the scope named "global", if present.
AdjectiveUsabilityReport retranslate_vectors(const std::vector<ScopedUcd>& vectors);

struct NpsSummary {
  int promoters = 0;
  int passives = 0;
  int detractors = 0;
  double nps = 0.0;  // %promoters - %detractors
  int total() const noexcept { return promoters + passives + detractors; }
};

/// nullopt for an empty list.
std::optional<NpsSummary> nps_summary(const std::vector<NpsResponse>& responses);

/// "OK + 0.12", "OK - 0.12", "OK" at the given precision.
std::string format_adjective(const UnbalancedSusValue& value, int decimals = 2);
/// "(s4, -0.24)".
std::string format_tuple(const TwoTuple& value, int decimals = 2);
/// Fixed-point with `decimals` places; never prints "-0.00".
std::string format_fixed(double value, int decimals = 2);

}  // namespace linguse
