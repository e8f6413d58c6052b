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

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace linguse {

/// One compared value of a reference table.
struct CheckResult {
  std::string table;
  std::string item;
  double printed = 0.0;
  double derived = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  bool whitelisted = false;  // a documented deviation, compared to its derived value
  bool numeric = true;  // false for labels and orderings
  std::string note;
};

struct TableSummary {
  std::string table;
  int checked = 0;
  int failed = 0;
  int deviations = 0;
};

struct ReproductionReport {
  std::vector<CheckResult> checks;

  bool ok() const;
  std::vector<TableSummary> summary() const;
  std::vector<const CheckResult*> failures() const;
  std::vector<const CheckResult*> deviations() const;
};

struct ReproduceOptions {
  std::filesystem::path data_dir;  // holds case_study/
  std::optional<std::filesystem::path> judgments;  // replaces case_study/judgments.json
  std::optional<double> tolerance;  // replaces every per-table tolerance
};

/// Recomputes the reference tables from the raw case-study responses and
/// compares them with case_study/expected.json. Derived values are rounded
/// to the printed number of decimals before comparison.
ReproductionReport reproduce(const ReproduceOptions& options);

std::string render_reproduction(const ReproductionReport& report);
nlohmann::json reproduction_json(const ReproductionReport& report);

}  // namespace linguse
