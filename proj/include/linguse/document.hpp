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

#include <string>

#include <json.hpp>

#include "linguse/model.hpp"
#include "linguse/pipeline.hpp"

namespace linguse {

/// Structured report: rankings, ucd / adjective values per scope, weights,
/// NPS segments, per-task UT tables, ACC labels and warnings. Full precision
/// numbers; key order and formatting are stable for identical inputs.
/// `weights` may be null when only the normalized vector is known.
nlohmann::json compose_report(const ProjectConfig& project, const ProjectWeights* weights, const ResultBundle& bundle);

/// Plain-text tables of the structured report, numbers at 2 decimals.
std::string render_text(const nlohmann::json& report);

/// Serialization used for byte comparisons (2-space indent, trailing newline).
std::string dump_stable(const nlohmann::json& j);

}  // namespace linguse
