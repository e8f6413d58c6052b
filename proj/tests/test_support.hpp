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

#include "linguse/model.hpp"

namespace linguse::testing {

inline std::filesystem::path data_dir() { return LINGUSE_TEST_DATA_DIR; }
inline std::filesystem::path case_dir() { return data_dir() / "case_study"; }
inline std::filesystem::path fixture(const char* name) { return std::filesystem::path(LINGUSE_TEST_FIXTURES) / name; }

inline ProjectConfig case_project() { return parse_project(load_json_file(case_dir() / "project.json")); }
inline JudgmentSet case_judgments() { return parse_judgments(load_json_file(case_dir() / "judgments.json")); }
inline Dataset case_dataset() { return parse_dataset(load_json_file(case_dir() / "responses.json")); }

}  // namespace linguse::testing
