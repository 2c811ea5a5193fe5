// Copyright 2026 The abds Authors.
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

// Subcommands of the abds tool. Every command produces one structured
// report; the text form is rendered from it, so both outputs always agree.
//
// Report envelope (schema "abds.report/1", documented in
// docs/report-schema.md):
//
//   {"schema", "tool": {"name", "version"}, "command", "input_sha256",
//    "threads", "result": {...}}

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "abds/cli/job.hpp"

namespace abds::cli {

inline constexpr std::string_view kSchemaId = "abds.report/1";

std::string_view tool_version();

// Raised by validate_report when a document does not follow the schema.
class ReportError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

nlohmann::json cmd_orbit(const JobSpec& job);
nlohmann::json cmd_bound(const JobSpec& job);
nlohmann::json cmd_appdist(const JobSpec& job);
nlohmann::json cmd_mad(const JobSpec& job);
nlohmann::json cmd_code(const JobSpec& job);
nlohmann::json cmd_verify(const JobSpec& job);
nlohmann::json cmd_table1(const JobSpec& job);

// Dispatches on the command name; throws ConfigError for unknown names.
nlohmann::json run_command(std::string_view command, const JobSpec& job);

std::string render_text(const nlohmann::json& report);

// Throws ReportError naming the first offending field.
void validate_report(const nlohmann::json& report);

struct Table1Row {
  std::string id;
  std::uint64_t q;
  std::vector<int> r;
  std::vector<std::vector<int>> reps;
  std::string bounds;
  int n;
  std::size_t dimension;
  int delta;
};

// The published rows reproduced by `table1`.
const std::vector<Table1Row>& table1_rows();

}  // namespace abds::cli
