// Copyright 2026 The softbitop Authors
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


// Report assembled by a CLI command, rendered as aligned text or JSON.

#ifndef SOFTBITOP_CLI_REPORT_HPP_
#define SOFTBITOP_CLI_REPORT_HPP_

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "softbitop/theorems.hpp"

namespace softbitop::cli {

struct ReportLine {
  std::string key;
  nlohmann::ordered_json value;  // bool, number or string
};

struct Report {
  std::string command;
  std::vector<ReportLine> verdicts;
  std::vector<TheoremCheck> theorems;
  std::vector<std::string> notes;
  /// Golden-style mismatches between computed and expected outcomes.
  std::vector<std::string> mismatches;
  std::optional<double> seconds;
  int exit_code = 0;

  void add(std::string key, nlohmann::ordered_json value) {
    verdicts.push_back({std::move(key), std::move(value)});
  }
};

std::string render_text(const Report& report);
std::string render_json(const Report& report);

}  // namespace softbitop::cli

#endif  // SOFTBITOP_CLI_REPORT_HPP_
