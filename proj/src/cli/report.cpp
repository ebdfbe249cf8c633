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


#include "softbitop/cli/report.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

namespace softbitop::cli {
namespace {

std::string Scalar(const nlohmann::ordered_json& v) {
  return v.is_string() ? v.get<std::string>() : v.dump();
}

const char* Status(const TheoremCheck& row) {
  if (!row.applicable) return "N/A ";
  return row.passed ? "PASS" : "FAIL";
}

}  // namespace

std::string render_text(const Report& report) {
  std::ostringstream out;
  out << "command: " << report.command << "\n";
  std::size_t width = 0;
  for (const ReportLine& line : report.verdicts) width = std::max(width, line.key.size());
  for (const ReportLine& line : report.verdicts) {
    out << "  " << std::left << std::setw(static_cast<int>(width)) << line.key << "  "
        << Scalar(line.value) << "\n";
  }
  if (!report.theorems.empty()) {
    out << "theorems:\n";
    width = 0;
    for (const TheoremCheck& row : report.theorems) width = std::max(width, row.name.size());
    for (const TheoremCheck& row : report.theorems) {
      out << "  " << Status(row) << "  " << std::left << std::setw(static_cast<int>(width))
          << row.name << "  " << row.detail << "\n";
    }
  }
  for (const std::string& note : report.notes) out << "note: " << note << "\n";
  for (const std::string& m : report.mismatches) out << "MISMATCH: " << m << "\n";
  if (report.seconds) {
    out << "time: " << std::fixed << std::setprecision(3) << *report.seconds << " s\n";
  }
  return out.str();
}

std::string render_json(const Report& report) {
  nlohmann::ordered_json doc = nlohmann::ordered_json::object();
  doc["command"] = report.command;
  nlohmann::ordered_json verdicts = nlohmann::ordered_json::array();
  for (const ReportLine& line : report.verdicts) {
    verdicts.push_back({{"name", line.key}, {"value", line.value}});
  }
  doc["verdicts"] = std::move(verdicts);
  nlohmann::ordered_json theorems = nlohmann::ordered_json::array();
  for (const TheoremCheck& row : report.theorems) {
    theorems.push_back({{"name", row.name},
                        {"applicable", row.applicable},
                        {"passed", row.passed},
                        {"detail", row.detail}});
  }
  doc["theorems"] = std::move(theorems);
  doc["notes"] = report.notes;
  doc["mismatches"] = report.mismatches;
  if (report.seconds) doc["seconds"] = *report.seconds;
  doc["exit_code"] = report.exit_code;
  return doc.dump(2) + "\n";
}

}  // namespace softbitop::cli
