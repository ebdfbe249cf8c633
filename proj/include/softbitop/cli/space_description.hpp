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


// JSON description of a soft bitopological space, resolved from element and
// parameter names to indices at parse time.
//
//   {
//     "universe": ["x1", "x2"],
//     "params": ["a", "b"],
//     "sections": {"a": ["x1", "x2"], "b": ["x1"]},
//     "tau1": [{"a": [], "b": []}, {"a": ["x1", "x2"], "b": ["x1"]}],
//     "tau2": {"generate": "canonical", "subbases": {"a": [["x1"]], "b": []}},
//     "representability": [[{"a": "x1", "b": "x1"}]],
//     "symbolic": {
//       "target": {"default": ["x1", "x2"], "exceptions": {"4": ["x1"]}},
//       "template": {"at_index": ["x2"], "default": ["x1"]},
//       "explicit": [{"default": ["x2"]}]
//     }
//   }
//
// A parameter missing from an open means an empty section. Exception labels
// are decimal strings.

#ifndef SOFTBITOP_CLI_SPACE_DESCRIPTION_HPP_
#define SOFTBITOP_CLI_SPACE_DESCRIPTION_HPP_

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "softbitop/format.hpp"
#include "softbitop/pairwise.hpp"
#include "softbitop/symbolic_compact.hpp"

namespace softbitop::cli {

struct TopologySpec {
  bool canonical = false;
  std::vector<SoftSet> opens;                // when !canonical
  std::vector<std::vector<FinSet>> subbases;  // per parameter, when canonical
  friend bool operator==(const TopologySpec&, const TopologySpec&) = default;
};

struct SymbolicSpec {
  CofiniteSoftSet target;
  TemplateFamily family;
  friend bool operator==(const SymbolicSpec&, const SymbolicSpec&) = default;
};

struct SpaceDescription {
  std::vector<std::string> universe;
  std::vector<std::string> params;
  std::vector<FinSet> sections;
  std::optional<TopologySpec> tau1;
  std::optional<TopologySpec> tau2;
  std::vector<std::vector<SoftElement>> representability;
  std::optional<SymbolicSpec> symbolic;

  Names names() const { return {universe, params}; }
  friend bool operator==(const SpaceDescription&, const SpaceDescription&) = default;
};

/// Throws InputError with a JSON pointer (or byte offset for syntax errors)
/// in the message.
SpaceDescription parse_space_description(const std::string& text);
SpaceDescription parse_space_description(const nlohmann::ordered_json& doc);

nlohmann::ordered_json to_json(const SpaceDescription& desc);

SoftSet carrier_of(const SpaceDescription& desc);

/// Builds (F, tau1, tau2). Throws InputError if a topology is missing or
/// fails the soft topology axioms.
SoftBitopSpace build_space(const SpaceDescription& desc);

}  // namespace softbitop::cli

#endif  // SOFTBITOP_CLI_SPACE_DESCRIPTION_HPP_
