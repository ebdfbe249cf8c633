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

#include "softbitop/format.hpp"

namespace softbitop {

std::string Names::element(std::size_t i) const {
  return i < elements.size() ? elements[i] : std::to_string(i);
}

std::string Names::param(std::size_t t) const {
  return t < params.size() ? params[t] : std::to_string(t);
}

std::string to_string(const FinSet& s, const Names& names) {
  std::string out = "{";
  bool first = true;
  for (std::size_t x : s.elements()) {
    if (!first) out += ',';
    out += names.element(x);
    first = false;
  }
  return out + "}";
}

std::string to_string(const SoftSet& h, const Names& names) {
  std::string out = "(";
  for (std::size_t t = 0; t < h.param_count(); ++t) {
    if (t > 0) out += ',';
    out += to_string(h.section(t), names);
  }
  return out + ")";
}

std::string to_string(const SoftElement& a, const Names& names) {
  std::string out = "(";
  for (std::size_t t = 0; t < a.values.size(); ++t) {
    if (t > 0) out += ',';
    out += names.element(a.values[t]);
  }
  return out + ")";
}

std::string to_string(const SESubset& t, const Names& names) {
  std::string out = "{";
  bool first = true;
  for (std::size_t i : t.indices()) {
    if (!first) out += ',';
    out += to_string((*t.ambient())[i], names);
    first = false;
  }
  return out + "}";
}

}  // namespace softbitop
