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

#ifndef SOFTBITOP_FORMAT_HPP_
#define SOFTBITOP_FORMAT_HPP_

#include <cstddef>
#include <string>
#include <vector>

#include "softbitop/finite_sets.hpp"
#include "softbitop/soft_core.hpp"

namespace softbitop {

/// Display names for universe elements and parameters. Missing names fall
/// back to the decimal index.
struct Names {
  std::vector<std::string> elements;
  std::vector<std::string> params;

  std::string element(std::size_t i) const;
  std::string param(std::size_t t) const;
};

std::string to_string(const FinSet& s, const Names& names = {});
// "({x1},{x3,x4})"
std::string to_string(const SoftSet& h, const Names& names = {});
// "(x1,x4)"
std::string to_string(const SoftElement& a, const Names& names = {});
std::string to_string(const SESubset& t, const Names& names = {});

}  // namespace softbitop

#endif  // SOFTBITOP_FORMAT_HPP_
