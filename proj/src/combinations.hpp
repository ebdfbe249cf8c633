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

#ifndef SOFTBITOP_SRC_COMBINATIONS_HPP_
#define SOFTBITOP_SRC_COMBINATIONS_HPP_

#include <cstddef>
#include <vector>

namespace softbitop::internal {

// Visits the k-subsets of {0, ..., n-1} in lexicographic order until `fn`
// returns true. Returns whether some visit returned true.
template <typename Fn>
bool ForEachCombination(std::size_t n, std::size_t k, Fn&& fn) {
  if (k > n) return false;
  std::vector<std::size_t> pick(k);
  for (std::size_t i = 0; i < k; ++i) pick[i] = i;
  while (true) {
    if (fn(static_cast<const std::vector<std::size_t>&>(pick))) return true;
    std::size_t i = k;
    while (i > 0 && pick[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) return false;
    ++pick[i - 1];
    for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
}

}  // namespace softbitop::internal

#endif  // SOFTBITOP_SRC_COMBINATIONS_HPP_
