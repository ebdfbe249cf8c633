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

// Evaluates the structural claims about soft bitopological spaces on a
// concrete finite space: each claim's hypotheses are decided, then its
// conclusion, and the implication is recorded with a witness on failure.

#ifndef SOFTBITOP_THEOREMS_HPP_
#define SOFTBITOP_THEOREMS_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "softbitop/format.hpp"
#include "softbitop/pairwise.hpp"

namespace softbitop {

struct TheoremCheck {
  std::string name;
  bool applicable;
  bool passed;  // meaningful only when applicable
  std::string detail;
};

struct TheoremReport {
  std::vector<TheoremCheck> rows;
  /// Observations that are not failures, e.g. a converse that does not hold.
  std::vector<std::string> notes;

  bool all_passed() const;
  void append(TheoremReport other);
};

struct VerifyOptions {
  SeparationOptions separation;
  std::uint64_t seed = 20260101;
  std::size_t random_covers = 4;
  /// Also quantify over every topology on SE(F) when |SE(F)| <= 4.
  bool enumerate_se_topologies = true;
};

/// Separation chain, soft/component/induced transfers for T0, T1, T2.
TheoremReport check_separation_theorems(const SoftBitopSpace& space,
                                        const SeparationOptions& options,
                                        const Names& names = {});

/// Claims about one soft topology and its induced family on SE(F): open
/// projections and finest-ness, invariance under canonical enlargement.
/// `se_topologies` (topologies on SE-indices) feed the finest-ness check;
/// pass an empty list to skip that quantifier.
TheoremReport check_topology_theorems(const SoftTopology& tau,
                                      const SoftElementsPtr& elements,
                                      const std::vector<ClassicalTopology>& se_topologies,
                                      const std::string& label);

/// Every listed topology on SE(F) embeds in the induced topology of its
/// reconstruction, and pairs of them give canonical soft bitopologies.
TheoremReport check_reconstruction(const SoftElementsPtr& elements,
                                   const std::vector<ClassicalTopology>& se_topologies);

/// Finite-subcover existence for finite A, and cylinder transport of
/// component covers on canonical spaces.
TheoremReport check_compactness_theorems(const SoftBitopSpace& space,
                                         std::uint64_t seed,
                                         std::size_t random_covers);

/// All of the above for one space.
TheoremReport verify_theorems(const SoftBitopSpace& space,
                              const VerifyOptions& options = {},
                              const Names& names = {});

/// The topologies on SE(F) used as quantifier range: all of them when
/// |SE(F)| <= 4, otherwise none.
std::vector<ClassicalTopology> se_topologies_for(const SoftElementSpace& se);

}  // namespace softbitop

#endif  // SOFTBITOP_THEOREMS_HPP_
