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


// Exhaustive census of small soft bitopological spaces for two kinds of
// counterexample: spaces that are not pairwise soft T0 although their
// induced pair on SE(F) is pairwise T2, and soft topologies strictly
// smaller than their canonical enlargement.

#ifndef SOFTBITOP_SEARCH_HPP_
#define SOFTBITOP_SEARCH_HPP_

#include <cstddef>
#include <limits>
#include <vector>

#include "softbitop/pairwise.hpp"

namespace softbitop {

inline constexpr std::size_t kMaxSearchUniverse = 3;
inline constexpr std::size_t kMaxSearchParams = 2;
/// Above this many points in the disjoint union of the sections only
/// canonical soft topologies are enumerated.
inline constexpr std::size_t kMaxRawSearchPoints = kMaxEnumeratedTopologyPoints;

struct SearchOptions {
  std::size_t max_universe = 2;
  std::size_t max_params = 2;
  SeparationOptions separation;
  /// Hits kept per class; counts are always complete.
  std::size_t max_listed = std::numeric_limits<std::size_t>::max();
};

struct SearchSpace {
  SoftTopology tau1;
  SoftTopology tau2;
};

struct SearchResult {
  std::size_t carriers = 0;     // soft sets F examined
  std::size_t topologies = 0;   // soft topologies examined, over all F
  std::size_t spaces = 0;       // ordered pairs (tau1, tau2) examined
  std::size_t class_i_count = 0;
  std::size_t class_ii_count = 0;
  std::vector<SearchSpace> class_i;    // not soft T0, induced pair T2
  std::vector<SoftTopology> class_ii;  // tau strictly inside tau^can
};

/// Soft sets F enumerated up to relabeling: for each parameter count
/// p <= max_params, each section-size tuple (k_0..k_{p-1}) in
/// [1, max_universe]^p in lexicographic order, with F(t) = {0..k_t-1}.
/// Soft topologies on F are all of them when sum k_t <= kMaxRawSearchPoints,
/// otherwise the canonical ones. Order is deterministic.
/// Throws CapacityError beyond kMaxSearchUniverse or kMaxSearchParams and
/// InputError for zero bounds.
SearchResult search_counterexamples(const SearchOptions& options);

/// The soft sets F visited by search_counterexamples, in order.
std::vector<SoftSet> search_carriers(std::size_t max_universe,
                                     std::size_t max_params);

/// The soft topologies on F visited by search_counterexamples, in order.
std::vector<SoftTopology> search_topologies(const SoftSet& f);

}  // namespace softbitop

#endif  // SOFTBITOP_SEARCH_HPP_
