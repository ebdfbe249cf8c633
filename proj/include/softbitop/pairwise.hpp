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

// Soft bitopological spaces (F, tau1, tau2): pairwise soft separation,
// the induced and component bitopologies, pairwise soft open covers and
// cylinder soft sets.

#ifndef SOFTBITOP_PAIRWISE_HPP_
#define SOFTBITOP_PAIRWISE_HPP_

#include <cstddef>
#include <span>
#include <variant>
#include <vector>

#include "softbitop/finite_sets.hpp"
#include "softbitop/soft_core.hpp"
#include "softbitop/soft_topology.hpp"

namespace softbitop {

class SoftBitopSpace {
 public:
  /// Throws InputError if the topologies live on different soft sets, and
  /// NoSoftElementsError if F has an empty section.
  SoftBitopSpace(SoftTopology tau1, SoftTopology tau2);

  const SoftSet& carrier() const { return tau1_.ambient(); }
  std::size_t param_count() const { return carrier().param_count(); }
  const SoftTopology& tau1() const { return tau1_; }
  const SoftTopology& tau2() const { return tau2_; }
  const SoftElementsPtr& elements() const { return elements_; }

  friend bool operator==(const SoftBitopSpace& a, const SoftBitopSpace& b) {
    return a.tau1_ == b.tau1_ && a.tau2_ == b.tau2_;
  }

 private:
  SoftTopology tau1_;
  SoftTopology tau2_;
  SoftElementsPtr elements_;
};

/// How "H cap_s K = Phi" is decided in pairwise soft T2.
enum class Disjointness {
  kNullSoftSet,   // every section of H cap_s K is empty
  kSomeParameter, // some section of H cap_s K is empty (SE(H) and SE(K) disjoint)
};

struct SeparationOptions {
  PairReading pairs = PairReading::kOrdered;
  Disjointness disjointness = Disjointness::kNullSoftSet;
};

struct ElementPair {
  SoftElement a;
  SoftElement b;
  friend bool operator==(const ElementPair&, const ElementPair&) = default;
};

struct UncoveredPoint {
  std::size_t param;
  std::size_t point;
  friend bool operator==(const UncoveredPoint&, const UncoveredPoint&) = default;
};

struct NonOpenMember {
  std::size_t index;
  friend bool operator==(const NonOpenMember&, const NonOpenMember&) = default;
};

using Witness = std::variant<std::monostate, ElementPair, UncoveredPoint, NonOpenMember>;

/// Outcome of a universal check; the witness is the least counterexample
/// when the check fails and monostate when it holds.
struct Verdict {
  bool holds;
  Witness witness;
};

Verdict pairwise_soft_t0(const SoftBitopSpace& space);
Verdict pairwise_soft_t1(const SoftBitopSpace& space,
                         const SeparationOptions& options = {});
Verdict pairwise_soft_t2(const SoftBitopSpace& space,
                         const SeparationOptions& options = {});

/// ((tau1)*, (tau2)*) over SE-indices. Capacity as induced_topology.
BitopPair induced_bitop(const SoftBitopSpace& space);
/// ((tau1)_t, (tau2)_t) on F(t).
BitopPair component_bitop(const SoftBitopSpace& space, std::size_t t);

enum class Side : unsigned char {
  kFirst = 1,
  kSecond = 2,
  kBoth = 3,
};

struct CoverMember {
  SoftSet set;
  Side side;
  friend bool operator==(const CoverMember&, const CoverMember&) = default;
};

struct SoftCover {
  SoftSet target;
  std::vector<CoverMember> members;
};

/// Every member is open on its tagged side(s), and the soft union of the
/// members soft-contains the target. Witness: first non-open member, else
/// the least uncovered (parameter, point).
Verdict is_pairwise_soft_cover(const SoftBitopSpace& space, const SoftCover& cover);

/// Indices of a minimum-cardinality subfamily whose soft union contains
/// `target`, lexicographically least among those. Throws NotACoverError.
std::vector<std::size_t> minimal_soft_subcover(std::span<const SoftSet> members,
                                               const SoftSet& target);

struct SubcoverResult {
  /// Union over t of the minimal covers of target(t) by member sections.
  std::vector<std::size_t> per_parameter;
  /// A minimum-cardinality subcover; never larger than per_parameter.
  std::vector<std::size_t> minimal;
};

/// Throws NotACoverError unless is_pairwise_soft_cover holds.
SubcoverResult find_finite_subcover(const SoftBitopSpace& space, const SoftCover& cover);

struct Cylinder {
  SoftSet set;
  bool in_topology;  // member of the tagged soft topology (both, for kBoth)
};

/// K_V: V at t0 and F(t) elsewhere. Throws InputError unless V is open in
/// the tagged component topology at t0. Membership in a non-canonical
/// topology is reported, not enforced.
Cylinder cylinder(const SoftBitopSpace& space, std::size_t t0, const FinSet& v,
                  Side side);

}  // namespace softbitop

#endif  // SOFTBITOP_PAIRWISE_HPP_
