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

#ifndef SOFTBITOP_SOFT_TOPOLOGY_HPP_
#define SOFTBITOP_SOFT_TOPOLOGY_HPP_

#include <cstddef>
#include <span>
#include <vector>

#include "softbitop/finite_sets.hpp"
#include "softbitop/soft_core.hpp"

namespace softbitop {

inline constexpr std::size_t kMaxSoftOpens = std::size_t{1} << 20;
inline constexpr std::size_t kMaxInducedElements = 20;

/// True iff `opens` contains Phi and F and is closed under binary soft union
/// and intersection. Throws InputError if a member is not a soft subset of F.
bool is_soft_topology(const SoftSet& f, std::span<const SoftSet> opens);

/// An explicit soft topology on F, deduplicated and sorted.
class SoftTopology {
 public:
  /// Throws InputError unless is_soft_topology(ambient, opens).
  SoftTopology(SoftSet ambient, std::vector<SoftSet> opens);

  static SoftTopology Indiscrete(const SoftSet& f);
  /// Every soft subset of F.
  static SoftTopology Discrete(const SoftSet& f);

  const SoftSet& ambient() const { return ambient_; }
  std::size_t param_count() const { return ambient_.param_count(); }
  std::span<const SoftSet> opens() const { return opens_; }
  std::size_t size() const { return opens_.size(); }
  bool contains(const SoftSet& h) const;
  bool subset_of(const SoftTopology& other) const;

  friend bool operator==(const SoftTopology&, const SoftTopology&) = default;

 private:
  SoftSet ambient_;
  std::vector<SoftSet> opens_;
};

/// Smallest soft topology on F containing `subbase`.
SoftTopology generate_soft_topology(const SoftSet& f,
                                    std::span<const SoftSet> subbase);

/// tau_t = {H(t) : H in tau}, a topology on F(t).
ClassicalTopology component_topology(const SoftTopology& tau, std::size_t t);

/// Top({sigma_t}): every H with H(t) in sigma_t for all t. sigmas[t] must be
/// a topology on F(t). Throws CapacityError above kMaxSoftOpens opens.
SoftTopology canonical_topology(const SoftSet& f,
                                std::span<const ClassicalTopology> sigmas);

/// tau^can = Top({tau_t}).
SoftTopology canonical_enlargement(const SoftTopology& tau);
bool is_canonical(const SoftTopology& tau);

/// A family of subsets of SE(F), stored as a SetFamily over SE-indices.
class SEFamily {
 public:
  /// `sets` must be over a universe of size |SE(F)| with the full carrier.
  SEFamily(SoftElementsPtr ambient, SetFamily sets);

  const SoftElementsPtr& ambient() const { return ambient_; }
  const SetFamily& sets() const { return sets_; }
  std::size_t size() const { return sets_.size(); }
  bool contains(const SESubset& t) const;
  SESubset member(std::size_t i) const;
  bool subset_of(const SEFamily& other) const { return sets_.subset_of(other.sets_); }

  friend bool operator==(const SEFamily& a, const SEFamily& b) {
    return a.ambient_ == b.ambient_ && a.sets_ == b.sets_;
  }

 private:
  SoftElementsPtr ambient_;
  SetFamily sets_;
};

/// Converts between SESubset and a FinSet over SE-indices (|SE(F)| <= 64).
FinSet to_index_set(const SESubset& t);
SESubset from_index_set(const SoftElementsPtr& ambient, const FinSet& s);

/// tau* = {T subset of SE(F) : T(t) in tau_t for all t}, by filtering all
/// subsets of SE(F). Throws CapacityError for |SE(F)| > kMaxInducedElements.
/// The result is union-closed but need not be intersection-closed.
SEFamily induced_topology(const SoftTopology& tau, const SoftElementsPtr& ambient);
SEFamily induced_topology(const SoftTopology& tau);

/// True iff every member U of `candidate` has U(t) in tau_t for all t, i.e.
/// every projection is open. Throws InputError if `candidate` is not a
/// topology on SE(F).
bool check_finest_open_projections(const SoftTopology& tau,
                                   const SEFamily& candidate);

struct Reconstruction {
  std::vector<ClassicalTopology> sigmas;
  SoftTopology tau_hat;
  bool contained;  // candidate is a subfamily of tau_hat*
};

/// sigma_t := topology generated by {U(t) : U in candidate},
/// tau_hat := Top({sigma_t}). Throws InputError if `candidate` is not a
/// topology on SE(F).
Reconstruction reconstruct(const SEFamily& candidate);

}  // namespace softbitop

#endif  // SOFTBITOP_SOFT_TOPOLOGY_HPP_
