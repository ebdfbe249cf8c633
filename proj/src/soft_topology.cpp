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

#include "softbitop/soft_topology.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_set>

#include "softbitop/error.hpp"

namespace softbitop {
namespace {

std::vector<SoftSet> SortedUnique(std::vector<SoftSet> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

template <typename Op>
void CloseUnder(std::vector<SoftSet>& sets, std::set<SoftSet>& seen, Op op) {
  for (std::size_t i = 0; i < sets.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      SoftSet c = op(sets[i], sets[j]);
      if (seen.insert(c).second) {
        if (sets.size() >= kMaxSoftOpens) {
          throw CapacityError("generated soft topology exceeds " +
                              std::to_string(kMaxSoftOpens) + " opens");
        }
        sets.push_back(std::move(c));
      }
    }
  }
}

// Section of an SE-index set at parameter t.
std::uint64_t IndexSetSection(const SoftElementSpace& se, std::uint64_t mask,
                              std::size_t t) {
  std::uint64_t out = 0;
  for (; mask != 0; mask &= mask - 1) {
    out |= std::uint64_t{1} << se[static_cast<std::size_t>(std::countr_zero(mask))][t];
  }
  return out;
}

void RequireTopologyOnSE(const SEFamily& candidate) {
  if (!is_topology(candidate.sets())) {
    throw InputError("candidate family is not a topology on SE(F)");
  }
}

}  // namespace

bool is_soft_topology(const SoftSet& f, std::span<const SoftSet> opens) {
  for (const SoftSet& h : opens) {
    if (!soft_subset(h, f)) {
      throw InputError("soft topology member is not a soft subset of F");
    }
  }
  const std::vector<SoftSet> sorted =
      SortedUnique(std::vector<SoftSet>(opens.begin(), opens.end()));
  auto has = [&](const SoftSet& h) {
    return std::binary_search(sorted.begin(), sorted.end(), h);
  };
  if (!has(SoftSet::Null(f.param_count(), f.universe_size())) || !has(f)) {
    return false;
  }
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (!has(soft_union(sorted[i], sorted[j])) ||
          !has(soft_intersection(sorted[i], sorted[j]))) {
        return false;
      }
    }
  }
  return true;
}

SoftTopology::SoftTopology(SoftSet ambient, std::vector<SoftSet> opens)
    : ambient_(std::move(ambient)), opens_(SortedUnique(std::move(opens))) {
  if (!is_soft_topology(ambient_, opens_)) {
    throw InputError("family is not a soft topology on F");
  }
}

SoftTopology SoftTopology::Indiscrete(const SoftSet& f) {
  return SoftTopology(f, {SoftSet::Null(f.param_count(), f.universe_size()), f});
}

SoftTopology SoftTopology::Discrete(const SoftSet& f) {
  std::vector<ClassicalTopology> sigmas;
  for (const FinSet& s : f.sections()) {
    sigmas.push_back(ClassicalTopology::Discrete(s));
  }
  return canonical_topology(f, sigmas);
}

bool SoftTopology::contains(const SoftSet& h) const {
  return std::binary_search(opens_.begin(), opens_.end(), h);
}

bool SoftTopology::subset_of(const SoftTopology& other) const {
  return ambient_ == other.ambient_ &&
         std::includes(other.opens_.begin(), other.opens_.end(),
                       opens_.begin(), opens_.end());
}

SoftTopology generate_soft_topology(const SoftSet& f,
                                    std::span<const SoftSet> subbase) {
  std::vector<SoftSet> sets{f};
  for (const SoftSet& h : subbase) {
    if (!soft_subset(h, f)) {
      throw InputError("subbase member is not a soft subset of F");
    }
    sets.push_back(h);
  }
  sets = SortedUnique(std::move(sets));
  std::set<SoftSet> seen(sets.begin(), sets.end());
  CloseUnder(sets, seen, soft_intersection);
  const SoftSet null = SoftSet::Null(f.param_count(), f.universe_size());
  if (seen.insert(null).second) sets.push_back(null);
  CloseUnder(sets, seen, soft_union);
  return SoftTopology(f, std::move(sets));
}

ClassicalTopology component_topology(const SoftTopology& tau, std::size_t t) {
  if (t >= tau.param_count()) throw InputError("parameter out of range");
  std::vector<FinSet> sections;
  sections.reserve(tau.size());
  for (const SoftSet& h : tau.opens()) sections.push_back(h.section(t));
  return ClassicalTopology(SetFamily(tau.ambient().section(t), std::move(sections)));
}

SoftTopology canonical_topology(const SoftSet& f,
                                std::span<const ClassicalTopology> sigmas) {
  if (sigmas.size() != f.param_count()) {
    throw InputError("need one component topology per parameter");
  }
  std::size_t total = 1;
  for (std::size_t t = 0; t < sigmas.size(); ++t) {
    if (sigmas[t].carrier() != f.section(t)) {
      throw InputError("component topology " + std::to_string(t) +
                       " is not on F(t)");
    }
    total *= sigmas[t].size();
    if (total > kMaxSoftOpens) {
      throw CapacityError("canonical topology exceeds " +
                          std::to_string(kMaxSoftOpens) + " opens");
    }
  }
  std::vector<SoftSet> opens;
  opens.reserve(total);
  std::vector<std::size_t> pos(sigmas.size(), 0);
  std::vector<FinSet> sections;
  for (std::size_t n = 0; n < total; ++n) {
    sections.clear();
    for (std::size_t t = 0; t < sigmas.size(); ++t) {
      sections.push_back(sigmas[t].opens()[pos[t]]);
    }
    opens.emplace_back(sections);
    for (std::size_t t = sigmas.size(); t > 0; --t) {
      if (++pos[t - 1] < sigmas[t - 1].size()) break;
      pos[t - 1] = 0;
    }
  }
  return SoftTopology(f, std::move(opens));
}

SoftTopology canonical_enlargement(const SoftTopology& tau) {
  std::vector<ClassicalTopology> sigmas;
  for (std::size_t t = 0; t < tau.param_count(); ++t) {
    sigmas.push_back(component_topology(tau, t));
  }
  return canonical_topology(tau.ambient(), sigmas);
}

bool is_canonical(const SoftTopology& tau) {
  return canonical_enlargement(tau) == tau;
}

SEFamily::SEFamily(SoftElementsPtr ambient, SetFamily sets)
    : ambient_(std::move(ambient)), sets_(std::move(sets)) {
  if (sets_.universe_size() != ambient_->size() ||
      sets_.carrier() != FinSet::Full(ambient_->size())) {
    throw InputError("SE family must be over the SE-index universe");
  }
}

bool SEFamily::contains(const SESubset& t) const {
  return t.ambient() == ambient_ && sets_.contains(to_index_set(t));
}

SESubset SEFamily::member(std::size_t i) const {
  return from_index_set(ambient_, sets_.members()[i]);
}

FinSet to_index_set(const SESubset& t) {
  FinSet out(t.ambient()->size());
  for (std::size_t i : t.indices()) out.insert(i);
  return out;
}

SESubset from_index_set(const SoftElementsPtr& ambient, const FinSet& s) {
  if (s.universe_size() != ambient->size()) {
    throw InputError("index set width differs from |SE(F)|");
  }
  SESubset out(ambient);
  for (std::size_t i : s.elements()) out.insert(i);
  return out;
}

SEFamily induced_topology(const SoftTopology& tau,
                          const SoftElementsPtr& ambient) {
  if (ambient->carrier() != tau.ambient()) {
    throw InputError("SE(F) and the soft topology have different carriers");
  }
  const SoftElementSpace& se = *ambient;
  const std::size_t n = se.size();
  if (n > kMaxInducedElements) {
    throw CapacityError("induced topology needs |SE(F)| <= " +
                        std::to_string(kMaxInducedElements) + ", got " +
                        std::to_string(n));
  }
  const std::size_t subsets = std::size_t{1} << n;
  std::vector<char> open(subsets, 1);
  std::vector<std::uint64_t> sec(subsets);
  for (std::size_t t = 0; t < se.param_count(); ++t) {
    std::unordered_set<std::uint64_t> component;
    for (const SoftSet& h : tau.opens()) component.insert(h.section(t).mask());
    sec[0] = 0;
    for (std::size_t m = 1; m < subsets; ++m) {
      const std::size_t low = static_cast<std::size_t>(std::countr_zero(m));
      sec[m] = sec[m & (m - 1)] | (std::uint64_t{1} << se[low][t]);
      if (open[m] && !component.contains(sec[m])) open[m] = 0;
    }
  }
  std::vector<FinSet> members;
  for (std::size_t m = 0; m < subsets; ++m) {
    if (open[m]) members.emplace_back(n, m);
  }
  return SEFamily(ambient, SetFamily(FinSet::Full(n), std::move(members)));
}

SEFamily induced_topology(const SoftTopology& tau) {
  return induced_topology(tau, make_soft_elements(tau.ambient()));
}

bool check_finest_open_projections(const SoftTopology& tau,
                                   const SEFamily& candidate) {
  RequireTopologyOnSE(candidate);
  const SoftElementSpace& se = *candidate.ambient();
  if (se.carrier() != tau.ambient()) {
    throw InputError("candidate is over a different SE(F)");
  }
  for (std::size_t t = 0; t < tau.param_count(); ++t) {
    const ClassicalTopology component = component_topology(tau, t);
    for (const FinSet& u : candidate.sets().members()) {
      const FinSet image(se.carrier().universe_size(),
                         IndexSetSection(se, u.mask(), t));
      if (!component.contains(image)) return false;
    }
  }
  return true;
}

Reconstruction reconstruct(const SEFamily& candidate) {
  RequireTopologyOnSE(candidate);
  const SoftElementSpace& se = *candidate.ambient();
  const SoftSet& f = se.carrier();
  std::vector<ClassicalTopology> sigmas;
  for (std::size_t t = 0; t < f.param_count(); ++t) {
    std::vector<FinSet> base;
    for (const FinSet& u : candidate.sets().members()) {
      base.emplace_back(f.universe_size(), IndexSetSection(se, u.mask(), t));
    }
    sigmas.push_back(generate_topology(base, f.section(t)));
  }
  SoftTopology tau_hat = canonical_topology(f, sigmas);
  const bool contained =
      candidate.subset_of(induced_topology(tau_hat, candidate.ambient()));
  if (!contained) {
    throw std::logic_error("reconstruction lost an open set of the candidate");
  }
  return {std::move(sigmas), std::move(tau_hat), contained};
}

}  // namespace softbitop
