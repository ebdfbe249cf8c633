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

#include "softbitop/pairwise.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "combinations.hpp"
#include "softbitop/error.hpp"

namespace softbitop {
namespace {

// Membership bitsets: row i holds SE(H_i) for the i-th open.
std::vector<boost::dynamic_bitset<>> Memberships(const SoftElementsPtr& se,
                                                 const SoftTopology& tau) {
  std::vector<boost::dynamic_bitset<>> out;
  out.reserve(tau.size());
  for (const SoftSet& h : tau.opens()) out.push_back(se_of_softset(se, h).members());
  return out;
}

bool Disjoint(const SoftSet& h, const SoftSet& k, Disjointness mode) {
  const SoftSet meet = soft_intersection(h, k);
  return mode == Disjointness::kNullSoftSet ? meet.is_null()
                                            : meet.has_empty_section();
}

template <typename OrderedOk>
Verdict QuantifySoftPairs(const SoftBitopSpace& space, PairReading reading,
                          OrderedOk ordered_ok) {
  const SoftElementSpace& se = *space.elements();
  for (std::size_t a = 0; a < se.size(); ++a) {
    for (std::size_t b = 0; b < se.size(); ++b) {
      if (a == b) continue;
      bool ok;
      if (reading == PairReading::kUnordered) {
        if (a > b) continue;
        ok = ordered_ok(a, b) || ordered_ok(b, a);
      } else {
        ok = ordered_ok(a, b);
      }
      if (!ok) return {false, ElementPair{se[a], se[b]}};
    }
  }
  return {true, std::monostate{}};
}

bool OpenOnSide(const SoftBitopSpace& space, const SoftSet& h, Side side) {
  switch (side) {
    case Side::kFirst:
      return space.tau1().contains(h);
    case Side::kSecond:
      return space.tau2().contains(h);
    case Side::kBoth:
      return space.tau1().contains(h) && space.tau2().contains(h);
  }
  return false;
}

bool SoftCovers(std::span<const SoftSet> members,
                std::span<const std::size_t> pick, const SoftSet& target) {
  for (std::size_t t = 0; t < target.param_count(); ++t) {
    std::uint64_t u = 0;
    for (std::size_t i : pick) u |= members[i].section(t).mask();
    if ((target.section(t).mask() & ~u) != 0) return false;
  }
  return true;
}

}  // namespace

SoftBitopSpace::SoftBitopSpace(SoftTopology tau1, SoftTopology tau2)
    : tau1_(std::move(tau1)), tau2_(std::move(tau2)) {
  if (tau1_.ambient() != tau2_.ambient()) {
    throw InputError("the two soft topologies are on different soft sets");
  }
  elements_ = make_soft_elements(tau1_.ambient());
}

Verdict pairwise_soft_t0(const SoftBitopSpace& space) {
  const auto m1 = Memberships(space.elements(), space.tau1());
  const auto m2 = Memberships(space.elements(), space.tau2());
  auto separates = [](const std::vector<boost::dynamic_bitset<>>& m,
                      std::size_t a, std::size_t b) {
    return std::any_of(m.begin(), m.end(),
                       [&](const auto& row) { return row[a] != row[b]; });
  };
  // T0 is symmetric in a and b, so the reading does not matter.
  return QuantifySoftPairs(space, PairReading::kUnordered,
                           [&](std::size_t a, std::size_t b) {
                             return separates(m1, a, b) || separates(m2, a, b);
                           });
}

Verdict pairwise_soft_t1(const SoftBitopSpace& space,
                         const SeparationOptions& options) {
  const auto m1 = Memberships(space.elements(), space.tau1());
  const auto m2 = Memberships(space.elements(), space.tau2());
  auto in_not = [](const std::vector<boost::dynamic_bitset<>>& m,
                   std::size_t in, std::size_t out) {
    return std::any_of(m.begin(), m.end(),
                       [&](const auto& row) { return row[in] && !row[out]; });
  };
  return QuantifySoftPairs(space, options.pairs,
                           [&](std::size_t a, std::size_t b) {
                             return in_not(m1, a, b) && in_not(m2, b, a);
                           });
}

Verdict pairwise_soft_t2(const SoftBitopSpace& space,
                         const SeparationOptions& options) {
  const auto m1 = Memberships(space.elements(), space.tau1());
  const auto m2 = Memberships(space.elements(), space.tau2());
  std::vector<std::pair<std::size_t, std::size_t>> disjoint;
  for (std::size_t i = 0; i < space.tau1().size(); ++i) {
    for (std::size_t j = 0; j < space.tau2().size(); ++j) {
      if (m1[i].none() || m2[j].none()) continue;
      if (Disjoint(space.tau1().opens()[i], space.tau2().opens()[j],
                   options.disjointness)) {
        disjoint.emplace_back(i, j);
      }
    }
  }
  return QuantifySoftPairs(space, options.pairs,
                           [&](std::size_t a, std::size_t b) {
                             return std::any_of(
                                 disjoint.begin(), disjoint.end(),
                                 [&](const auto& hk) {
                                   return m1[hk.first][a] && m2[hk.second][b];
                                 });
                           });
}

BitopPair induced_bitop(const SoftBitopSpace& space) {
  return BitopPair(induced_topology(space.tau1(), space.elements()).sets(),
                   induced_topology(space.tau2(), space.elements()).sets());
}

BitopPair component_bitop(const SoftBitopSpace& space, std::size_t t) {
  return BitopPair(component_topology(space.tau1(), t).family(),
                   component_topology(space.tau2(), t).family());
}

Verdict is_pairwise_soft_cover(const SoftBitopSpace& space,
                               const SoftCover& cover) {
  if (!soft_subset(cover.target, space.carrier())) {
    throw InputError("cover target is not a soft subset of F");
  }
  for (std::size_t i = 0; i < cover.members.size(); ++i) {
    if (!OpenOnSide(space, cover.members[i].set, cover.members[i].side)) {
      return {false, NonOpenMember{i}};
    }
  }
  for (std::size_t t = 0; t < space.param_count(); ++t) {
    FinSet u(space.carrier().universe_size());
    for (const CoverMember& m : cover.members) u = u | m.set.section(t);
    const FinSet missing = cover.target.section(t) - u;
    if (!missing.empty()) return {false, UncoveredPoint{t, missing.elements().front()}};
  }
  return {true, std::monostate{}};
}

std::vector<std::size_t> minimal_soft_subcover(std::span<const SoftSet> members,
                                               const SoftSet& target) {
  std::vector<std::size_t> all(members.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  if (!SoftCovers(members, all, target)) {
    throw NotACoverError("family does not soft-cover the target");
  }
  std::vector<std::size_t> best;
  for (std::size_t k = 0; k <= members.size(); ++k) {
    const bool found = internal::ForEachCombination(
        members.size(), k, [&](const std::vector<std::size_t>& pick) {
          if (!SoftCovers(members, pick, target)) return false;
          best = pick;
          return true;
        });
    if (found) return best;
  }
  return all;
}

SubcoverResult find_finite_subcover(const SoftBitopSpace& space,
                                    const SoftCover& cover) {
  const Verdict v = is_pairwise_soft_cover(space, cover);
  if (!v.holds) throw NotACoverError("not a pairwise soft open cover");

  std::vector<SoftSet> sets;
  for (const CoverMember& m : cover.members) sets.push_back(m.set);

  // For each parameter, a finite subfamily covering target(t); their union
  // covers the target because A is finite.
  SubcoverResult result;
  for (std::size_t t = 0; t < space.param_count(); ++t) {
    std::vector<FinSet> sections;
    for (const SoftSet& s : sets) sections.push_back(s.section(t));
    for (std::size_t i : minimal_subcover(sections, cover.target.section(t))) {
      result.per_parameter.push_back(i);
    }
  }
  std::sort(result.per_parameter.begin(), result.per_parameter.end());
  result.per_parameter.erase(
      std::unique(result.per_parameter.begin(), result.per_parameter.end()),
      result.per_parameter.end());
  if (!SoftCovers(sets, result.per_parameter, cover.target)) {
    throw std::logic_error("union of per-parameter subcovers is not a cover");
  }

  result.minimal = result.per_parameter;
  for (std::size_t k = 0; k < result.per_parameter.size(); ++k) {
    const bool found = internal::ForEachCombination(
        sets.size(), k, [&](const std::vector<std::size_t>& pick) {
          if (!SoftCovers(sets, pick, cover.target)) return false;
          result.minimal = pick;
          return true;
        });
    if (found) break;
  }
  return result;
}

Cylinder cylinder(const SoftBitopSpace& space, std::size_t t0, const FinSet& v,
                  Side side) {
  if (t0 >= space.param_count()) throw InputError("parameter out of range");
  const bool open1 = component_topology(space.tau1(), t0).contains(v);
  const bool open2 = component_topology(space.tau2(), t0).contains(v);
  const bool open = side == Side::kFirst    ? open1
                    : side == Side::kSecond ? open2
                                            : open1 && open2;
  if (!open) {
    throw InputError("cylinder base is not open in the component topology");
  }
  std::vector<FinSet> sections(space.carrier().sections().begin(),
                               space.carrier().sections().end());
  sections[t0] = v;
  Cylinder c{SoftSet(std::move(sections)), false};
  c.in_topology = OpenOnSide(space, c.set, side);
  const bool canonical =
      (side != Side::kSecond ? is_canonical(space.tau1()) : true) &&
      (side != Side::kFirst ? is_canonical(space.tau2()) : true);
  if (canonical && !c.in_topology) {
    throw std::logic_error("cylinder missing from a canonical soft topology");
  }
  return c;
}

}  // namespace softbitop
