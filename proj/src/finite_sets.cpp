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

#include "softbitop/finite_sets.hpp"

#include <algorithm>
#include <bit>
#include <string>
#include <unordered_set>

#include "combinations.hpp"
#include "softbitop/error.hpp"

namespace softbitop {
namespace {

std::uint64_t FullMask(std::size_t n) {
  return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

void RequireSameUniverse(const FinSet& a, const FinSet& b) {
  if (a.universe_size() != b.universe_size()) {
    throw InputError("set universes differ: " +
                     std::to_string(a.universe_size()) + " vs " +
                     std::to_string(b.universe_size()));
  }
}

// Closes `sets` (deduplicated) under a binary operation, in place.
template <typename Op>
void CloseUnder(std::vector<std::uint64_t>& sets, Op op) {
  std::unordered_set<std::uint64_t> seen(sets.begin(), sets.end());
  for (std::size_t i = 0; i < sets.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      const std::uint64_t c = op(sets[i], sets[j]);
      if (seen.insert(c).second) {
        if (sets.size() >= kMaxGeneratedOpens) {
          throw CapacityError("generated topology exceeds " +
                              std::to_string(kMaxGeneratedOpens) + " opens");
        }
        sets.push_back(c);
      }
    }
  }
}

}  // namespace

FinSet::FinSet(std::size_t universe_size, std::uint64_t members)
    : universe_size_(universe_size), bits_(members) {
  if (universe_size == 0 || universe_size > kMaxUniverse) {
    throw InputError("universe size must be in [1, 64], got " +
                     std::to_string(universe_size));
  }
  if ((members & ~FullMask(universe_size)) != 0) {
    throw InputError("set has members outside a universe of size " +
                     std::to_string(universe_size));
  }
}

FinSet FinSet::Full(std::size_t universe_size) {
  return FinSet(universe_size, FullMask(universe_size));
}

FinSet FinSet::Of(std::size_t universe_size,
                  std::initializer_list<std::size_t> elements) {
  return Of(universe_size,
            std::span<const std::size_t>(elements.begin(), elements.size()));
}

FinSet FinSet::Of(std::size_t universe_size,
                  std::span<const std::size_t> elements) {
  FinSet s(universe_size);
  for (std::size_t x : elements) s.insert(x);
  return s;
}

std::size_t FinSet::size() const {
  return static_cast<std::size_t>(std::popcount(bits_));
}

bool FinSet::subset_of(const FinSet& other) const {
  RequireSameUniverse(*this, other);
  return (bits_ & ~other.bits_) == 0;
}

bool FinSet::intersects(const FinSet& other) const {
  RequireSameUniverse(*this, other);
  return (bits_ & other.bits_) != 0;
}

std::vector<std::size_t> FinSet::elements() const {
  std::vector<std::size_t> out;
  for (std::uint64_t b = bits_; b != 0; b &= b - 1) {
    out.push_back(static_cast<std::size_t>(std::countr_zero(b)));
  }
  return out;
}

FinSet& FinSet::insert(std::size_t x) {
  if (x >= universe_size_) {
    throw InputError("element " + std::to_string(x) +
                     " outside a universe of size " +
                     std::to_string(universe_size_));
  }
  bits_ |= std::uint64_t{1} << x;
  return *this;
}

FinSet operator|(const FinSet& a, const FinSet& b) {
  RequireSameUniverse(a, b);
  return FinSet(a.universe_size_, a.bits_ | b.bits_);
}

FinSet operator&(const FinSet& a, const FinSet& b) {
  RequireSameUniverse(a, b);
  return FinSet(a.universe_size_, a.bits_ & b.bits_);
}

FinSet operator-(const FinSet& a, const FinSet& b) {
  RequireSameUniverse(a, b);
  return FinSet(a.universe_size_, a.bits_ & ~b.bits_);
}

SetFamily::SetFamily(FinSet carrier, std::vector<FinSet> members)
    : carrier_(carrier), members_(std::move(members)) {
  for (const FinSet& m : members_) {
    if (!m.subset_of(carrier_)) {
      throw InputError("family member is not a subset of the carrier");
    }
  }
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()),
                 members_.end());
}

bool SetFamily::contains(const FinSet& s) const {
  return std::binary_search(members_.begin(), members_.end(), s);
}

bool SetFamily::subset_of(const SetFamily& other) const {
  return std::includes(other.members_.begin(), other.members_.end(),
                       members_.begin(), members_.end());
}

std::strong_ordering operator<=>(const SetFamily& a, const SetFamily& b) {
  if (auto c = a.carrier_ <=> b.carrier_; c != 0) return c;
  return std::lexicographical_compare_three_way(
      a.members_.begin(), a.members_.end(), b.members_.begin(),
      b.members_.end());
}

bool is_topology(std::span<const FinSet> opens, const FinSet& carrier) {
  std::unordered_set<std::uint64_t> masks;
  for (const FinSet& o : opens) {
    RequireSameUniverse(o, carrier);
    if (!o.subset_of(carrier)) return false;
    masks.insert(o.mask());
  }
  if (!masks.contains(0) || !masks.contains(carrier.mask())) return false;
  for (std::uint64_t a : masks) {
    for (std::uint64_t b : masks) {
      if (!masks.contains(a | b) || !masks.contains(a & b)) return false;
    }
  }
  return true;
}

bool is_topology(std::span<const FinSet> opens, std::size_t universe_size) {
  return is_topology(opens, FinSet::Full(universe_size));
}

bool is_topology(const SetFamily& family) {
  return is_topology(family.members(), family.carrier());
}

ClassicalTopology::ClassicalTopology(SetFamily family)
    : family_(std::move(family)) {
  if (!is_topology(family_)) {
    throw InputError("family is not a topology on its carrier");
  }
}

ClassicalTopology ClassicalTopology::Discrete(const FinSet& carrier) {
  std::vector<FinSet> opens;
  // Enumerate submasks of the carrier.
  const std::uint64_t c = carrier.mask();
  std::uint64_t s = 0;
  do {
    opens.emplace_back(carrier.universe_size(), s);
    if (opens.size() > kMaxGeneratedOpens) {
      throw CapacityError("discrete topology too large");
    }
    s = (s - c) & c;
  } while (s != 0);
  return ClassicalTopology(SetFamily(carrier, std::move(opens)), Trusted{});
}

ClassicalTopology ClassicalTopology::Indiscrete(const FinSet& carrier) {
  return ClassicalTopology(
      SetFamily(carrier, {FinSet(carrier.universe_size()), carrier}), Trusted{});
}

ClassicalTopology generate_topology(std::span<const FinSet> subbase,
                                    const FinSet& carrier) {
  std::vector<std::uint64_t> sets{carrier.mask()};
  for (const FinSet& s : subbase) {
    RequireSameUniverse(s, carrier);
    if (!s.subset_of(carrier)) {
      throw InputError("subbase member is not a subset of the carrier");
    }
    sets.push_back(s.mask());
  }
  std::sort(sets.begin(), sets.end());
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  CloseUnder(sets, [](std::uint64_t a, std::uint64_t b) { return a & b; });
  if (std::find(sets.begin(), sets.end(), 0) == sets.end()) sets.push_back(0);
  CloseUnder(sets, [](std::uint64_t a, std::uint64_t b) { return a | b; });

  std::vector<FinSet> opens;
  opens.reserve(sets.size());
  for (std::uint64_t m : sets) opens.emplace_back(carrier.universe_size(), m);
  return ClassicalTopology(SetFamily(carrier, std::move(opens)),
                           ClassicalTopology::Trusted{});
}

ClassicalTopology generate_topology(std::span<const FinSet> subbase,
                                    std::size_t universe_size) {
  return generate_topology(subbase, FinSet::Full(universe_size));
}

// Finite topologies correspond one-to-one with preorders: the opens are
// exactly the up-closed sets. Enumerate preorders instead of set families.
std::vector<ClassicalTopology> enumerate_topologies(std::size_t n) {
  if (n == 0) throw InputError("enumerate_topologies needs n >= 1");
  if (n > kMaxEnumeratedTopologyPoints) {
    throw CapacityError("enumerate_topologies is limited to n <= " +
                        std::to_string(kMaxEnumeratedTopologyPoints));
  }
  std::vector<std::pair<std::size_t, std::size_t>> off_diagonal;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j) off_diagonal.emplace_back(i, j);
    }
  }
  const FinSet carrier = FinSet::Full(n);
  std::vector<ClassicalTopology> out;
  for (std::uint64_t r = 0; r < (std::uint64_t{1} << off_diagonal.size());
       ++r) {
    // up[i] = {j : i <= j}
    std::vector<std::uint64_t> up(n);
    for (std::size_t i = 0; i < n; ++i) up[i] = std::uint64_t{1} << i;
    for (std::size_t k = 0; k < off_diagonal.size(); ++k) {
      if ((r >> k) & 1U) {
        up[off_diagonal[k].first] |= std::uint64_t{1} << off_diagonal[k].second;
      }
    }
    bool transitive = true;
    for (std::size_t i = 0; i < n && transitive; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (((up[i] >> j) & 1U) && (up[j] & ~up[i]) != 0) {
          transitive = false;
          break;
        }
      }
    }
    if (!transitive) continue;
    std::vector<FinSet> opens;
    for (std::uint64_t s = 0; s <= carrier.mask(); ++s) {
      bool up_closed = true;
      for (std::size_t i = 0; i < n; ++i) {
        if (((s >> i) & 1U) && (up[i] & ~s) != 0) {
          up_closed = false;
          break;
        }
      }
      if (up_closed) opens.emplace_back(n, s);
    }
    out.push_back(ClassicalTopology(SetFamily(carrier, std::move(opens)),
                                    ClassicalTopology::Trusted{}));
  }
  std::sort(out.begin(), out.end());
  return out;
}

ClassicalTopology transport(const ClassicalTopology& topology,
                            const FinSet& carrier) {
  const std::vector<std::size_t> points = carrier.elements();
  if (topology.universe_size() != points.size() ||
      topology.carrier().size() != points.size()) {
    throw InputError("transport needs a topology on exactly |carrier| points");
  }
  std::vector<FinSet> opens;
  for (const FinSet& o : topology.opens()) {
    FinSet image(carrier.universe_size());
    for (std::size_t i : o.elements()) image.insert(points[i]);
    opens.push_back(image);
  }
  return ClassicalTopology(SetFamily(carrier, std::move(opens)),
                           ClassicalTopology::Trusted{});
}

BitopPair::BitopPair(SetFamily first_family, SetFamily second_family)
    : first(std::move(first_family)), second(std::move(second_family)) {
  if (first.carrier() != second.carrier()) {
    throw InputError("bitopological pair over different carriers");
  }
}

SeparationVerdict pairwise_t0(const BitopPair& b) {
  const std::vector<std::size_t> points = b.carrier().elements();
  auto separates = [](const FinSet& o, std::size_t x, std::size_t y) {
    return o.contains(x) != o.contains(y);
  };
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      const std::size_t x = points[i];
      const std::size_t y = points[j];
      const bool ok =
          std::any_of(b.first.members().begin(), b.first.members().end(),
                      [&](const FinSet& o) { return separates(o, x, y); }) ||
          std::any_of(b.second.members().begin(), b.second.members().end(),
                      [&](const FinSet& o) { return separates(o, x, y); });
      if (!ok) return {false, PointPair{x, y}};
    }
  }
  return {true, std::nullopt};
}

namespace {

template <typename OrderedOk>
SeparationVerdict QuantifyPairs(const BitopPair& b, PairReading reading,
                                OrderedOk ordered_ok) {
  const std::vector<std::size_t> points = b.carrier().elements();
  for (std::size_t x : points) {
    for (std::size_t y : points) {
      if (x == y) continue;
      if (reading == PairReading::kUnordered) {
        if (x > y) continue;
        if (!ordered_ok(x, y) && !ordered_ok(y, x)) {
          return {false, PointPair{x, y}};
        }
      } else if (!ordered_ok(x, y)) {
        return {false, PointPair{x, y}};
      }
    }
  }
  return {true, std::nullopt};
}

}  // namespace

SeparationVerdict pairwise_t1(const BitopPair& b, PairReading reading) {
  auto in_not = [](std::span<const FinSet> fam, std::size_t in,
                   std::size_t out) {
    return std::any_of(fam.begin(), fam.end(), [&](const FinSet& o) {
      return o.contains(in) && !o.contains(out);
    });
  };
  return QuantifyPairs(b, reading, [&](std::size_t x, std::size_t y) {
    return in_not(b.first.members(), x, y) && in_not(b.second.members(), y, x);
  });
}

SeparationVerdict pairwise_t2(const BitopPair& b, PairReading reading) {
  return QuantifyPairs(b, reading, [&](std::size_t x, std::size_t y) {
    for (const FinSet& h : b.first.members()) {
      if (!h.contains(x) || h.contains(y)) continue;
      for (const FinSet& k : b.second.members()) {
        if (k.contains(y) && !h.intersects(k)) return true;
      }
    }
    return false;
  });
}

std::vector<std::size_t> minimal_subcover(std::span<const FinSet> cover,
                                          const FinSet& target) {
  FinSet all(target.universe_size());
  for (const FinSet& c : cover) all = all | c;
  if (!target.subset_of(all)) {
    throw NotACoverError("family does not cover the target");
  }
  if (target.empty()) return {};
  std::vector<std::size_t> best;
  for (std::size_t k = 1; k <= cover.size(); ++k) {
    const bool found = internal::ForEachCombination(
        cover.size(), k, [&](const std::vector<std::size_t>& pick) {
          std::uint64_t u = 0;
          for (std::size_t i : pick) u |= cover[i].mask();
          if ((target.mask() & ~u) != 0) return false;
          best = pick;
          return true;
        });
    if (found) return best;
  }
  return {};  // unreachable: the full cover works
}

}  // namespace softbitop
