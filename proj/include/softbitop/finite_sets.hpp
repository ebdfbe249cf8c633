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

// Bitmask subsets of a small enumerated universe, finite families of them,
// classical topologies and bitopologies over a carrier, and the pairwise
// separation axioms of a classical bitopological space.

#ifndef SOFTBITOP_FINITE_SETS_HPP_
#define SOFTBITOP_FINITE_SETS_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace softbitop {

inline constexpr std::size_t kMaxUniverse = 64;
inline constexpr std::size_t kMaxEnumeratedTopologyPoints = 4;
inline constexpr std::size_t kMaxGeneratedOpens = std::size_t{1} << 20;

/// A subset of {0, ..., universe_size - 1}, stored as a 64-bit mask.
class FinSet {
 public:
  /// Throws InputError if universe_size is 0 or exceeds kMaxUniverse, or if
  /// `members` has a bit at or above universe_size.
  explicit FinSet(std::size_t universe_size, std::uint64_t members = 0);

  static FinSet Full(std::size_t universe_size);
  static FinSet Of(std::size_t universe_size,
                   std::initializer_list<std::size_t> elements);
  static FinSet Of(std::size_t universe_size,
                   std::span<const std::size_t> elements);

  std::size_t universe_size() const { return universe_size_; }
  std::uint64_t mask() const { return bits_; }

  bool contains(std::size_t x) const {
    return x < universe_size_ && ((bits_ >> x) & 1U) != 0;
  }
  std::size_t size() const;
  bool empty() const { return bits_ == 0; }
  bool subset_of(const FinSet& other) const;
  bool intersects(const FinSet& other) const;
  /// Elements in increasing order.
  std::vector<std::size_t> elements() const;

  FinSet& insert(std::size_t x);

  friend FinSet operator|(const FinSet& a, const FinSet& b);
  friend FinSet operator&(const FinSet& a, const FinSet& b);
  friend FinSet operator-(const FinSet& a, const FinSet& b);

  friend bool operator==(const FinSet&, const FinSet&) = default;
  /// Universe size first, then mask value.
  friend std::strong_ordering operator<=>(const FinSet&,
                                          const FinSet&) = default;

 private:
  std::size_t universe_size_;
  std::uint64_t bits_;
};

/// A deduplicated family of subsets of a carrier, sorted by mask value.
/// No closure properties are assumed.
class SetFamily {
 public:
  /// Throws InputError if a member is over a different universe or is not a
  /// subset of the carrier.
  SetFamily(FinSet carrier, std::vector<FinSet> members);

  const FinSet& carrier() const { return carrier_; }
  std::size_t universe_size() const { return carrier_.universe_size(); }
  std::span<const FinSet> members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool contains(const FinSet& s) const;
  bool subset_of(const SetFamily& other) const;

  friend bool operator==(const SetFamily&, const SetFamily&) = default;
  friend std::strong_ordering operator<=>(const SetFamily& a,
                                          const SetFamily& b);

 private:
  FinSet carrier_;
  std::vector<FinSet> members_;
};

/// True iff the family contains the empty set and the carrier and is closed
/// under binary union and binary intersection. Binary closure is exact for
/// finite families. Throws InputError on mismatched universes.
bool is_topology(std::span<const FinSet> opens, const FinSet& carrier);
bool is_topology(std::span<const FinSet> opens, std::size_t universe_size);
bool is_topology(const SetFamily& family);

/// A SetFamily that satisfies the topology axioms over its carrier.
class ClassicalTopology {
 public:
  /// Throws InputError unless is_topology(family).
  explicit ClassicalTopology(SetFamily family);

  static ClassicalTopology Discrete(const FinSet& carrier);
  static ClassicalTopology Indiscrete(const FinSet& carrier);

  const SetFamily& family() const { return family_; }
  const FinSet& carrier() const { return family_.carrier(); }
  std::size_t universe_size() const { return family_.universe_size(); }
  std::span<const FinSet> opens() const { return family_.members(); }
  std::size_t size() const { return family_.size(); }
  bool contains(const FinSet& s) const { return family_.contains(s); }

  friend bool operator==(const ClassicalTopology&,
                         const ClassicalTopology&) = default;
  friend std::strong_ordering operator<=>(const ClassicalTopology& a,
                                          const ClassicalTopology& b) {
    return a.family_ <=> b.family_;
  }

 private:
  struct Trusted {};
  // For constructions that produce a topology by construction.
  ClassicalTopology(SetFamily family, Trusted) : family_(std::move(family)) {}

  friend ClassicalTopology generate_topology(std::span<const FinSet>,
                                             const FinSet&);
  friend std::vector<ClassicalTopology> enumerate_topologies(std::size_t);
  friend ClassicalTopology transport(const ClassicalTopology&, const FinSet&);

  SetFamily family_;
};

/// Smallest topology on `carrier` containing `subbase`: finite intersections
/// (the empty intersection being the carrier), then unions.
ClassicalTopology generate_topology(std::span<const FinSet> subbase,
                                    const FinSet& carrier);
ClassicalTopology generate_topology(std::span<const FinSet> subbase,
                                    std::size_t universe_size);

/// All labeled topologies on {0, ..., n-1}, sorted by their open families.
/// Throws CapacityError for n > kMaxEnumeratedTopologyPoints.
std::vector<ClassicalTopology> enumerate_topologies(std::size_t n);

/// Relabels a topology on {0, ..., k-1} onto the k points of `carrier`
/// (i-th point to the i-th smallest element).
ClassicalTopology transport(const ClassicalTopology& topology,
                            const FinSet& carrier);

/// Two families over a common carrier. The families are usually topologies,
/// but induced families on soft elements need not be, so the pair does not
/// require it.
struct BitopPair {
  BitopPair(SetFamily first, SetFamily second);

  const FinSet& carrier() const { return first.carrier(); }

  SetFamily first;
  SetFamily second;

  friend bool operator==(const BitopPair&, const BitopPair&) = default;
};

/// How "for every a, b with a != b" is quantified in T1/T2.
enum class PairReading {
  kOrdered,    // every ordered pair, roles of the two families fixed
  kUnordered,  // each unordered pair, either orientation suffices
};

struct PointPair {
  std::size_t x;
  std::size_t y;
  friend bool operator==(const PointPair&, const PointPair&) = default;
};

struct SeparationVerdict {
  bool holds;
  std::optional<PointPair> witness;  // least failing pair when !holds
};

SeparationVerdict pairwise_t0(const BitopPair& b);
SeparationVerdict pairwise_t1(const BitopPair& b,
                              PairReading reading = PairReading::kOrdered);
SeparationVerdict pairwise_t2(const BitopPair& b,
                              PairReading reading = PairReading::kOrdered);

/// Indices of a minimum-cardinality subfamily of `cover` whose union
/// contains `target`; among those, the lexicographically least index set.
/// Throws NotACoverError if the whole cover misses part of the target.
std::vector<std::size_t> minimal_subcover(std::span<const FinSet> cover,
                                          const FinSet& target);

}  // namespace softbitop

#endif  // SOFTBITOP_FINITE_SETS_HPP_
