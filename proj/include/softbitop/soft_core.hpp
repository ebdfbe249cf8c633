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

// Soft sets over a finite parameter set, the list SE(F) of soft elements,
// subsets of SE(F) and their sections.

#ifndef SOFTBITOP_SOFT_CORE_HPP_
#define SOFTBITOP_SOFT_CORE_HPP_

#include <compare>
#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "softbitop/finite_sets.hpp"

namespace softbitop {

inline constexpr std::size_t kMaxSoftElements = std::size_t{1} << 20;

/// A map from parameters {0, ..., param_count-1} to subsets of a common
/// universe. Compared lexicographically by section masks, parameter 0 first.
class SoftSet {
 public:
  /// Throws InputError if `sections` is empty or the sections disagree on
  /// the universe size.
  explicit SoftSet(std::vector<FinSet> sections);

  /// Phi: every section empty.
  static SoftSet Null(std::size_t param_count, std::size_t universe_size);
  static SoftSet Uniform(std::size_t param_count, const FinSet& section);

  std::size_t param_count() const { return sections_.size(); }
  std::size_t universe_size() const { return sections_.front().universe_size(); }
  const FinSet& section(std::size_t t) const { return sections_.at(t); }
  std::span<const FinSet> sections() const { return sections_; }

  bool is_null() const;
  bool has_empty_section() const;

  friend bool operator==(const SoftSet&, const SoftSet&) = default;
  friend std::strong_ordering operator<=>(const SoftSet& a, const SoftSet& b);

 private:
  std::vector<FinSet> sections_;
};

// Parameterwise operations. Shape mismatches throw InputError.
bool soft_subset(const SoftSet& h, const SoftSet& f);
SoftSet soft_union(const SoftSet& f, const SoftSet& h);
SoftSet soft_intersection(const SoftSet& f, const SoftSet& h);
bool soft_equal(const SoftSet& f, const SoftSet& h);

/// A selection a with a(t) in F(t) for every parameter t.
struct SoftElement {
  std::vector<std::size_t> values;

  std::size_t operator[](std::size_t t) const { return values[t]; }
  friend bool operator==(const SoftElement&, const SoftElement&) = default;
  friend auto operator<=>(const SoftElement&, const SoftElement&) = default;
};

/// a in_s H: a(t) in H(t) for all t.
bool soft_member(const SoftElement& a, const SoftSet& h);

/// The cartesian product of the sections of F, lexicographic with parameter
/// 0 most significant. Throws NoSoftElementsError if a section is empty and
/// CapacityError above kMaxSoftElements.
std::vector<SoftElement> enumerate_soft_elements(const SoftSet& f);

/// SE(F) materialized once, with index lookup. Indices follow the order of
/// enumerate_soft_elements.
class SoftElementSpace {
 public:
  explicit SoftElementSpace(SoftSet carrier);

  const SoftSet& carrier() const { return carrier_; }
  std::size_t size() const { return elements_.size(); }
  std::size_t param_count() const { return carrier_.param_count(); }
  const SoftElement& operator[](std::size_t i) const { return elements_[i]; }
  std::span<const SoftElement> elements() const { return elements_; }
  std::optional<std::size_t> index_of(const SoftElement& a) const;

 private:
  SoftSet carrier_;
  std::vector<SoftElement> elements_;
  // rank_[t][x] = position of x within F(t), or npos.
  std::vector<std::vector<std::size_t>> rank_;
  std::vector<std::size_t> stride_;
};

using SoftElementsPtr = std::shared_ptr<const SoftElementSpace>;

SoftElementsPtr make_soft_elements(const SoftSet& f);

/// A subset T of SE(F), as a bitmask over SE-indices.
class SESubset {
 public:
  /// The empty subset.
  explicit SESubset(SoftElementsPtr ambient);
  SESubset(SoftElementsPtr ambient, boost::dynamic_bitset<> members);

  static SESubset Full(SoftElementsPtr ambient);
  static SESubset Of(SoftElementsPtr ambient,
                     std::initializer_list<std::size_t> indices);
  /// Throws InputError if some element is not in the ambient SE(F).
  static SESubset OfElements(SoftElementsPtr ambient,
                             std::span<const SoftElement> elements);

  const SoftElementsPtr& ambient() const { return ambient_; }
  const boost::dynamic_bitset<>& members() const { return members_; }
  bool contains(std::size_t i) const { return members_.test(i); }
  std::size_t size() const { return members_.count(); }
  bool empty() const { return members_.none(); }
  std::vector<std::size_t> indices() const;
  bool subset_of(const SESubset& other) const;

  SESubset& insert(std::size_t i);

  friend SESubset operator|(const SESubset& a, const SESubset& b);
  friend SESubset operator&(const SESubset& a, const SESubset& b);
  friend bool operator==(const SESubset& a, const SESubset& b);

 private:
  SoftElementsPtr ambient_;
  boost::dynamic_bitset<> members_;
};

/// T(t) = {a(t) : a in T}.
FinSet section(const SESubset& t, std::size_t param);

/// SE(H) as a subset of SE(F): the soft elements a of F with a(t) in H(t)
/// for all t. Empty when H has an empty section. Throws InputError unless
/// H is a soft subset of F.
SESubset se_of_softset(const SoftElementsPtr& ambient, const SoftSet& h);

struct Representability {
  bool representable;
  /// H(t) := K(t); the only soft set that could satisfy SE(H) = K.
  SoftSet candidate;
  /// Least element of SE(candidate) \ K when not representable.
  std::optional<SoftElement> witness;
};

/// Decides whether K = SE(H) for some soft subset H of F. Throws
/// UndefinedRepresentationError for empty K.
Representability is_se_representable(const SESubset& k);

}  // namespace softbitop

#endif  // SOFTBITOP_SOFT_CORE_HPP_
