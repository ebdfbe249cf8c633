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


// Soft sets over the parameter set of non-negative integers that agree with
// a default section at all but finitely many labels, cover families built
// from one indexed template plus explicit members, and an exact decision
// procedure for the existence of a finite subcover.

#ifndef SOFTBITOP_SYMBOLIC_COMPACT_HPP_
#define SOFTBITOP_SYMBOLIC_COMPACT_HPP_

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "softbitop/finite_sets.hpp"
#include "softbitop/soft_core.hpp"

namespace softbitop {

using Label = std::uint64_t;

/// Upper bound on explicit members plus special labels searched by
/// decide_finite_subcover.
inline constexpr std::size_t kMaxSymbolicSearch = 24;

class CofiniteSoftSet {
 public:
  /// Exceptions equal to the default are dropped. Throws InputError on
  /// mismatched universes.
  CofiniteSoftSet(FinSet default_section, std::map<Label, FinSet> exceptions = {});

  std::size_t universe_size() const { return default_.universe_size(); }
  const FinSet& default_section() const { return default_; }
  const std::map<Label, FinSet>& exceptions() const { return exceptions_; }

  friend bool operator==(const CofiniteSoftSet&, const CofiniteSoftSet&) = default;

 private:
  FinSet default_;
  std::map<Label, FinSet> exceptions_;
};

FinSet cf_section(const CofiniteSoftSet& s, Label t);

/// The family {S_t : t >= 0} with S_t(t) = at_index and S_t(s) = fallback
/// for s != t.
struct IndexedTemplate {
  FinSet at_index;
  FinSet fallback;
  friend bool operator==(const IndexedTemplate&, const IndexedTemplate&) = default;
};

/// The cofinite soft set S_t of a template.
CofiniteSoftSet template_member(const IndexedTemplate& tmpl, Label t);

class TemplateFamily {
 public:
  /// Throws InputError if sections disagree on the universe size.
  TemplateFamily(std::size_t universe_size, std::optional<IndexedTemplate> tmpl,
                 std::vector<CofiniteSoftSet> explicit_members);

  std::size_t universe_size() const { return universe_size_; }
  const std::optional<IndexedTemplate>& indexed_template() const { return tmpl_; }
  const std::vector<CofiniteSoftSet>& explicit_members() const { return explicit_; }

  friend bool operator==(const TemplateFamily&, const TemplateFamily&) = default;

 private:
  std::size_t universe_size_;
  std::optional<IndexedTemplate> tmpl_;
  std::vector<CofiniteSoftSet> explicit_;
};

/// Exception labels of the target and of the explicit members, sorted.
std::vector<Label> special_labels(const TemplateFamily& family,
                                  const CofiniteSoftSet& target);

/// A label larger than every special label; all such labels behave alike.
Label generic_label(const TemplateFamily& family, const CofiniteSoftSet& target);

struct SymbolicVerdict {
  bool holds;
  /// On failure: the least label whose union misses part of the target.
  std::optional<Label> label;
  FinSet union_section;   // union of member sections at `label`
  FinSet target_section;  // target section at `label`
};

/// Whether the whole (infinite) family soft-covers the target.
SymbolicVerdict cf_is_cover(const TemplateFamily& family, const CofiniteSoftSet& target);

struct SubfamilyChoice {
  std::vector<std::size_t> explicit_members;  // indices, increasing
  std::vector<Label> template_indices;        // increasing
  std::size_t size() const { return explicit_members.size() + template_indices.size(); }
  friend bool operator==(const SubfamilyChoice&, const SubfamilyChoice&) = default;
};

/// Names a label outside every finite index set that a subfamily can use,
/// with the largest section union any finite subfamily reaches there.
struct GenericCertificate {
  Label label;
  FinSet union_section;
  FinSet target_section;
};

struct FiniteSubcoverDecision {
  bool exists;
  std::optional<SubfamilyChoice> witness;         // minimum size when exists
  std::optional<GenericCertificate> certificate;  // when !exists
};

/// Decides whether a finite subfamily covers the target. The witness has
/// minimum cardinality; ties go to fewer fresh template indices, then to
/// the lexicographically least choice. Throws NotACoverError unless
/// cf_is_cover holds and CapacityError above kMaxSymbolicSearch.
FiniteSubcoverDecision decide_finite_subcover(const TemplateFamily& family,
                                              const CofiniteSoftSet& target);

/// Union of the chosen members' sections at label s.
FinSet choice_section(const TemplateFamily& family, const SubfamilyChoice& choice, Label s);

/// Restriction to A = {0, ..., m-1}. Throws InputError if some exception
/// label is >= m.
SoftSet truncate(const CofiniteSoftSet& s, std::size_t m);

struct TruncatedFamily {
  std::vector<SoftSet> members;  // template members S_0..S_{m-1}, then explicit ones
  std::size_t template_count;    // m if the family has a template, else 0
};

TruncatedFamily truncate(const TemplateFamily& family, std::size_t m);

}  // namespace softbitop

#endif  // SOFTBITOP_SYMBOLIC_COMPACT_HPP_
