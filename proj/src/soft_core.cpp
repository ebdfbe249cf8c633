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

#include "softbitop/soft_core.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "softbitop/error.hpp"

namespace softbitop {
namespace {

constexpr std::size_t kNpos = std::numeric_limits<std::size_t>::max();

void RequireSameShape(const SoftSet& a, const SoftSet& b) {
  if (a.param_count() != b.param_count() ||
      a.universe_size() != b.universe_size()) {
    throw InputError("soft sets differ in parameter count or universe");
  }
}

// Calls fn(element) for every selection from `sections`, lexicographically.
// Every section must be nonempty.
template <typename Fn>
void ForEachSelection(std::span<const FinSet> sections, Fn fn) {
  std::vector<std::vector<std::size_t>> choices;
  choices.reserve(sections.size());
  for (const FinSet& s : sections) choices.push_back(s.elements());
  std::vector<std::size_t> pos(sections.size(), 0);
  SoftElement a;
  a.values.resize(sections.size());
  while (true) {
    for (std::size_t t = 0; t < sections.size(); ++t) {
      a.values[t] = choices[t][pos[t]];
    }
    if (!fn(a)) return;
    std::size_t t = sections.size();
    while (t > 0) {
      --t;
      if (++pos[t] < choices[t].size()) break;
      pos[t] = 0;
      if (t == 0) return;
    }
  }
}

std::size_t ProductSize(std::span<const FinSet> sections) {
  std::size_t n = 1;
  for (const FinSet& s : sections) {
    n *= s.size();
    if (n > kMaxSoftElements) {
      throw CapacityError("SE(F) exceeds " + std::to_string(kMaxSoftElements) +
                          " soft elements");
    }
  }
  return n;
}

}  // namespace

SoftSet::SoftSet(std::vector<FinSet> sections) : sections_(std::move(sections)) {
  if (sections_.empty()) throw InputError("a soft set needs at least one parameter");
  for (const FinSet& s : sections_) {
    if (s.universe_size() != sections_.front().universe_size()) {
      throw InputError("soft set sections over different universes");
    }
  }
}

SoftSet SoftSet::Null(std::size_t param_count, std::size_t universe_size) {
  return SoftSet(std::vector<FinSet>(param_count, FinSet(universe_size)));
}

SoftSet SoftSet::Uniform(std::size_t param_count, const FinSet& section) {
  return SoftSet(std::vector<FinSet>(param_count, section));
}

bool SoftSet::is_null() const {
  return std::all_of(sections_.begin(), sections_.end(),
                     [](const FinSet& s) { return s.empty(); });
}

bool SoftSet::has_empty_section() const {
  return std::any_of(sections_.begin(), sections_.end(),
                     [](const FinSet& s) { return s.empty(); });
}

std::strong_ordering operator<=>(const SoftSet& a, const SoftSet& b) {
  return std::lexicographical_compare_three_way(
      a.sections_.begin(), a.sections_.end(), b.sections_.begin(),
      b.sections_.end());
}

bool soft_subset(const SoftSet& h, const SoftSet& f) {
  RequireSameShape(h, f);
  for (std::size_t t = 0; t < h.param_count(); ++t) {
    if (!h.section(t).subset_of(f.section(t))) return false;
  }
  return true;
}

SoftSet soft_union(const SoftSet& f, const SoftSet& h) {
  RequireSameShape(f, h);
  std::vector<FinSet> out;
  for (std::size_t t = 0; t < f.param_count(); ++t) {
    out.push_back(f.section(t) | h.section(t));
  }
  return SoftSet(std::move(out));
}

SoftSet soft_intersection(const SoftSet& f, const SoftSet& h) {
  RequireSameShape(f, h);
  std::vector<FinSet> out;
  for (std::size_t t = 0; t < f.param_count(); ++t) {
    out.push_back(f.section(t) & h.section(t));
  }
  return SoftSet(std::move(out));
}

bool soft_equal(const SoftSet& f, const SoftSet& h) {
  RequireSameShape(f, h);
  return f == h;
}

bool soft_member(const SoftElement& a, const SoftSet& h) {
  if (a.values.size() != h.param_count()) {
    throw InputError("soft element and soft set differ in parameter count");
  }
  for (std::size_t t = 0; t < h.param_count(); ++t) {
    if (!h.section(t).contains(a.values[t])) return false;
  }
  return true;
}

std::vector<SoftElement> enumerate_soft_elements(const SoftSet& f) {
  if (f.has_empty_section()) {
    throw NoSoftElementsError("SE(F) is undefined: F has an empty section");
  }
  std::vector<SoftElement> out;
  out.reserve(ProductSize(f.sections()));
  ForEachSelection(f.sections(), [&](const SoftElement& a) {
    out.push_back(a);
    return true;
  });
  return out;
}

SoftElementSpace::SoftElementSpace(SoftSet carrier)
    : carrier_(std::move(carrier)),
      elements_(enumerate_soft_elements(carrier_)) {
  const std::size_t p = carrier_.param_count();
  rank_.assign(p, std::vector<std::size_t>(carrier_.universe_size(), kNpos));
  stride_.assign(p, 1);
  for (std::size_t t = 0; t < p; ++t) {
    const std::vector<std::size_t> pts = carrier_.section(t).elements();
    for (std::size_t i = 0; i < pts.size(); ++i) rank_[t][pts[i]] = i;
  }
  for (std::size_t t = p - 1; t > 0; --t) {
    stride_[t - 1] = stride_[t] * carrier_.section(t).size();
  }
}

std::optional<std::size_t> SoftElementSpace::index_of(
    const SoftElement& a) const {
  if (a.values.size() != param_count()) return std::nullopt;
  std::size_t index = 0;
  for (std::size_t t = 0; t < param_count(); ++t) {
    if (a.values[t] >= rank_[t].size() || rank_[t][a.values[t]] == kNpos) {
      return std::nullopt;
    }
    index += rank_[t][a.values[t]] * stride_[t];
  }
  return index;
}

SoftElementsPtr make_soft_elements(const SoftSet& f) {
  return std::make_shared<const SoftElementSpace>(f);
}

SESubset::SESubset(SoftElementsPtr ambient)
    : ambient_(std::move(ambient)), members_(ambient_->size()) {}

SESubset::SESubset(SoftElementsPtr ambient, boost::dynamic_bitset<> members)
    : ambient_(std::move(ambient)), members_(std::move(members)) {
  if (members_.size() != ambient_->size()) {
    throw InputError("SE subset bitmask width differs from |SE(F)|");
  }
}

SESubset SESubset::Full(SoftElementsPtr ambient) {
  SESubset s(std::move(ambient));
  s.members_.set();
  return s;
}

SESubset SESubset::Of(SoftElementsPtr ambient,
                      std::initializer_list<std::size_t> indices) {
  SESubset s(std::move(ambient));
  for (std::size_t i : indices) s.insert(i);
  return s;
}

SESubset SESubset::OfElements(SoftElementsPtr ambient,
                              std::span<const SoftElement> elements) {
  SESubset s(ambient);
  for (const SoftElement& a : elements) {
    const auto i = ambient->index_of(a);
    if (!i) throw InputError("selection is not a soft element of F");
    s.insert(*i);
  }
  return s;
}

std::vector<std::size_t> SESubset::indices() const {
  std::vector<std::size_t> out;
  for (auto i = members_.find_first(); i != boost::dynamic_bitset<>::npos;
       i = members_.find_next(i)) {
    out.push_back(i);
  }
  return out;
}

bool SESubset::subset_of(const SESubset& other) const {
  if (ambient_ != other.ambient_) throw InputError("SE subsets over different SE(F)");
  return members_.is_subset_of(other.members_);
}

SESubset& SESubset::insert(std::size_t i) {
  if (i >= members_.size()) throw InputError("SE index out of range");
  members_.set(i);
  return *this;
}

SESubset operator|(const SESubset& a, const SESubset& b) {
  if (a.ambient_ != b.ambient_) throw InputError("SE subsets over different SE(F)");
  return SESubset(a.ambient_, a.members_ | b.members_);
}

SESubset operator&(const SESubset& a, const SESubset& b) {
  if (a.ambient_ != b.ambient_) throw InputError("SE subsets over different SE(F)");
  return SESubset(a.ambient_, a.members_ & b.members_);
}

bool operator==(const SESubset& a, const SESubset& b) {
  return a.ambient_ == b.ambient_ && a.members_ == b.members_;
}

FinSet section(const SESubset& t, std::size_t param) {
  const SoftElementSpace& se = *t.ambient();
  if (param >= se.param_count()) throw InputError("parameter out of range");
  FinSet out(se.carrier().universe_size());
  for (std::size_t i : t.indices()) out.insert(se[i][param]);
  return out;
}

SESubset se_of_softset(const SoftElementsPtr& ambient, const SoftSet& h) {
  if (!soft_subset(h, ambient->carrier())) {
    throw InputError("SE(H) needs H to be a soft subset of F");
  }
  SESubset out(ambient);
  if (h.has_empty_section()) return out;
  ForEachSelection(h.sections(), [&](const SoftElement& a) {
    out.insert(*ambient->index_of(a));
    return true;
  });
  return out;
}

Representability is_se_representable(const SESubset& k) {
  if (k.empty()) {
    throw UndefinedRepresentationError(
        "the empty subset has no representation by nonempty sections");
  }
  const SoftElementSpace& se = *k.ambient();
  std::vector<FinSet> sections;
  for (std::size_t t = 0; t < se.param_count(); ++t) {
    sections.push_back(section(k, t));
  }
  Representability result{true, SoftSet(std::move(sections)), std::nullopt};
  ForEachSelection(result.candidate.sections(), [&](const SoftElement& a) {
    if (!k.contains(*se.index_of(a))) {
      result.representable = false;
      result.witness = a;
      return false;
    }
    return true;
  });
  return result;
}

}  // namespace softbitop
