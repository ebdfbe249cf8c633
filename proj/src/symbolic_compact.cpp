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


#include "softbitop/symbolic_compact.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "combinations.hpp"
#include "softbitop/error.hpp"

namespace softbitop {
namespace {

void RequireUniverse(const FinSet& s, std::size_t n) {
  if (s.universe_size() != n) {
    throw InputError("section over universe of size " + std::to_string(s.universe_size()) +
                     ", expected " + std::to_string(n));
  }
}

// Labels where some member of the choice or the target is not at its
// default, plus one label outside all of them.
std::vector<Label> Probes(const std::vector<Label>& special,
                          const SubfamilyChoice& choice, Label outside) {
  std::vector<Label> probes = special;
  probes.insert(probes.end(), choice.template_indices.begin(),
                choice.template_indices.end());
  probes.push_back(outside);
  std::sort(probes.begin(), probes.end());
  probes.erase(std::unique(probes.begin(), probes.end()), probes.end());
  return probes;
}

bool Covers(const TemplateFamily& family, const CofiniteSoftSet& target,
            const SubfamilyChoice& choice, const std::vector<Label>& probes) {
  return std::all_of(probes.begin(), probes.end(), [&](Label s) {
    return cf_section(target, s).subset_of(choice_section(family, choice, s));
  });
}

}  // namespace

CofiniteSoftSet::CofiniteSoftSet(FinSet default_section,
                                 std::map<Label, FinSet> exceptions)
    : default_(default_section) {
  for (auto& [label, section] : exceptions) {
    RequireUniverse(section, default_.universe_size());
    if (section != default_) exceptions_.emplace(label, section);
  }
}

FinSet cf_section(const CofiniteSoftSet& s, Label t) {
  const auto it = s.exceptions().find(t);
  return it == s.exceptions().end() ? s.default_section() : it->second;
}

CofiniteSoftSet template_member(const IndexedTemplate& tmpl, Label t) {
  return CofiniteSoftSet(tmpl.fallback, {{t, tmpl.at_index}});
}

TemplateFamily::TemplateFamily(std::size_t universe_size,
                               std::optional<IndexedTemplate> tmpl,
                               std::vector<CofiniteSoftSet> explicit_members)
    : universe_size_(universe_size),
      tmpl_(std::move(tmpl)),
      explicit_(std::move(explicit_members)) {
  if (tmpl_) {
    RequireUniverse(tmpl_->at_index, universe_size_);
    RequireUniverse(tmpl_->fallback, universe_size_);
  }
  for (const CofiniteSoftSet& e : explicit_) {
    RequireUniverse(e.default_section(), universe_size_);
  }
}

std::vector<Label> special_labels(const TemplateFamily& family,
                                  const CofiniteSoftSet& target) {
  std::vector<Label> out;
  for (const auto& [label, _] : target.exceptions()) out.push_back(label);
  for (const CofiniteSoftSet& e : family.explicit_members()) {
    for (const auto& [label, _] : e.exceptions()) out.push_back(label);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Label generic_label(const TemplateFamily& family, const CofiniteSoftSet& target) {
  const std::vector<Label> special = special_labels(family, target);
  return special.empty() ? 0 : special.back() + 1;
}

SymbolicVerdict cf_is_cover(const TemplateFamily& family,
                            const CofiniteSoftSet& target) {
  if (target.universe_size() != family.universe_size()) {
    throw InputError("target and family are over different universes");
  }
  std::vector<Label> probes = special_labels(family, target);
  probes.push_back(generic_label(family, target));
  for (Label s : probes) {
    FinSet u(family.universe_size());
    // S_s contributes at_index at s; every other S_t contributes fallback.
    if (const auto& tmpl = family.indexed_template()) u = tmpl->at_index | tmpl->fallback;
    for (const CofiniteSoftSet& e : family.explicit_members()) u = u | cf_section(e, s);
    const FinSet need = cf_section(target, s);
    if (!need.subset_of(u)) return {false, s, u, need};
  }
  const FinSet empty(family.universe_size());
  return {true, std::nullopt, empty, empty};
}

FinSet choice_section(const TemplateFamily& family, const SubfamilyChoice& choice,
                      Label s) {
  FinSet u(family.universe_size());
  if (!choice.template_indices.empty()) {
    const IndexedTemplate& tmpl = family.indexed_template().value();
    for (Label t : choice.template_indices) u = u | (t == s ? tmpl.at_index : tmpl.fallback);
  }
  for (std::size_t i : choice.explicit_members) {
    u = u | cf_section(family.explicit_members().at(i), s);
  }
  return u;
}

FiniteSubcoverDecision decide_finite_subcover(const TemplateFamily& family,
                                              const CofiniteSoftSet& target) {
  if (!cf_is_cover(family, target).holds) {
    throw NotACoverError("family does not cover the target");
  }
  const std::vector<Label> special = special_labels(family, target);
  const Label generic = generic_label(family, target);
  const std::size_t explicit_count = family.explicit_members().size();
  // Template indices at special labels, plus up to two fresh ones: beyond
  // two, further fresh indices change no section.
  const std::size_t label_count = family.indexed_template() ? special.size() : 0;
  const std::size_t max_fresh = family.indexed_template() ? 2 : 0;
  const std::size_t items = explicit_count + label_count;
  if (items > kMaxSymbolicSearch) {
    throw CapacityError("symbolic subcover search over " + std::to_string(items) +
                        " items exceeds " + std::to_string(kMaxSymbolicSearch));
  }
  const Label outside = generic + max_fresh;

  FiniteSubcoverDecision decision{false, std::nullopt, std::nullopt};
  for (std::size_t size = 0; size <= items + max_fresh && !decision.exists; ++size) {
    for (std::size_t fresh = 0; fresh <= std::min(size, max_fresh); ++fresh) {
      if (size - fresh > items) continue;
      const bool found = internal::ForEachCombination(
          items, size - fresh, [&](const std::vector<std::size_t>& pick) {
            SubfamilyChoice c;
            for (std::size_t i : pick) {
              if (i < explicit_count) {
                c.explicit_members.push_back(i);
              } else {
                c.template_indices.push_back(special[i - explicit_count]);
              }
            }
            for (std::size_t k = 0; k < fresh; ++k) c.template_indices.push_back(generic + k);
            if (!Covers(family, target, c, Probes(special, c, outside))) return false;
            decision = {true, std::move(c), std::nullopt};
            return true;
          });
      if (found) break;
    }
  }
  if (decision.exists) return decision;

  // The largest union any finite subfamily has at a label it does not index.
  FinSet u(family.universe_size());
  if (const auto& tmpl = family.indexed_template()) u = tmpl->fallback;
  for (const CofiniteSoftSet& e : family.explicit_members()) u = u | e.default_section();
  const FinSet need = target.default_section();
  if (need.subset_of(u)) {
    throw std::logic_error("no finite subcover found but the generic label is covered");
  }
  decision.certificate = GenericCertificate{outside, u, need};
  return decision;
}

SoftSet truncate(const CofiniteSoftSet& s, std::size_t m) {
  if (m == 0) throw InputError("truncation needs at least one parameter");
  if (!s.exceptions().empty() && s.exceptions().rbegin()->first >= m) {
    throw InputError("truncation at " + std::to_string(m) + " drops exception label " +
                     std::to_string(s.exceptions().rbegin()->first));
  }
  std::vector<FinSet> sections;
  for (std::size_t t = 0; t < m; ++t) sections.push_back(cf_section(s, t));
  return SoftSet(std::move(sections));
}

TruncatedFamily truncate(const TemplateFamily& family, std::size_t m) {
  TruncatedFamily out{{}, 0};
  if (const auto& tmpl = family.indexed_template()) {
    for (std::size_t t = 0; t < m; ++t) {
      out.members.push_back(truncate(template_member(*tmpl, t), m));
    }
    out.template_count = m;
  }
  for (const CofiniteSoftSet& e : family.explicit_members()) {
    out.members.push_back(truncate(e, m));
  }
  return out;
}

}  // namespace softbitop
