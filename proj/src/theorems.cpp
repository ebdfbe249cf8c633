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

#include "softbitop/theorems.hpp"

#include <algorithm>
#include <array>
#include <random>

#include "softbitop/error.hpp"

namespace softbitop {
namespace {

constexpr std::array<const char*, 3> kAxiom = {"T0", "T1", "T2"};

std::string PairText(const Witness& w, const Names& names) {
  if (const auto* p = std::get_if<ElementPair>(&w)) {
    return to_string(p->a, names) + " vs " + to_string(p->b, names);
  }
  return "";
}

std::string PointText(const SeparationVerdict& v, const Names& names) {
  if (!v.witness) return "";
  return names.element(v.witness->x) + " vs " + names.element(v.witness->y);
}

Verdict SoftAxiom(const SoftBitopSpace& space, std::size_t j,
                  const SeparationOptions& options) {
  switch (j) {
    case 0:
      return pairwise_soft_t0(space);
    case 1:
      return pairwise_soft_t1(space, options);
    default:
      return pairwise_soft_t2(space, options);
  }
}

SeparationVerdict ClassicalAxiom(const BitopPair& b, std::size_t j,
                                 PairReading reading) {
  switch (j) {
    case 0:
      return pairwise_t0(b);
    case 1:
      return pairwise_t1(b, reading);
    default:
      return pairwise_t2(b, reading);
  }
}

TheoremCheck Implication(std::string name, bool antecedent, bool consequent,
                         std::string failure_detail) {
  TheoremCheck row{std::move(name), true, !antecedent || consequent, ""};
  if (!row.passed) {
    row.detail = std::move(failure_detail);
  } else {
    row.detail = antecedent ? "holds" : "vacuous";
  }
  return row;
}

// Image of an SE subset under the t-th projection, element by element.
FinSet Projection(const SESubset& u, std::size_t t) {
  const SoftElementSpace& se = *u.ambient();
  FinSet image(se.carrier().universe_size());
  for (std::size_t i = 0; i < se.size(); ++i) {
    if (u.contains(i)) image.insert(se[i].values[t]);
  }
  return image;
}

std::vector<CoverMember> AllOpens(const SoftBitopSpace& space) {
  std::vector<CoverMember> members;
  for (const SoftSet& h : space.tau1().opens()) {
    members.push_back({h, space.tau2().contains(h) ? Side::kBoth : Side::kFirst});
  }
  for (const SoftSet& h : space.tau2().opens()) {
    if (!space.tau1().contains(h)) members.push_back({h, Side::kSecond});
  }
  return members;
}

SoftSet RandomSoftSubset(const SoftSet& f, std::mt19937_64& rng) {
  std::vector<FinSet> sections;
  for (const FinSet& s : f.sections()) {
    sections.emplace_back(s.universe_size(), s.mask() & rng());
  }
  return SoftSet(std::move(sections));
}

// Subcover found for `cover` must cover target(t) at every t and be no
// larger than the per-parameter construction.
std::string CheckSubcover(const SoftBitopSpace& space, const SoftCover& cover) {
  const SubcoverResult r = find_finite_subcover(space, cover);
  for (const auto* pick : {&r.per_parameter, &r.minimal}) {
    for (std::size_t t = 0; t < space.param_count(); ++t) {
      FinSet u(space.carrier().universe_size());
      for (std::size_t i : *pick) u = u | cover.members[i].set.section(t);
      if (!cover.target.section(t).subset_of(u)) {
        return "subcover misses a point at parameter " + std::to_string(t);
      }
    }
  }
  if (r.minimal.size() > r.per_parameter.size()) {
    return "minimal subcover larger than the per-parameter construction";
  }
  return "";
}

}  // namespace

bool TheoremReport::all_passed() const {
  return std::all_of(rows.begin(), rows.end(), [](const TheoremCheck& r) {
    return !r.applicable || r.passed;
  });
}

void TheoremReport::append(TheoremReport other) {
  for (auto& r : other.rows) rows.push_back(std::move(r));
  for (auto& n : other.notes) notes.push_back(std::move(n));
}

TheoremReport check_separation_theorems(const SoftBitopSpace& space,
                                        const SeparationOptions& options,
                                        const Names& names) {
  TheoremReport report;
  std::array<Verdict, 3> soft{SoftAxiom(space, 0, options),
                              SoftAxiom(space, 1, options),
                              SoftAxiom(space, 2, options)};

  {
    const bool ok = (!soft[2].holds || soft[1].holds) && (!soft[1].holds || soft[0].holds);
    report.rows.push_back({"separation-chain", true, ok,
                           ok ? "holds" : "soft T2 => T1 => T0 violated"});
  }

  std::vector<BitopPair> components;
  for (std::size_t t = 0; t < space.param_count(); ++t) {
    components.push_back(component_bitop(space, t));
  }
  const bool canonical = is_canonical(space.tau1()) && is_canonical(space.tau2());

  for (std::size_t j = 0; j < 3; ++j) {
    const std::string axiom = kAxiom[j];
    bool all_components = true;
    std::string component_failure;
    for (std::size_t t = 0; t < components.size(); ++t) {
      const SeparationVerdict c = ClassicalAxiom(components[t], j, options.pairs);
      if (!c.holds && all_components) {
        all_components = false;
        component_failure = "component " + names.param(t) + " not pairwise " +
                            axiom + " (" + PointText(c, names) + ")";
      }
    }

    report.rows.push_back(Implication(
        "soft-to-component " + axiom, soft[j].holds, all_components,
        "soft " + axiom + " holds but " + component_failure));

    TheoremCheck to_soft = Implication(
        "component-to-soft " + axiom + " (canonical)", all_components,
        soft[j].holds,
        "every component is pairwise " + axiom + " but soft " + axiom +
            " fails at " + PairText(soft[j].witness, names));
    TheoremCheck equivalence{"canonical-equivalence " + axiom, true,
                             soft[j].holds == all_components, ""};
    equivalence.detail = equivalence.passed
                             ? (soft[j].holds ? "both hold" : "both fail")
                             : "soft " + axiom + "=" + (soft[j].holds ? "true" : "false") +
                                   ", components=" + (all_components ? "true" : "false");
    if (!canonical) {
      to_soft = {to_soft.name, false, true, "not applicable: not canonical"};
      equivalence = {equivalence.name, false, true, "not applicable: not canonical"};
    }
    report.rows.push_back(std::move(to_soft));
    report.rows.push_back(std::move(equivalence));
  }

  if (space.elements()->size() > kMaxInducedElements) {
    for (const char* axiom : kAxiom) {
      report.rows.push_back({std::string("soft-to-induced ") + axiom, false, true,
                             "not applicable: |SE(F)| above capacity"});
    }
    return report;
  }
  const BitopPair induced = induced_bitop(space);
  for (std::size_t j = 0; j < 3; ++j) {
    const std::string axiom = kAxiom[j];
    const SeparationVerdict ind = ClassicalAxiom(induced, j, options.pairs);
    std::string failure = "soft " + axiom + " holds but induced pair fails at ";
    if (ind.witness) {
      failure += to_string((*space.elements())[ind.witness->x], names) + " vs " +
                 to_string((*space.elements())[ind.witness->y], names);
    }
    report.rows.push_back(Implication("soft-to-induced " + axiom, soft[j].holds,
                                      ind.holds, failure));
    if (!soft[j].holds && ind.holds) {
      report.notes.push_back("induced pair is pairwise " + axiom + " while the soft space is not (" +
                             PairText(soft[j].witness, names) +
                             "): the converse of soft-to-induced fails");
    }
  }
  return report;
}

TheoremReport check_topology_theorems(const SoftTopology& tau,
                                      const SoftElementsPtr& elements,
                                      const std::vector<ClassicalTopology>& se_topologies,
                                      const std::string& label) {
  TheoremReport report;
  const SoftTopology enlarged = canonical_enlargement(tau);

  {
    TheoremCheck row{"canonical-enlargement-invariance " + label, true, true, "holds"};
    if (!tau.subset_of(enlarged)) {
      row = {row.name, true, false, "tau is not contained in its canonical enlargement"};
    }
    for (std::size_t t = 0; row.passed && t < tau.param_count(); ++t) {
      if (component_topology(enlarged, t) != component_topology(tau, t)) {
        row = {row.name, true, false, "component topology changed at parameter " + std::to_string(t)};
      }
    }
    if (row.passed && elements->size() <= kMaxInducedElements &&
        induced_topology(enlarged, elements) != induced_topology(tau, elements)) {
      row = {row.name, true, false, "induced family changed under enlargement"};
    }
    report.rows.push_back(std::move(row));
  }

  if (elements->size() > kMaxInducedElements) {
    report.rows.push_back({"finest-open-projections " + label, false, true,
                           "not applicable: |SE(F)| above capacity"});
    return report;
  }
  const SEFamily star = induced_topology(tau, elements);
  std::vector<ClassicalTopology> components;
  for (std::size_t t = 0; t < tau.param_count(); ++t) {
    components.push_back(component_topology(tau, t));
  }
  TheoremCheck finest{"finest-open-projections " + label, true, true, "holds"};
  for (std::size_t i = 0; finest.passed && i < star.size(); ++i) {
    const SESubset u = star.member(i);
    for (std::size_t t = 0; t < tau.param_count(); ++t) {
      if (!components[t].contains(Projection(u, t))) {
        finest = {finest.name, true, false, "an induced open has a non-open projection"};
        break;
      }
    }
  }
  std::size_t checked = 0;
  for (const ClassicalTopology& u : se_topologies) {
    if (!finest.passed) break;
    const SEFamily candidate(elements, u.family());
    const bool projections_open = check_finest_open_projections(tau, candidate);
    const bool inside = candidate.subset_of(star);
    ++checked;
    if (projections_open != inside) {
      finest = {finest.name, true, false,
                "a topology on SE(F) with open projections is not inside the induced family"};
    }
  }
  if (finest.passed && checked > 0) {
    finest.detail = "holds over " + std::to_string(checked) + " topologies on SE(F)";
  }
  report.rows.push_back(std::move(finest));

  // The topology generated by the induced family is a valid reconstruction input.
  const ClassicalTopology generated =
      generate_topology(star.sets().members(), star.sets().carrier());
  const Reconstruction r = reconstruct(SEFamily(elements, generated.family()));
  report.rows.push_back({"reconstruction-containment " + label, true, r.contained,
                         r.contained ? "holds for the topology generated by the induced family"
                                     : "generated topology escapes the reconstruction"});
  if (!is_topology(star.sets())) {
    report.notes.push_back("induced family of " + label +
                           " is not closed under intersection");
  }
  return report;
}

TheoremReport check_reconstruction(const SoftElementsPtr& elements,
                                   const std::vector<ClassicalTopology>& se_topologies) {
  TheoremReport report;
  TheoremCheck contained{"reconstruction-containment", true, true, "holds"};
  TheoremCheck canonical{"reconstruction-canonical", true, true, "holds"};
  for (const ClassicalTopology& u : se_topologies) {
    const Reconstruction r = reconstruct(SEFamily(elements, u.family()));
    if (!r.contained && contained.passed) {
      contained = {contained.name, true, false, "a topology on SE(F) escapes its reconstruction"};
    }
    if (!is_canonical(r.tau_hat) && canonical.passed) {
      canonical = {canonical.name, true, false, "reconstructed soft topology is not canonical"};
    }
  }
  if (se_topologies.empty()) {
    contained = {contained.name, false, true, "not applicable: no topologies enumerated"};
    canonical = {canonical.name, false, true, "not applicable: no topologies enumerated"};
  } else if (contained.passed) {
    contained.detail = "holds over " + std::to_string(se_topologies.size()) + " topologies on SE(F)";
  }
  report.rows.push_back(std::move(contained));
  report.rows.push_back(std::move(canonical));
  return report;
}

TheoremReport check_compactness_theorems(const SoftBitopSpace& space,
                                         std::uint64_t seed,
                                         std::size_t random_covers) {
  TheoremReport report;
  const SoftSet& f = space.carrier();
  std::mt19937_64 rng(seed);
  const std::vector<CoverMember> all = AllOpens(space);

  TheoremCheck finite{"finite-subcover", true, true, ""};
  std::vector<SoftCover> covers{{f, all}};
  for (std::size_t n = 0; n < random_covers; ++n) {
    SoftCover c{RandomSoftSubset(f, rng), {}};
    for (const CoverMember& m : all) {
      if (rng() & 1U) c.members.push_back(m);
    }
    // Top up with members that reach missing points.
    for (const CoverMember& m : all) {
      if (is_pairwise_soft_cover(space, c).holds) break;
      c.members.push_back(m);
    }
    covers.push_back(std::move(c));
  }
  for (const SoftCover& c : covers) {
    const std::string err = CheckSubcover(space, c);
    if (!err.empty()) {
      finite = {finite.name, true, false, err};
      break;
    }
  }
  if (finite.passed) {
    finite.detail = "finite subcover found for " + std::to_string(covers.size()) + " covers";
  }
  report.rows.push_back(std::move(finite));

  TheoremCheck transport{"cylinder-transport", true, true, ""};
  if (!is_canonical(space.tau1()) || !is_canonical(space.tau2())) {
    transport = {transport.name, false, true, "not applicable: not canonical"};
  } else {
    for (std::size_t t0 = 0; transport.passed && t0 < space.param_count(); ++t0) {
      SoftCover lifted{f, {}};
      std::vector<FinSet> bases;
      const ClassicalTopology first = component_topology(space.tau1(), t0);
      const ClassicalTopology second = component_topology(space.tau2(), t0);
      for (const FinSet& v : first.opens()) {
        lifted.members.push_back({cylinder(space, t0, v, Side::kFirst).set, Side::kFirst});
        bases.push_back(v);
      }
      for (const FinSet& v : second.opens()) {
        lifted.members.push_back({cylinder(space, t0, v, Side::kSecond).set, Side::kSecond});
        bases.push_back(v);
      }
      if (!is_pairwise_soft_cover(space, lifted).holds) {
        transport = {transport.name, true, false,
                     "cylinders over a component cover do not cover F"};
        break;
      }
      const SubcoverResult r = find_finite_subcover(space, lifted);
      FinSet u(f.universe_size());
      for (std::size_t i : r.minimal) u = u | bases[i];
      if (!f.section(t0).subset_of(u)) {
        transport = {transport.name, true, false,
                     "subcover sections miss F(t) at parameter " + std::to_string(t0)};
      }
    }
    if (transport.passed) transport.detail = "holds at every parameter";
  }
  report.rows.push_back(std::move(transport));
  return report;
}

std::vector<ClassicalTopology> se_topologies_for(const SoftElementSpace& se) {
  if (se.size() > kMaxEnumeratedTopologyPoints) return {};
  return enumerate_topologies(se.size());
}

TheoremReport verify_theorems(const SoftBitopSpace& space,
                              const VerifyOptions& options,
                              const Names& names) {
  TheoremReport report = check_separation_theorems(space, options.separation, names);
  const std::vector<ClassicalTopology> se_tops =
      options.enumerate_se_topologies ? se_topologies_for(*space.elements())
                                      : std::vector<ClassicalTopology>{};
  report.append(check_topology_theorems(space.tau1(), space.elements(), se_tops, "tau1"));
  report.append(check_topology_theorems(space.tau2(), space.elements(), se_tops, "tau2"));
  report.append(check_reconstruction(space.elements(), se_tops));
  report.append(check_compactness_theorems(space, options.seed, options.random_covers));
  return report;
}

}  // namespace softbitop
