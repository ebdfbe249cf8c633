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


#include <random>

#include "doctest.h"
#include "softbitop/error.hpp"
#include "softbitop/soft_topology.hpp"
#include "support.hpp"

using namespace softbitop;

TEST_CASE("soft topology axioms") {
  const SoftSet f = support::TwoByTwo();
  const SoftSet g({FinSet::Of(2, {0}), FinSet::Full(2)});
  const SoftSet h({FinSet::Full(2), FinSet::Of(2, {0})});
  const SoftSet phi = SoftSet::Null(2, 2);
  const std::vector<SoftSet> missing_meet{phi, g, h, soft_union(g, h), f};
  CHECK_FALSE(is_soft_topology(f, missing_meet));
  const std::vector<SoftSet> closed{phi, soft_intersection(g, h), g, h, f};
  CHECK(is_soft_topology(f, closed));
  const std::vector<SoftSet> no_top{phi, g};
  CHECK_FALSE(is_soft_topology(f, no_top));
  CHECK_THROWS_AS(SoftTopology(f, missing_meet), InputError);

  const SoftTopology tau = generate_soft_topology(f, std::vector<SoftSet>{g, h});
  CHECK(tau.size() == 5);
  CHECK(tau.contains(soft_intersection(g, h)));
  CHECK(SoftTopology::Indiscrete(f).size() == 2);
  CHECK(SoftTopology::Discrete(f).size() == 16);
}

TEST_CASE("component topologies and canonical topologies") {
  const SoftSet f({FinSet::Of(3, {0, 1}), FinSet::Of(3, {0, 1, 2})});
  const ClassicalTopology s0(SetFamily(f.section(0), {FinSet(3), FinSet::Of(3, {0}), f.section(0)}));
  const ClassicalTopology s1 = ClassicalTopology::Discrete(f.section(1));
  const std::vector<ClassicalTopology> sigmas{s0, s1};
  const SoftTopology can = canonical_topology(f, sigmas);
  CHECK(can.size() == 3 * 8);
  CHECK(is_soft_topology(f, can.opens()));
  CHECK(component_topology(can, 0) == s0);
  CHECK(component_topology(can, 1) == s1);
  CHECK(is_canonical(can));
  CHECK_FALSE(is_canonical(SoftTopology::Indiscrete(f)));
  CHECK(is_canonical(SoftTopology::Discrete(f)));

  const std::vector<ClassicalTopology> wrong{s1, s0};
  CHECK_THROWS_AS(canonical_topology(f, wrong), InputError);
}

TEST_CASE("canonical enlargement contains the topology and keeps components") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    const SoftSet f = support::RandomCarrier(1 + rng() % 3, 1 + rng() % 3, rng);
    const SoftTopology tau = support::RandomSoftTopology(f, 3, rng);
    const SoftTopology can = canonical_enlargement(tau);
    CHECK(tau.subset_of(can));
    CHECK(is_canonical(can));
    for (std::size_t t = 0; t < f.param_count(); ++t) {
      CHECK(component_topology(can, t) == component_topology(tau, t));
    }
    CHECK(is_canonical(tau) == (tau == can));
  }
}

TEST_CASE("induced family of the indiscrete pair on 2x2") {
  const SoftSet f = support::TwoByTwo();
  const SoftElementsPtr se = make_soft_elements(f);
  const SEFamily star = induced_topology(SoftTopology::Indiscrete(f), se);
  const std::vector<SoftElement> u{{{0, 0}}, {{1, 1}}};
  const std::vector<SoftElement> v{{{0, 1}}, {{1, 0}}};
  CHECK(star.contains(SESubset::OfElements(se, u)));
  CHECK(star.contains(SESubset::OfElements(se, v)));
  // Empty set, SE(F), the two diagonals and the four three-element sets.
  CHECK(star.size() == 8);
  CHECK_FALSE(is_topology(star.sets()));
}

TEST_CASE("induced family agrees with the oracle") {
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 300; ++trial) {
    const SoftSet f = support::RandomCarrier(1 + rng() % 3, 1 + rng() % 3, rng);
    const SoftElementsPtr se = make_soft_elements(f);
    if (se->size() > kMaxInducedElements) continue;
    const SoftTopology tau = support::RandomSoftTopology(f, 3, rng);
    CHECK(support::ToFamily(induced_topology(tau, se).sets()) ==
          oracle::Induced(support::ToSoft(f), support::ToSofts(tau)));
  }
  const SoftSet big = SoftSet::Uniform(3, FinSet::Full(3));
  CHECK_THROWS_AS(induced_topology(SoftTopology::Indiscrete(big)), CapacityError);
}

TEST_CASE("induced family is a topology when |A| = 1") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 100; ++trial) {
    const SoftSet f = support::RandomCarrier(1, 1 + rng() % 5, rng);
    const SoftTopology tau = support::RandomSoftTopology(f, 3, rng);
    CHECK(is_topology(induced_topology(tau).sets()));
  }
}

TEST_CASE("finest topology with open projections") {
  const SoftSet f = support::TwoByTwo();
  const SoftElementsPtr se = make_soft_elements(f);
  const SoftTopology tau = SoftTopology::Indiscrete(f);
  const SEFamily star = induced_topology(tau, se);
  std::size_t with_open_projections = 0;
  for (const ClassicalTopology& u : enumerate_topologies(se->size())) {
    const SEFamily candidate(se, u.family());
    const bool open = check_finest_open_projections(tau, candidate);
    CHECK(open == candidate.subset_of(star));
    with_open_projections += open;
  }
  CHECK(with_open_projections > 1);
  const SetFamily not_top(FinSet::Full(4), {FinSet(4), FinSet::Of(4, {0}), FinSet::Of(4, {1}),
                                           FinSet::Full(4)});
  CHECK_THROWS_AS(check_finest_open_projections(tau, SEFamily(se, not_top)), InputError);
}

TEST_CASE("reconstruction embeds every topology on SE(F)") {
  const SoftSet f({FinSet::Of(2, {0, 1}), FinSet::Of(2, {0, 1})});
  const SoftElementsPtr se = make_soft_elements(f);
  for (const ClassicalTopology& u : enumerate_topologies(se->size())) {
    const Reconstruction r = reconstruct(SEFamily(se, u.family()));
    CHECK(r.contained);
    CHECK(is_canonical(r.tau_hat));
    for (std::size_t t = 0; t < f.param_count(); ++t) {
      CHECK(component_topology(r.tau_hat, t) == r.sigmas[t]);
    }
  }
}

TEST_CASE("SE index sets round-trip") {
  const SoftElementsPtr se = make_soft_elements(support::TwoByTwo());
  const SESubset s = SESubset::Of(se, {1, 2});
  CHECK(to_index_set(s) == FinSet::Of(4, {1, 2}));
  CHECK(from_index_set(se, FinSet::Of(4, {1, 2})) == s);
  CHECK_THROWS_AS(from_index_set(se, FinSet::Of(5, {1})), InputError);
}
