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
#include "softbitop/finite_sets.hpp"
#include "support.hpp"

using namespace softbitop;

TEST_CASE("FinSet validates its universe and members") {
  CHECK_THROWS_AS(FinSet(0), InputError);
  CHECK_THROWS_AS(FinSet(65), InputError);
  CHECK_THROWS_AS(FinSet(3, 0b1000), InputError);
  CHECK_NOTHROW(FinSet(64, ~std::uint64_t{0}));

  const FinSet a = FinSet::Of(5, {0, 3});
  const FinSet b = FinSet::Of(5, {3, 4});
  CHECK(a.size() == 2);
  CHECK(a.contains(3));
  CHECK_FALSE(a.contains(7));
  CHECK((a | b) == FinSet::Of(5, {0, 3, 4}));
  CHECK((a & b) == FinSet::Of(5, {3}));
  CHECK((a - b) == FinSet::Of(5, {0}));
  CHECK(a.intersects(b));
  CHECK(FinSet::Of(5, {3}).subset_of(a));
  CHECK(a.elements() == std::vector<std::size_t>{0, 3});
  CHECK_THROWS_AS(FinSet::Of(5, {5}), InputError);
  CHECK_THROWS_AS((void)(a | FinSet(4)), InputError);
}

TEST_CASE("SetFamily sorts, deduplicates and checks its carrier") {
  const FinSet carrier = FinSet::Of(4, {0, 1});
  const SetFamily f(carrier, {FinSet::Of(4, {1}), FinSet(4), FinSet::Of(4, {1})});
  CHECK(f.size() == 2);
  CHECK(f.members()[0] == FinSet(4));
  CHECK(f.contains(FinSet::Of(4, {1})));
  CHECK_FALSE(f.contains(FinSet::Of(4, {0})));
  CHECK_THROWS_AS(SetFamily(carrier, {FinSet::Of(4, {2})}), InputError);
}

TEST_CASE("is_topology on small families") {
  const std::vector<FinSet> sierpinski{FinSet(2), FinSet::Of(2, {0}), FinSet::Full(2)};
  CHECK(is_topology(sierpinski, 2));
  const std::vector<FinSet> no_union{FinSet(3), FinSet::Of(3, {0}), FinSet::Of(3, {1}),
                                     FinSet::Full(3)};
  CHECK_FALSE(is_topology(no_union, 3));
  const std::vector<FinSet> no_meet{FinSet(3), FinSet::Of(3, {0, 1}), FinSet::Of(3, {1, 2}),
                                    FinSet::Full(3)};
  CHECK_FALSE(is_topology(no_meet, 3));
  const std::vector<FinSet> no_empty{FinSet::Full(2)};
  CHECK_FALSE(is_topology(no_empty, 2));
  CHECK_THROWS_AS(ClassicalTopology(SetFamily(FinSet::Full(3), no_union)), InputError);
}

TEST_CASE("generate_topology closes a subbase") {
  const std::vector<FinSet> subbase{FinSet::Of(3, {0, 1}), FinSet::Of(3, {1, 2})};
  const ClassicalTopology top = generate_topology(subbase, 3);
  const std::vector<FinSet> expected{FinSet(3), FinSet::Of(3, {1}), FinSet::Of(3, {0, 1}),
                                     FinSet::Of(3, {1, 2}), FinSet::Full(3)};
  CHECK(top.family() == SetFamily(FinSet::Full(3), expected));
  CHECK(generate_topology({}, 3) == ClassicalTopology::Indiscrete(FinSet::Full(3)));

  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng() % 5;
    std::vector<FinSet> sb;
    std::vector<oracle::Mask> masks;
    for (std::size_t i = 0; i < rng() % 5; ++i) {
      sb.push_back(support::RandomSubset(FinSet::Full(n), rng));
      masks.push_back(sb.back().mask());
    }
    CHECK(support::ToFamily(generate_topology(sb, n).family()) ==
          oracle::Generate(masks, FinSet::Full(n).mask()));
  }
}

TEST_CASE("generate_topology on a proper carrier") {
  const FinSet carrier = FinSet::Of(5, {1, 3});
  const std::vector<FinSet> subbase{FinSet::Of(5, {3})};
  const ClassicalTopology top = generate_topology(subbase, carrier);
  CHECK(top.size() == 3);
  CHECK(top.contains(carrier));
  CHECK_THROWS_AS(generate_topology(std::vector<FinSet>{FinSet::Of(5, {0})}, carrier),
                  InputError);
}

TEST_CASE("enumerate_topologies matches the family filter") {
  const std::vector<std::size_t> counts{1, 4, 29, 355};
  for (std::size_t n = 1; n <= 4; ++n) {
    const std::vector<ClassicalTopology> tops = enumerate_topologies(n);
    const std::vector<oracle::Family> expected = oracle::AllTopologies(n);
    CHECK(tops.size() == counts[n - 1]);
    CHECK(expected.size() == counts[n - 1]);
    std::set<oracle::Family> got;
    for (const ClassicalTopology& t : tops) {
      CHECK(is_topology(t.family()));
      got.insert(support::ToFamily(t.family()));
    }
    CHECK(got == std::set<oracle::Family>(expected.begin(), expected.end()));
    CHECK(std::is_sorted(tops.begin(), tops.end()));
  }
  CHECK_THROWS_AS(enumerate_topologies(0), InputError);
  CHECK_THROWS_AS(enumerate_topologies(5), CapacityError);
}

TEST_CASE("transport relabels onto a carrier") {
  const ClassicalTopology s(SetFamily(FinSet::Full(2), {FinSet(2), FinSet::Of(2, {1}), FinSet::Full(2)}));
  const ClassicalTopology moved = transport(s, FinSet::Of(6, {2, 5}));
  CHECK(moved.carrier() == FinSet::Of(6, {2, 5}));
  CHECK(moved.contains(FinSet::Of(6, {5})));
  CHECK_FALSE(moved.contains(FinSet::Of(6, {2})));
  CHECK_THROWS_AS(transport(s, FinSet::Of(6, {1})), InputError);
}

TEST_CASE("classical pairwise separation agrees with the oracle") {
  const std::vector<ClassicalTopology> tops = enumerate_topologies(3);
  const oracle::Mask pts = 0b111;
  for (const ClassicalTopology& a : tops) {
    for (const ClassicalTopology& b : tops) {
      const BitopPair pair(a.family(), b.family());
      const oracle::Family fa = support::ToFamily(a.family());
      const oracle::Family fb = support::ToFamily(b.family());
      CHECK(pairwise_t0(pair).holds == oracle::PairT0(fa, fb, pts));
      for (bool ordered : {true, false}) {
        const PairReading r = ordered ? PairReading::kOrdered : PairReading::kUnordered;
        CHECK(pairwise_t1(pair, r).holds == oracle::PairT1(fa, fb, pts, ordered));
        CHECK(pairwise_t2(pair, r).holds == oracle::PairT2(fa, fb, pts, ordered));
      }
    }
  }
}

TEST_CASE("classical separation witnesses are least failing pairs") {
  const ClassicalTopology ind = ClassicalTopology::Indiscrete(FinSet::Full(3));
  const SeparationVerdict v = pairwise_t0(BitopPair(ind.family(), ind.family()));
  REQUIRE_FALSE(v.holds);
  CHECK(v.witness == PointPair{0, 1});

  const ClassicalTopology disc = ClassicalTopology::Discrete(FinSet::Full(3));
  CHECK(pairwise_t2(BitopPair(disc.family(), disc.family())).holds);
  CHECK_FALSE(pairwise_t2(BitopPair(disc.family(), disc.family())).witness);
  // Sierpinski against itself: T0 but not T1 (1 has no open avoiding 0).
  const SetFamily s(FinSet::Full(2), {FinSet(2), FinSet::Of(2, {0}), FinSet::Full(2)});
  CHECK(pairwise_t0(BitopPair(s, s)).holds);
  const SeparationVerdict t1 = pairwise_t1(BitopPair(s, s));
  CHECK_FALSE(t1.holds);
  CHECK(t1.witness == PointPair{0, 1});
  CHECK_THROWS_AS(BitopPair(s, disc.family()), InputError);
}

TEST_CASE("minimal_subcover finds a least cover") {
  const std::vector<FinSet> cover{FinSet::Of(4, {0}), FinSet::Of(4, {0, 1}), FinSet::Of(4, {2, 3}),
                                  FinSet::Of(4, {1, 2, 3})};
  CHECK(minimal_subcover(cover, FinSet::Full(4)) == std::vector<std::size_t>{0, 3});
  CHECK(minimal_subcover(cover, FinSet(4)).empty());
  CHECK_THROWS_AS(minimal_subcover(std::vector<FinSet>{FinSet::Of(4, {0})}, FinSet::Full(4)),
                  NotACoverError);

  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + rng() % 6;
    std::vector<FinSet> members;
    std::vector<oracle::Mask> masks;
    for (std::size_t i = 0; i < 1 + rng() % 8; ++i) {
      members.push_back(support::RandomSubset(FinSet::Full(n), rng));
      masks.push_back(members.back().mask());
    }
    const FinSet target = support::RandomSubset(FinSet::Full(n), rng);
    const int best = oracle::MinCover(masks, target.mask());
    if (best < 0) {
      CHECK_THROWS_AS(minimal_subcover(members, target), NotACoverError);
      continue;
    }
    const std::vector<std::size_t> pick = minimal_subcover(members, target);
    CHECK(pick.size() == static_cast<std::size_t>(best));
    FinSet u(n);
    for (std::size_t i : pick) u = u | members[i];
    CHECK(target.subset_of(u));
  }
}
