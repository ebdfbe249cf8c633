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
#include <set>

#include "doctest.h"
#include "softbitop/theorems.hpp"
#include "support.hpp"

using namespace softbitop;

namespace {

std::set<std::string> Failed(const TheoremReport& r) {
  std::set<std::string> out;
  for (const TheoremCheck& row : r.rows) {
    if (row.applicable && !row.passed) out.insert(row.name);
  }
  return out;
}

const SeparationOptions kSomeParameter{PairReading::kOrdered, Disjointness::kSomeParameter};

}  // namespace

TEST_CASE("theorem report for the indiscrete pair") {
  const TheoremReport r = verify_theorems(support::IndiscretePair(support::TwoByTwo()));
  CHECK(r.all_passed());
  bool converse = false;
  for (const std::string& n : r.notes) converse |= n.find("converse") != std::string::npos;
  CHECK(converse);
  std::size_t not_applicable = 0;
  for (const TheoremCheck& row : r.rows) not_applicable += !row.applicable;
  CHECK(not_applicable == 7);
}

TEST_CASE("canonical T2 transfer fails under the null-soft-set reading") {
  const SoftBitopSpace space = support::DiscretePair(support::TwoByTwo());
  const TheoremReport strict = verify_theorems(space);
  CHECK(Failed(strict) ==
        std::set<std::string>{"component-to-soft T2 (canonical)", "canonical-equivalence T2"});
  VerifyOptions o;
  o.separation = kSomeParameter;
  CHECK(verify_theorems(space, o).all_passed());
}

TEST_CASE("theorems hold on random spaces with one parameter") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 60; ++trial) {
    const SoftSet f = support::RandomCarrier(1, 1 + rng() % 4, rng);
    const SoftBitopSpace space(support::RandomSoftTopology(f, 3, rng),
                               support::RandomSoftTopology(f, 3, rng));
    VerifyOptions o;
    o.seed = rng();
    CHECK(verify_theorems(space, o).all_passed());
  }
}

TEST_CASE("on random spaces only the canonical T2 rows can fail") {
  std::mt19937_64 rng(43);
  const std::set<std::string> allowed{"component-to-soft T2 (canonical)",
                                      "canonical-equivalence T2"};
  for (int trial = 0; trial < 60; ++trial) {
    const SoftSet f = support::RandomCarrier(2, 1 + rng() % 3, rng);
    SoftTopology a = support::RandomSoftTopology(f, 3, rng);
    SoftTopology b = support::RandomSoftTopology(f, 3, rng);
    if (trial % 2 == 0) {
      a = canonical_enlargement(a);
      b = canonical_enlargement(b);
    }
    const SoftBitopSpace space(a, b);
    VerifyOptions o;
    o.seed = rng();
    o.random_covers = 2;
    for (const std::string& name : Failed(verify_theorems(space, o))) {
      CHECK(allowed.count(name) == 1);
    }
    o.separation = kSomeParameter;
    CHECK(verify_theorems(space, o).all_passed());
  }
}

TEST_CASE("se_topologies_for respects the enumeration bound") {
  CHECK(se_topologies_for(*make_soft_elements(support::TwoByTwo())).size() == 355);
  CHECK(se_topologies_for(*make_soft_elements(SoftSet::Uniform(1, FinSet::Full(5)))).empty());
}
