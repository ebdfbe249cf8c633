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
#include "softbitop/format.hpp"
#include "softbitop/soft_core.hpp"
#include "support.hpp"

using namespace softbitop;

namespace {

// F(alpha) = {x1, x2}, F(beta) = {x3, x4} with x1..x4 as 0..3.
SoftSet RepresentationCarrier() {
  return SoftSet({FinSet::Of(4, {0, 1}), FinSet::Of(4, {2, 3})});
}

const Names kNames{{"x1", "x2", "x3", "x4"}, {"alpha", "beta"}};

}  // namespace

TEST_CASE("soft set operations are sectionwise") {
  const SoftSet h({FinSet::Of(3, {0}), FinSet::Of(3, {1, 2})});
  const SoftSet k({FinSet::Of(3, {0, 1}), FinSet::Of(3, {2})});
  CHECK(soft_union(h, k) == SoftSet({FinSet::Of(3, {0, 1}), FinSet::Of(3, {1, 2})}));
  CHECK(soft_intersection(h, k) == SoftSet({FinSet::Of(3, {0}), FinSet::Of(3, {2})}));
  CHECK(soft_subset(soft_intersection(h, k), h));
  CHECK_FALSE(soft_subset(h, k));
  CHECK(soft_equal(h, h));
  CHECK(SoftSet::Null(2, 3).is_null());
  CHECK(SoftSet({FinSet(3), FinSet::Of(3, {1})}).has_empty_section());
  CHECK_FALSE(SoftSet({FinSet(3), FinSet::Of(3, {1})}).is_null());
  CHECK_THROWS_AS(soft_union(h, SoftSet::Null(3, 3)), InputError);
  CHECK_THROWS_AS(SoftSet({FinSet(3), FinSet(4)}), InputError);
  CHECK_THROWS_AS(SoftSet(std::vector<FinSet>{}), InputError);
}

TEST_CASE("soft elements enumerate the product lexicographically") {
  const std::vector<SoftElement> se = enumerate_soft_elements(RepresentationCarrier());
  REQUIRE(se.size() == 4);
  CHECK(se[0].values == std::vector<std::size_t>{0, 2});
  CHECK(se[1].values == std::vector<std::size_t>{0, 3});
  CHECK(se[2].values == std::vector<std::size_t>{1, 2});
  CHECK(se[3].values == std::vector<std::size_t>{1, 3});
  CHECK(std::is_sorted(se.begin(), se.end()));
  CHECK_THROWS_AS(enumerate_soft_elements(SoftSet({FinSet(2), FinSet::Full(2)})),
                  NoSoftElementsError);

  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const SoftSet f = support::RandomCarrier(1 + rng() % 3, 1 + rng() % 4, rng);
    const auto ours = enumerate_soft_elements(f);
    const auto theirs = oracle::Elements(support::ToSoft(f));
    REQUIRE(ours.size() == theirs.size());
    const SoftElementsPtr space = make_soft_elements(f);
    for (std::size_t i = 0; i < ours.size(); ++i) {
      CHECK(ours[i].values == theirs[i]);
      CHECK(space->index_of(ours[i]) == i);
    }
  }
}

TEST_CASE("soft membership and SE(H)") {
  const SoftSet f = RepresentationCarrier();
  const SoftElementsPtr se = make_soft_elements(f);
  const SoftSet h({FinSet::Of(4, {0}), FinSet::Of(4, {2, 3})});
  CHECK(soft_member(SoftElement{{0, 3}}, h));
  CHECK_FALSE(soft_member(SoftElement{{1, 3}}, h));
  CHECK(se_of_softset(se, h) == SESubset::Of(se, {0, 1}));
  CHECK(se_of_softset(se, SoftSet({FinSet(4), FinSet::Of(4, {2})})).empty());
  CHECK_THROWS_AS(se_of_softset(se, SoftSet({FinSet::Of(4, {2}), FinSet(4)})), InputError);

  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const SoftSet g = support::RandomCarrier(1 + rng() % 3, 1 + rng() % 4, rng);
    const SoftElementsPtr space = make_soft_elements(g);
    const SoftSet k = support::RandomSoftSubset(g, rng);
    const SESubset got = se_of_softset(space, k);
    for (std::size_t i = 0; i < space->size(); ++i) {
      CHECK(got.contains(i) == oracle::Member((*space)[i].values, support::ToSoft(k)));
    }
  }
}

TEST_CASE("a subset of SE(F) that is no SE(H)") {
  const SoftElementsPtr se = make_soft_elements(RepresentationCarrier());
  const std::vector<SoftElement> k{{{0, 2}}, {{1, 3}}};
  const Representability r = is_se_representable(SESubset::OfElements(se, k));
  CHECK_FALSE(r.representable);
  REQUIRE(r.witness);
  CHECK(to_string(*r.witness, kNames) == "(x1,x4)");
  CHECK(to_string(r.candidate, kNames) == "({x1,x2},{x3,x4})");

  const std::vector<SoftElement> row{{{0, 2}}, {{0, 3}}};
  const Representability ok = is_se_representable(SESubset::OfElements(se, row));
  CHECK(ok.representable);
  CHECK_FALSE(ok.witness);
  CHECK(ok.candidate == SoftSet({FinSet::Of(4, {0}), FinSet::Of(4, {2, 3})}));

  CHECK(is_se_representable(SESubset::Full(se)).representable);
  CHECK_THROWS_AS(is_se_representable(SESubset(se)), UndefinedRepresentationError);
  CHECK_THROWS_AS(SESubset::OfElements(se, std::vector<SoftElement>{{{2, 2}}}), InputError);
}

TEST_CASE("representability agrees with brute force over all subsets") {
  const SoftSet f({FinSet::Of(3, {0, 1}), FinSet::Of(3, {0, 1, 2})});
  const SoftElementsPtr se = make_soft_elements(f);
  const std::vector<oracle::Element> elems = oracle::Elements(support::ToSoft(f));
  for (std::uint64_t k = 1; k < (std::uint64_t{1} << se->size()); ++k) {
    boost::dynamic_bitset<> bits(se->size(), k);
    const Representability r = is_se_representable(SESubset(se, bits));
    // Some soft subset H with SE(H) = K, by trying all of them.
    bool exists = false;
    for (oracle::Mask a = 0; a < 4 && !exists; ++a) {
      for (oracle::Mask b = 0; b < 8 && !exists; ++b) {
        oracle::Mask got = 0;
        for (std::size_t i = 0; i < elems.size(); ++i) {
          if (oracle::Member(elems[i], {a, b})) got |= oracle::Mask{1} << i;
        }
        exists = got == k;
      }
    }
    CHECK(r.representable == exists);
  }
}

TEST_CASE("section of a union is the union of sections") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 300; ++trial) {
    const SoftSet f = support::RandomCarrier(1 + rng() % 3, 1 + rng() % 3, rng);
    const SoftElementsPtr se = make_soft_elements(f);
    const SESubset a(se, boost::dynamic_bitset<>(se->size(), rng()));
    const SESubset b(se, boost::dynamic_bitset<>(se->size(), rng()));
    for (std::size_t t = 0; t < f.param_count(); ++t) {
      CHECK(section(a | b, t) == (section(a, t) | section(b, t)));
      CHECK(section(a & b, t).subset_of(section(a, t) & section(b, t)));
    }
  }
}

TEST_CASE("section of a nonempty intersection can be smaller than the meet of sections") {
  const SoftElementsPtr se = make_soft_elements(support::TwoByTwo());
  const std::vector<SoftElement> t1{{{0, 0}}, {{1, 1}}};
  const std::vector<SoftElement> t2{{{0, 0}}, {{0, 1}}, {{1, 0}}};
  const SESubset a = SESubset::OfElements(se, t1);
  const SESubset b = SESubset::OfElements(se, t2);
  REQUIRE_FALSE((a & b).empty());
  CHECK(section(a & b, 0) == FinSet::Of(2, {0}));
  CHECK((section(a, 0) & section(b, 0)) == FinSet::Full(2));
}

TEST_CASE("formatting uses names and falls back to indices") {
  const SoftSet h({FinSet::Of(4, {0}), FinSet::Of(4, {2, 3})});
  CHECK(to_string(h, kNames) == "({x1},{x3,x4})");
  CHECK(to_string(h) == "({0},{2,3})");
  CHECK(to_string(FinSet(4)) == "{}");
  const SoftElementsPtr se = make_soft_elements(RepresentationCarrier());
  CHECK(to_string(SESubset::Of(se, {0, 3}), kNames) == "{(x1,x3),(x2,x4)}");
}
