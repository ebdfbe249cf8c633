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


// Conversions between library values and oracle data, random generators and
// the small named spaces used across tests.

#ifndef SOFTBITOP_TESTS_SUPPORT_HPP_
#define SOFTBITOP_TESTS_SUPPORT_HPP_

#include <random>
#include <vector>

#include "oracles.hpp"
#include "softbitop/pairwise.hpp"

namespace support {

using namespace softbitop;

inline oracle::Family ToFamily(const SetFamily& f) {
  oracle::Family out;
  for (const FinSet& s : f.members()) out.insert(s.mask());
  return out;
}

inline oracle::Soft ToSoft(const SoftSet& h) {
  oracle::Soft out;
  for (const FinSet& s : h.sections()) out.push_back(s.mask());
  return out;
}

inline std::vector<oracle::Soft> ToSofts(const SoftTopology& tau) {
  std::vector<oracle::Soft> out;
  for (const SoftSet& h : tau.opens()) out.push_back(ToSoft(h));
  return out;
}

inline FinSet RandomSubset(const FinSet& of, std::mt19937_64& rng) {
  return FinSet(of.universe_size(), of.mask() & rng());
}

inline SoftSet RandomSoftSubset(const SoftSet& f, std::mt19937_64& rng) {
  std::vector<FinSet> sections;
  for (const FinSet& s : f.sections()) sections.push_back(RandomSubset(s, rng));
  return SoftSet(std::move(sections));
}

/// F with random nonempty sections over a universe of size n.
inline SoftSet RandomCarrier(std::size_t params, std::size_t n, std::mt19937_64& rng) {
  std::vector<FinSet> sections;
  for (std::size_t t = 0; t < params; ++t) {
    FinSet s(n);
    while (s.empty()) s = RandomSubset(FinSet::Full(n), rng);
    sections.push_back(s);
  }
  return SoftSet(std::move(sections));
}

/// Soft topology generated by up to `k` random soft subsets.
inline SoftTopology RandomSoftTopology(const SoftSet& f, std::size_t k, std::mt19937_64& rng) {
  std::vector<SoftSet> subbase;
  const std::size_t count = rng() % (k + 1);
  for (std::size_t i = 0; i < count; ++i) subbase.push_back(RandomSoftSubset(f, rng));
  return generate_soft_topology(f, subbase);
}

inline ClassicalTopology RandomTopology(const FinSet& carrier, std::size_t k,
                                        std::mt19937_64& rng) {
  std::vector<FinSet> subbase;
  const std::size_t count = rng() % (k + 1);
  for (std::size_t i = 0; i < count; ++i) subbase.push_back(RandomSubset(carrier, rng));
  return generate_topology(subbase, carrier);
}

/// F(t) = {0, 1} for two parameters.
inline SoftSet TwoByTwo() { return SoftSet::Uniform(2, FinSet::Full(2)); }

inline SoftBitopSpace IndiscretePair(const SoftSet& f) {
  return SoftBitopSpace(SoftTopology::Indiscrete(f), SoftTopology::Indiscrete(f));
}

inline SoftBitopSpace DiscretePair(const SoftSet& f) {
  return SoftBitopSpace(SoftTopology::Discrete(f), SoftTopology::Discrete(f));
}

}  // namespace support

#endif  // SOFTBITOP_TESTS_SUPPORT_HPP_
