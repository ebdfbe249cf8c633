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


#include "softbitop/search.hpp"

#include <bitset>
#include <cstdint>
#include <string>

#include "softbitop/error.hpp"

namespace softbitop {
namespace {

// SE(F) has at most 3^2 = 9 elements inside the search bounds.
constexpr std::size_t kMaxSearchElements = 9;
using SubsetBits = std::bitset<std::size_t{1} << kMaxSearchElements>;

// Per soft topology data for the bitmask deciders.
struct Fast {
  std::uint64_t separated = 0;   // bit pair(a,b): some open holds exactly one
  std::vector<SubsetBits> complements;  // per x: {~U : U in tau*, x in U}
  std::vector<SubsetBits> supersets;    // per y: {M : y in V subset of M, V in tau*}
};

std::size_t PairBit(std::size_t a, std::size_t b) {
  return a * kMaxSearchElements + b - (a + 1) * (a + 2) / 2;
}

Fast Analyse(const SoftTopology& tau, const SoftElementSpace& se) {
  const std::size_t n = se.size();
  const std::uint32_t full = (std::uint32_t{1} << n) - 1;
  Fast out;

  for (const SoftSet& h : tau.opens()) {
    std::uint32_t m = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (soft_member(se[i], h)) m |= std::uint32_t{1} << i;
    }
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = a + 1; b < n; ++b) {
        if (((m >> a) & 1U) != ((m >> b) & 1U)) {
          out.separated |= std::uint64_t{1} << PairBit(a, b);
        }
      }
    }
  }

  // Component opens as lookup tables over section masks.
  const std::size_t p = tau.param_count();
  std::vector<std::vector<bool>> open(p);
  for (std::size_t t = 0; t < p; ++t) {
    open[t].assign(std::size_t{1} << tau.ambient().universe_size(), false);
    const ClassicalTopology component = component_topology(tau, t);
    for (const FinSet& v : component.opens()) open[t][v.mask()] = true;
  }

  std::vector<SubsetBits> members(n);  // per x: {U in tau* : x in U}
  for (std::uint32_t u = 0; u <= full; ++u) {
    bool ok = true;
    for (std::size_t t = 0; ok && t < p; ++t) {
      std::uint64_t s = 0;
      for (std::size_t i = 0; i < n; ++i) {
        if ((u >> i) & 1U) s |= std::uint64_t{1} << se[i].values[t];
      }
      ok = open[t][s];
    }
    if (!ok) continue;
    for (std::size_t x = 0; x < n; ++x) {
      if ((u >> x) & 1U) members[x].set(u);
    }
  }

  out.complements.assign(n, SubsetBits());
  out.supersets = members;
  for (std::size_t x = 0; x < n; ++x) {
    for (std::uint32_t u = 0; u <= full; ++u) {
      if (members[x].test(u)) out.complements[x].set(~u & full);
    }
    SubsetBits& up = out.supersets[x];
    for (std::size_t i = 0; i < n; ++i) {
      for (std::uint32_t m = 0; m <= full; ++m) {
        if (((m >> i) & 1U) && up.test(m ^ (std::uint32_t{1} << i))) up.set(m);
      }
    }
  }
  return out;
}

bool SoftT0(const Fast& a, const Fast& b, std::size_t n) {
  std::uint64_t all = 0;
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = x + 1; y < n; ++y) all |= std::uint64_t{1} << PairBit(x, y);
  }
  return ((a.separated | b.separated) & all) == all;
}

bool InducedT2(const Fast& first, const Fast& second, std::size_t n,
               PairReading reading) {
  auto ordered = [&](std::size_t x, std::size_t y) {
    return (first.complements[x] & second.supersets[y]).any();
  };
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (x == y) continue;
      if (reading == PairReading::kUnordered) {
        if (x > y) continue;
        if (!ordered(x, y) && !ordered(y, x)) return false;
      } else if (!ordered(x, y)) {
        return false;
      }
    }
  }
  return true;
}

SoftSet SplitMask(std::uint64_t mask, const std::vector<std::size_t>& sizes,
                  std::size_t universe) {
  std::vector<FinSet> sections;
  std::size_t offset = 0;
  for (std::size_t k : sizes) {
    sections.emplace_back(universe, (mask >> offset) & ((std::uint64_t{1} << k) - 1));
    offset += k;
  }
  return SoftSet(std::move(sections));
}

}  // namespace

std::vector<SoftSet> search_carriers(std::size_t max_universe,
                                     std::size_t max_params) {
  if (max_universe == 0 || max_params == 0) {
    throw InputError("search bounds must be positive");
  }
  if (max_universe > kMaxSearchUniverse || max_params > kMaxSearchParams) {
    throw CapacityError("search bounds exceed universe " +
                        std::to_string(kMaxSearchUniverse) + ", params " +
                        std::to_string(kMaxSearchParams));
  }
  std::vector<SoftSet> out;
  for (std::size_t p = 1; p <= max_params; ++p) {
    std::vector<std::size_t> sizes(p, 1);
    while (true) {
      std::size_t universe = 0;
      std::vector<FinSet> sections;
      for (std::size_t k : sizes) universe = std::max(universe, k);
      for (std::size_t k : sizes) {
        sections.emplace_back(universe, (std::uint64_t{1} << k) - 1);
      }
      out.emplace_back(std::move(sections));
      std::size_t t = p;
      while (t > 0 && sizes[t - 1] == max_universe) sizes[--t] = 1;
      if (t == 0) break;
      ++sizes[t - 1];
    }
  }
  return out;
}

std::vector<SoftTopology> search_topologies(const SoftSet& f) {
  std::vector<std::size_t> sizes;
  std::size_t points = 0;
  for (const FinSet& s : f.sections()) {
    sizes.push_back(s.size());
    points += s.size();
  }
  std::vector<SoftTopology> out;
  if (points <= kMaxRawSearchPoints) {
    for (const ClassicalTopology& d : enumerate_topologies(points)) {
      std::vector<SoftSet> opens;
      for (const FinSet& o : d.opens()) {
        opens.push_back(SplitMask(o.mask(), sizes, f.universe_size()));
      }
      out.emplace_back(f, std::move(opens));
    }
    return out;
  }
  std::vector<std::vector<ClassicalTopology>> per_param;
  for (std::size_t t = 0; t < sizes.size(); ++t) {
    std::vector<ClassicalTopology> tops;
    for (const ClassicalTopology& c : enumerate_topologies(sizes[t])) {
      tops.push_back(transport(c, f.section(t)));
    }
    per_param.push_back(std::move(tops));
  }
  std::vector<std::size_t> idx(sizes.size(), 0);
  while (true) {
    std::vector<ClassicalTopology> sigmas;
    for (std::size_t t = 0; t < idx.size(); ++t) sigmas.push_back(per_param[t][idx[t]]);
    out.push_back(canonical_topology(f, sigmas));
    std::size_t t = idx.size();
    while (t > 0 && idx[t - 1] + 1 == per_param[t - 1].size()) idx[--t] = 0;
    if (t == 0) break;
    ++idx[t - 1];
  }
  return out;
}

SearchResult search_counterexamples(const SearchOptions& options) {
  SearchResult result;
  for (const SoftSet& f : search_carriers(options.max_universe, options.max_params)) {
    ++result.carriers;
    const SoftElementsPtr se = make_soft_elements(f);
    const std::size_t n = se->size();
    const std::vector<SoftTopology> tops = search_topologies(f);
    result.topologies += tops.size();

    std::vector<Fast> fast;
    fast.reserve(tops.size());
    for (const SoftTopology& tau : tops) {
      fast.push_back(Analyse(tau, *se));
      if (!is_canonical(tau)) {
        if (result.class_ii_count++ < options.max_listed) result.class_ii.push_back(tau);
      }
    }
    for (std::size_t i = 0; i < tops.size(); ++i) {
      for (std::size_t j = 0; j < tops.size(); ++j) {
        ++result.spaces;
        if (SoftT0(fast[i], fast[j], n)) continue;
        if (!InducedT2(fast[i], fast[j], n, options.separation.pairs)) continue;
        if (result.class_i_count++ < options.max_listed) {
          result.class_i.push_back({tops[i], tops[j]});
        }
      }
    }
  }
  return result;
}

}  // namespace softbitop
