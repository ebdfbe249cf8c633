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


#include "softbitop/cli/commands.hpp"

#include <chrono>
#include <functional>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"
#include "softbitop/error.hpp"
#include "softbitop/search.hpp"

namespace softbitop::cli {
namespace {

constexpr const char* kAxioms[] = {"T0", "T1", "T2"};

std::string Witness(const softbitop::Witness& w, const Names& names) {
  if (const auto* p = std::get_if<ElementPair>(&w)) {
    return to_string(p->a, names) + " vs " + to_string(p->b, names);
  }
  return "";
}

nlohmann::ordered_json Verdict(const softbitop::Verdict& v, const Names& names) {
  if (v.holds) return true;
  return "false, witness " + Witness(v.witness, names);
}

nlohmann::ordered_json Classical(const SeparationVerdict& v,
                                 const std::function<std::string(std::size_t)>& name) {
  if (v.holds) return true;
  return "false, witness " + name(v.witness->x) + " vs " + name(v.witness->y);
}

SeparationVerdict Axiom(const BitopPair& b, std::size_t j, PairReading reading) {
  if (j == 0) return pairwise_t0(b);
  return j == 1 ? pairwise_t1(b, reading) : pairwise_t2(b, reading);
}

std::string Representation(const SESubset& k, const Names& names) {
  const Representability r = is_se_representable(k);
  if (r.representable) return "representable as " + to_string(r.candidate, names);
  return "non-representable, witness " + to_string(*r.witness, names);
}

std::string SymbolicCover(const SymbolicSpec& s, const Names& names) {
  const SymbolicVerdict v = cf_is_cover(s.family, s.target);
  if (v.holds) return "valid";
  return "invalid at label " + std::to_string(*v.label) + " (union " +
         to_string(v.union_section, names) + ", target " + to_string(v.target_section, names) +
         ")";
}

std::string SymbolicSubcover(const SymbolicSpec& s, const Names& names) {
  const FiniteSubcoverDecision d = decide_finite_subcover(s.family, s.target);
  if (!d.exists) {
    const GenericCertificate& c = *d.certificate;
    return "NONE (generic s=" + std::to_string(c.label) + " union " +
           to_string(c.union_section, names) + ", target " +
           to_string(c.target_section, names) + ")";
  }
  std::ostringstream out;
  out << "size " << d.witness->size() << ": template indices [";
  for (std::size_t i = 0; i < d.witness->template_indices.size(); ++i) {
    out << (i ? "," : "") << d.witness->template_indices[i];
  }
  out << "], explicit members [";
  for (std::size_t i = 0; i < d.witness->explicit_members.size(); ++i) {
    out << (i ? "," : "") << d.witness->explicit_members[i];
  }
  out << "]";
  return out.str();
}

void AddExtras(const SpaceDescription& desc, Report& report) {
  const Names names = desc.names();
  if (!desc.representability.empty()) {
    const SoftElementsPtr se = make_soft_elements(carrier_of(desc));
    for (std::size_t i = 0; i < desc.representability.size(); ++i) {
      const SESubset k = SESubset::OfElements(se, desc.representability[i]);
      report.add("representability[" + std::to_string(i) + "]", Representation(k, names));
    }
  }
  if (desc.symbolic) {
    report.add("symbolic.cover", SymbolicCover(*desc.symbolic, names));
    if (cf_is_cover(desc.symbolic->family, desc.symbolic->target).holds) {
      report.add("symbolic.finite_subcover", SymbolicSubcover(*desc.symbolic, names));
    }
  }
}

std::string OpensText(const SoftTopology& tau, const Names& names) {
  std::string out = "[";
  for (std::size_t i = 0; i < tau.size(); ++i) {
    out += (i ? "," : "") + to_string(tau.opens()[i], names);
  }
  return out + "]";
}

}  // namespace

Report cmd_check(const SpaceDescription& desc, const CommandOptions& options) {
  Report report{"check", {}, {}, {}, {}, std::nullopt, kExitOk};
  const Names names = desc.names();
  if (desc.tau1 || desc.tau2) {
    const SoftBitopSpace space = build_space(desc);
    report.add("F", to_string(space.carrier(), names));
    report.add("|SE(F)|", space.elements()->size());
    for (const auto* tau : {&space.tau1(), &space.tau2()}) {
      const std::string label = tau == &space.tau1() ? "tau1" : "tau2";
      report.add(label + ".opens", tau->size());
      report.add(label + ".canonical", is_canonical(*tau));
    }
    report.add("soft.T0", Verdict(pairwise_soft_t0(space), names));
    report.add("soft.T1", Verdict(pairwise_soft_t1(space, options.separation), names));
    report.add("soft.T2", Verdict(pairwise_soft_t2(space, options.separation), names));
    for (std::size_t t = 0; t < space.param_count(); ++t) {
      const BitopPair b = component_bitop(space, t);
      for (std::size_t j = 0; j < 3; ++j) {
        report.add("component." + names.param(t) + "." + kAxioms[j],
                   Classical(Axiom(b, j, options.separation.pairs),
                             [&](std::size_t x) { return names.element(x); }));
      }
    }
    if (space.elements()->size() > kMaxInducedElements) {
      throw CapacityError("|SE(F)| = " + std::to_string(space.elements()->size()) +
                          " exceeds " + std::to_string(kMaxInducedElements) +
                          " for the induced pair");
    }
    const BitopPair induced = induced_bitop(space);
    report.add("induced.tau1.is_topology", is_topology(induced.first));
    report.add("induced.tau2.is_topology", is_topology(induced.second));
    for (std::size_t j = 0; j < 3; ++j) {
      report.add(std::string("induced.") + kAxioms[j],
                 Classical(Axiom(induced, j, options.separation.pairs), [&](std::size_t x) {
                   return to_string((*space.elements())[x], names);
                 }));
    }
  }
  AddExtras(desc, report);
  return report;
}

Report cmd_verify(const SpaceDescription& desc, const CommandOptions& options) {
  Report report{"verify", {}, {}, {}, {}, std::nullopt, kExitOk};
  const Names names = desc.names();
  const SoftBitopSpace space = build_space(desc);
  VerifyOptions vo;
  vo.separation = options.separation;
  vo.seed = options.seed;
  TheoremReport tr = verify_theorems(space, vo, names);
  AddExtras(desc, report);
  report.theorems = std::move(tr.rows);
  report.notes = std::move(tr.notes);
  if (!TheoremReport{report.theorems, {}}.all_passed()) report.exit_code = kExitFailure;
  return report;
}

Report cmd_examples(const CommandOptions& options) {
  Report report{"examples", {}, {}, {}, {}, std::nullopt, kExitOk};
  auto expect = [&](const std::string& key, const std::string& computed,
                    const std::string& expected) {
    report.add(key, computed);
    if (computed != expected) {
      report.mismatches.push_back(key + ": expected \"" + expected + "\"");
    }
  };

  {
    const Names names{{"x1", "x2", "x3", "x4"}, {"alpha", "beta"}};
    const SoftSet f({FinSet::Of(4, {0, 1}), FinSet::Of(4, {2, 3})});
    const SoftElementsPtr se = make_soft_elements(f);
    const std::vector<SoftElement> k{{{0, 2}}, {{1, 3}}};
    expect("representation", Representation(SESubset::OfElements(se, k), names),
           "non-representable, witness (x1,x4)");
  }

  {
    const Names names{{"0", "1"}, {"1", "2"}};
    const SoftSet f = SoftSet::Uniform(2, FinSet::Full(2));
    const SoftBitopSpace space(SoftTopology::Indiscrete(f), SoftTopology::Indiscrete(f));
    const SoftElementsPtr& se = space.elements();
    const SEFamily star = induced_topology(space.tau1(), se);
    const std::vector<SoftElement> u{{{0, 0}}, {{1, 1}}};
    const std::vector<SoftElement> v{{{0, 1}}, {{1, 0}}};
    const bool has_uv = star.contains(SESubset::OfElements(se, u)) &&
                        star.contains(SESubset::OfElements(se, v));
    expect("induced-hausdorff.opens", has_uv ? "U and V are induced opens" : "U or V missing",
           "U and V are induced opens");
    const bool t0 = pairwise_soft_t0(space).holds;
    const SeparationVerdict t2 = pairwise_t2(induced_bitop(space), options.separation.pairs);
    expect("induced-hausdorff",
           std::string("soft T0=") + (t0 ? "true" : "false") +
               ", induced pairwise T2=" + (t2.holds ? "true" : "false"),
           "soft T0=false, induced pairwise T2=true");
    if (!t2.holds) {
      report.notes.push_back("induced-hausdorff: " + to_string((*se)[t2.witness->x], names) +
                             " and " + to_string((*se)[t2.witness->y], names) +
                             " have no disjoint induced neighbourhoods");
    }
    if (!is_topology(star.sets())) {
      report.notes.push_back("induced-hausdorff: the induced family has " +
                             std::to_string(star.size()) +
                             " members and is not closed under intersection");
    }
  }

  {
    const Names names{{"0", "1"}, {}};
    const SymbolicSpec s{CofiniteSoftSet(FinSet::Full(2)),
                         TemplateFamily(2, IndexedTemplate{FinSet::Of(2, {1}), FinSet::Of(2, {0})},
                                        {})};
    const bool cover = cf_is_cover(s.family, s.target).holds;
    std::string computed = cover ? "cover valid" : "cover invalid";
    if (cover) {
      const FiniteSubcoverDecision d = decide_finite_subcover(s.family, s.target);
      computed += d.exists ? ", finite subcover FOUND" : ", finite subcover NONE (generic s uncovered)";
      if (!d.exists) {
        report.add("infinite-parameters.certificate",
                   "union " + to_string(d.certificate->union_section, names) + ", target " +
                       to_string(d.certificate->target_section, names));
      }
    }
    expect("infinite-parameters", computed, "cover valid, finite subcover NONE (generic s uncovered)");
  }

  if (!report.mismatches.empty()) report.exit_code = kExitFailure;
  return report;
}

Report cmd_search(const CommandOptions& options) {
  Report report{"search", {}, {}, {}, {}, std::nullopt, kExitOk};
  SearchOptions so;
  so.max_universe = options.max_universe;
  so.max_params = options.max_params;
  so.separation = options.separation;
  so.max_listed = options.list;
  const SearchResult r = search_counterexamples(so);
  report.add("max_universe", options.max_universe);
  report.add("max_params", options.max_params);
  report.add("carriers", r.carriers);
  report.add("soft_topologies", r.topologies);
  report.add("spaces", r.spaces);
  report.add("class_i", r.class_i_count);
  report.add("class_ii", r.class_ii_count);
  const Names names;
  for (std::size_t i = 0; i < r.class_i.size(); ++i) {
    const SearchSpace& s = r.class_i[i];
    report.add("class_i[" + std::to_string(i) + "]",
               "F=" + to_string(s.tau1.ambient(), names) + " tau1=" + OpensText(s.tau1, names) +
                   " tau2=" + OpensText(s.tau2, names));
  }
  for (std::size_t i = 0; i < r.class_ii.size(); ++i) {
    const SoftTopology& tau = r.class_ii[i];
    report.add("class_ii[" + std::to_string(i) + "]",
               "F=" + to_string(tau.ambient(), names) + " tau=" + OpensText(tau, names));
  }
  return report;
}

int run_cli(int argc, const char* const* argv, std::istream& in, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Soft bitopological spaces: deciders, theorem checks and searches"};
  app.require_subcommand(1);
  CommandOptions options;
  bool json = false;
  bool timing = false;
  bool unordered = false;
  std::string disjointness = "null";
  std::string input;

  app.add_flag("--json", json, "Emit the report as JSON");
  app.add_flag("--timing", timing, "Append wall-clock time to the report");
  app.add_option("--seed", options.seed, "Seed for randomized checks")->capture_default_str();
  app.add_flag("--unordered-pairs", unordered,
               "Quantify T1/T2 over unordered pairs, either orientation");
  app.add_option("--disjointness", disjointness,
                 "How H and K must be disjoint in soft T2: null (every section empty) or "
                 "some-parameter")
      ->check(CLI::IsMember({"null", "some-parameter"}))
      ->capture_default_str();

  CLI::App* check = app.add_subcommand("check", "Decide separation properties of a space");
  CLI::App* verify = app.add_subcommand("verify", "Evaluate the structural theorems on a space");
  CLI::App* examples = app.add_subcommand("examples", "Reproduce the worked examples");
  CLI::App* search = app.add_subcommand("search", "Census of small counterexamples");
  for (CLI::App* sub : {check, verify}) {
    sub->add_option("input", input, "Space description (JSON); stdin if absent or -");
  }
  search->add_option("--max-universe", options.max_universe)->capture_default_str();
  search->add_option("--max-params", options.max_params)->capture_default_str();
  search->add_option("--list", options.list, "Hits printed per class")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInput;
  }
  options.separation.pairs = unordered ? PairReading::kUnordered : PairReading::kOrdered;
  options.separation.disjointness =
      disjointness == "null" ? Disjointness::kNullSoftSet : Disjointness::kSomeParameter;

  const auto start = std::chrono::steady_clock::now();
  try {
    Report report;
    if (*check || *verify) {
      std::string text;
      if (input.empty() || input == "-") {
        text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
      } else {
        std::ifstream file(input, std::ios::binary);
        if (!file) throw InputError(input + ": cannot open");
        text.assign(std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>());
      }
      const SpaceDescription desc = parse_space_description(text);
      report = *check ? cmd_check(desc, options) : cmd_verify(desc, options);
    } else if (*examples) {
      report = cmd_examples(options);
    } else {
      report = cmd_search(options);
    }
    if (timing) {
      report.seconds =
          std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
    out << (json ? render_json(report) : render_text(report));
    return report.exit_code;
  } catch (const CapacityError& e) {
    err << "capacity: " << e.what() << "\n";
    return kExitCapacity;
  } catch (const Error& e) {
    err << "input: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::logic_error& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitFailure;
  }
}

}  // namespace softbitop::cli
