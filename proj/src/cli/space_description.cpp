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


#include "softbitop/cli/space_description.hpp"

#include <algorithm>
#include <charconv>
#include <map>

#include "softbitop/error.hpp"

namespace softbitop::cli {
namespace {

using Json = nlohmann::ordered_json;

[[noreturn]] void Fail(const std::string& where, const std::string& what) {
  throw InputError((where.empty() ? std::string("/") : where) + ": " + what);
}

std::string Escape(const std::string& key) {
  std::string out;
  for (char c : key) {
    if (c == '~') {
      out += "~0";
    } else if (c == '/') {
      out += "~1";
    } else {
      out += c;
    }
  }
  return out;
}

std::string Child(const std::string& where, const std::string& key) {
  return where + "/" + Escape(key);
}
std::string Child(const std::string& where, std::size_t i) {
  return where + "/" + std::to_string(i);
}

const Json& Require(const Json& obj, const std::string& where, const char* key) {
  if (!obj.contains(key)) Fail(where, std::string("missing key \"") + key + "\"");
  return obj.at(key);
}

void ExpectObject(const Json& j, const std::string& where) {
  if (!j.is_object()) Fail(where, "expected an object");
}
void ExpectArray(const Json& j, const std::string& where) {
  if (!j.is_array()) Fail(where, "expected an array");
}

std::vector<std::string> NameList(const Json& j, const std::string& where) {
  ExpectArray(j, where);
  std::vector<std::string> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_string()) Fail(Child(where, i), "expected a string");
    const std::string name = j[i].get<std::string>();
    if (std::find(out.begin(), out.end(), name) != out.end()) {
      Fail(Child(where, i), "duplicate name \"" + name + "\"");
    }
    out.push_back(name);
  }
  return out;
}

class Resolver {
 public:
  explicit Resolver(const SpaceDescription& d) : d_(d) {}

  std::size_t Element(const Json& j, const std::string& where) const {
    if (!j.is_string()) Fail(where, "expected an element name");
    const auto it = std::find(d_.universe.begin(), d_.universe.end(), j.get<std::string>());
    if (it == d_.universe.end()) {
      Fail(where, "unknown element \"" + j.get<std::string>() + "\"");
    }
    return static_cast<std::size_t>(it - d_.universe.begin());
  }

  std::size_t Param(const std::string& name, const std::string& where) const {
    const auto it = std::find(d_.params.begin(), d_.params.end(), name);
    if (it == d_.params.end()) Fail(where, "unknown parameter \"" + name + "\"");
    return static_cast<std::size_t>(it - d_.params.begin());
  }

  FinSet Set(const Json& j, const std::string& where) const {
    ExpectArray(j, where);
    FinSet s(d_.universe.size());
    for (std::size_t i = 0; i < j.size(); ++i) s.insert(Element(j[i], Child(where, i)));
    return s;
  }

  // {param: [names]}; missing parameters are empty.
  SoftSet Soft(const Json& j, const std::string& where) const {
    ExpectObject(j, where);
    std::vector<FinSet> sections(d_.params.size(), FinSet(d_.universe.size()));
    for (const auto& [key, value] : j.items()) {
      const std::string at = Child(where, key);
      sections[Param(key, at)] = Set(value, at);
    }
    return SoftSet(std::move(sections));
  }

  SoftElement Selection(const Json& j, const std::string& where) const {
    ExpectObject(j, where);
    SoftElement a{std::vector<std::size_t>(d_.params.size(), 0)};
    std::vector<bool> seen(d_.params.size(), false);
    for (const auto& [key, value] : j.items()) {
      const std::string at = Child(where, key);
      const std::size_t t = Param(key, at);
      a.values[t] = Element(value, at);
      seen[t] = true;
    }
    for (std::size_t t = 0; t < seen.size(); ++t) {
      if (!seen[t]) Fail(where, "missing parameter \"" + d_.params[t] + "\"");
    }
    return a;
  }

  CofiniteSoftSet Cofinite(const Json& j, const std::string& where) const {
    ExpectObject(j, where);
    const FinSet def = Set(Require(j, where, "default"), Child(where, "default"));
    std::map<Label, FinSet> exceptions;
    if (j.contains("exceptions")) {
      const std::string ew = Child(where, "exceptions");
      ExpectObject(j.at("exceptions"), ew);
      for (const auto& [key, value] : j.at("exceptions").items()) {
        const std::string at = Child(ew, key);
        Label label = 0;
        const auto [end, ec] = std::from_chars(key.data(), key.data() + key.size(), label);
        if (ec != std::errc() || end != key.data() + key.size() || key.empty()) {
          Fail(at, "exception label must be a non-negative integer");
        }
        exceptions.emplace(label, Set(value, at));
      }
    }
    return CofiniteSoftSet(def, std::move(exceptions));
  }

 private:
  const SpaceDescription& d_;
};

TopologySpec ParseTopology(const Json& j, const std::string& where, const Resolver& r,
                           std::size_t param_count) {
  TopologySpec spec;
  if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i) spec.opens.push_back(r.Soft(j[i], Child(where, i)));
    return spec;
  }
  ExpectObject(j, where);
  const Json& gen = Require(j, where, "generate");
  if (gen != "canonical") Fail(Child(where, "generate"), "only \"canonical\" is supported");
  spec.canonical = true;
  spec.subbases.assign(param_count, {});
  if (j.contains("subbases")) {
    const std::string sw = Child(where, "subbases");
    ExpectObject(j.at("subbases"), sw);
    for (const auto& [key, value] : j.at("subbases").items()) {
      const std::string at = Child(sw, key);
      const std::size_t t = r.Param(key, at);
      ExpectArray(value, at);
      for (std::size_t i = 0; i < value.size(); ++i) {
        spec.subbases[t].push_back(r.Set(value[i], Child(at, i)));
      }
    }
  }
  return spec;
}

Json SetJson(const FinSet& s, const SpaceDescription& d) {
  Json out = Json::array();
  for (std::size_t x : s.elements()) out.push_back(d.universe[x]);
  return out;
}

Json SoftJson(const SoftSet& h, const SpaceDescription& d) {
  Json out = Json::object();
  for (std::size_t t = 0; t < d.params.size(); ++t) out[d.params[t]] = SetJson(h.section(t), d);
  return out;
}

Json CofiniteJson(const CofiniteSoftSet& s, const SpaceDescription& d) {
  Json out = Json::object();
  out["default"] = SetJson(s.default_section(), d);
  if (!s.exceptions().empty()) {
    Json ex = Json::object();
    for (const auto& [label, section] : s.exceptions()) {
      ex[std::to_string(label)] = SetJson(section, d);
    }
    out["exceptions"] = std::move(ex);
  }
  return out;
}

Json TopologyJson(const TopologySpec& spec, const SpaceDescription& d) {
  if (!spec.canonical) {
    Json out = Json::array();
    for (const SoftSet& h : spec.opens) out.push_back(SoftJson(h, d));
    return out;
  }
  Json subbases = Json::object();
  for (std::size_t t = 0; t < d.params.size(); ++t) {
    Json list = Json::array();
    for (const FinSet& s : spec.subbases[t]) list.push_back(SetJson(s, d));
    subbases[d.params[t]] = std::move(list);
  }
  return Json{{"generate", "canonical"}, {"subbases", std::move(subbases)}};
}

SoftTopology BuildTopology(const TopologySpec& spec, const SoftSet& f,
                           const std::string& where) {
  try {
    if (!spec.canonical) {
      for (std::size_t i = 0; i < spec.opens.size(); ++i) {
        if (!soft_subset(spec.opens[i], f)) {
          Fail(Child(where, i), "open is not a soft subset of F");
        }
      }
      return SoftTopology(f, spec.opens);
    }
    std::vector<ClassicalTopology> sigmas;
    for (std::size_t t = 0; t < f.param_count(); ++t) {
      for (const FinSet& s : spec.subbases[t]) {
        if (!s.subset_of(f.section(t))) {
          Fail(where + "/subbases", "subbase set escapes its section");
        }
      }
      sigmas.push_back(generate_topology(spec.subbases[t], f.section(t)));
    }
    return canonical_topology(f, sigmas);
  } catch (const InputError& e) {
    const std::string msg = e.what();
    if (!msg.empty() && msg.front() == '/') throw;
    Fail(where, msg);
  }
}

}  // namespace

SpaceDescription parse_space_description(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError("byte " + std::to_string(e.byte) + ": JSON syntax error");
  }
  return parse_space_description(doc);
}

SpaceDescription parse_space_description(const Json& doc) {
  ExpectObject(doc, "");
  SpaceDescription d;
  d.universe = NameList(Require(doc, "", "universe"), "/universe");
  if (d.universe.empty() || d.universe.size() > kMaxUniverse) {
    Fail("/universe", "needs between 1 and " + std::to_string(kMaxUniverse) + " elements");
  }
  if (doc.contains("params")) d.params = NameList(doc.at("params"), "/params");
  const Resolver r(d);

  if (!d.params.empty()) {
    const Json& sections = Require(doc, "", "sections");
    ExpectObject(sections, "/sections");
    d.sections.assign(d.params.size(), FinSet(d.universe.size()));
    std::vector<bool> seen(d.params.size(), false);
    for (const auto& [key, value] : sections.items()) {
      const std::string at = Child("/sections", key);
      const std::size_t t = r.Param(key, at);
      d.sections[t] = r.Set(value, at);
      seen[t] = true;
    }
    for (std::size_t t = 0; t < seen.size(); ++t) {
      if (!seen[t]) Fail("/sections", "missing parameter \"" + d.params[t] + "\"");
    }
  }

  for (const char* key : {"tau1", "tau2"}) {
    if (!doc.contains(key)) continue;
    if (d.params.empty()) Fail(std::string("/") + key, "topologies need parameters");
    TopologySpec spec = ParseTopology(doc.at(key), std::string("/") + key, r,
                                      d.params.size());
    (std::string(key) == "tau1" ? d.tau1 : d.tau2) = std::move(spec);
  }

  if (doc.contains("representability")) {
    const Json& list = doc.at("representability");
    ExpectArray(list, "/representability");
    for (std::size_t i = 0; i < list.size(); ++i) {
      const std::string at = Child("/representability", i);
      ExpectArray(list[i], at);
      std::vector<SoftElement> k;
      for (std::size_t j = 0; j < list[i].size(); ++j) {
        k.push_back(r.Selection(list[i][j], Child(at, j)));
      }
      d.representability.push_back(std::move(k));
    }
  }

  if (doc.contains("symbolic")) {
    const Json& s = doc.at("symbolic");
    ExpectObject(s, "/symbolic");
    CofiniteSoftSet target = r.Cofinite(Require(s, "/symbolic", "target"), "/symbolic/target");
    std::optional<IndexedTemplate> tmpl;
    if (s.contains("template")) {
      const Json& t = s.at("template");
      if (t.is_array()) Fail("/symbolic/template", "only one indexed template is supported");
      ExpectObject(t, "/symbolic/template");
      tmpl = IndexedTemplate{
          r.Set(Require(t, "/symbolic/template", "at_index"), "/symbolic/template/at_index"),
          r.Set(Require(t, "/symbolic/template", "default"), "/symbolic/template/default")};
    }
    std::vector<CofiniteSoftSet> members;
    if (s.contains("explicit")) {
      ExpectArray(s.at("explicit"), "/symbolic/explicit");
      for (std::size_t i = 0; i < s.at("explicit").size(); ++i) {
        members.push_back(r.Cofinite(s.at("explicit")[i], Child("/symbolic/explicit", i)));
      }
    }
    d.symbolic = SymbolicSpec{std::move(target),
                              TemplateFamily(d.universe.size(), tmpl, std::move(members))};
  }
  return d;
}

nlohmann::ordered_json to_json(const SpaceDescription& d) {
  Json out = Json::object();
  out["universe"] = d.universe;
  if (!d.params.empty()) {
    out["params"] = d.params;
    Json sections = Json::object();
    for (std::size_t t = 0; t < d.params.size(); ++t) {
      sections[d.params[t]] = SetJson(d.sections[t], d);
    }
    out["sections"] = std::move(sections);
  }
  if (d.tau1) out["tau1"] = TopologyJson(*d.tau1, d);
  if (d.tau2) out["tau2"] = TopologyJson(*d.tau2, d);
  if (!d.representability.empty()) {
    Json list = Json::array();
    for (const auto& k : d.representability) {
      Json members = Json::array();
      for (const SoftElement& a : k) {
        Json m = Json::object();
        for (std::size_t t = 0; t < d.params.size(); ++t) m[d.params[t]] = d.universe[a.values[t]];
        members.push_back(std::move(m));
      }
      list.push_back(std::move(members));
    }
    out["representability"] = std::move(list);
  }
  if (d.symbolic) {
    Json s = Json::object();
    s["target"] = CofiniteJson(d.symbolic->target, d);
    if (const auto& tmpl = d.symbolic->family.indexed_template()) {
      s["template"] = Json{{"at_index", SetJson(tmpl->at_index, d)},
                           {"default", SetJson(tmpl->fallback, d)}};
    }
    Json members = Json::array();
    for (const CofiniteSoftSet& e : d.symbolic->family.explicit_members()) {
      members.push_back(CofiniteJson(e, d));
    }
    s["explicit"] = std::move(members);
    out["symbolic"] = std::move(s);
  }
  return out;
}

SoftSet carrier_of(const SpaceDescription& d) {
  if (d.params.empty()) throw InputError("/params: the space has no parameters");
  return SoftSet(d.sections);
}

SoftBitopSpace build_space(const SpaceDescription& d) {
  const SoftSet f = carrier_of(d);
  if (!d.tau1) Fail("/tau1", "missing topology");
  if (!d.tau2) Fail("/tau2", "missing topology");
  return SoftBitopSpace(BuildTopology(*d.tau1, f, "/tau1"), BuildTopology(*d.tau2, f, "/tau2"));
}

}  // namespace softbitop::cli
