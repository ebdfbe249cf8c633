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


#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "softbitop/cli/commands.hpp"
#include "softbitop/error.hpp"

using namespace softbitop;
using namespace softbitop::cli;

namespace {

std::string Fixture(const std::string& name) { return std::string(SOFTBITOP_FIXTURES) + "/" + name; }

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run Cli(std::vector<std::string> args, const std::string& stdin_text = "") {
  args.insert(args.begin(), "softbitop");
  std::vector<const char*> argv;
  for (const std::string& a : args) argv.push_back(a.c_str());
  std::istringstream in(stdin_text);
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), in, out, err);
  return {code, out.str(), err.str()};
}

std::string ParseError(const std::string& text) {
  try {
    parse_space_description(text);
  } catch (const InputError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("valid fixtures survive a JSON round trip") {
  for (const char* name : {"representation.json", "induced_hausdorff.json", "discrete_pair.json",
                           "single_parameter.json", "mixed_topologies.json",
                           "infinite_parameters.json", "symbolic_mixed.json"}) {
    CAPTURE(name);
    const SpaceDescription desc = parse_space_description(ReadFile(Fixture(name)));
    CHECK(parse_space_description(to_json(desc)) == desc);
    CHECK(parse_space_description(to_json(desc).dump(2)) == desc);
  }
}

TEST_CASE("parse errors carry a location") {
  CHECK(ParseError(ReadFile(Fixture("unknown_element.json"))) ==
        "/sections/a/1: unknown element \"2\"");
  CHECK(ParseError(ReadFile(Fixture("syntax_error.json"))).rfind("byte 53:", 0) == 0);
  CHECK(ParseError(R"({"params": ["a"], "sections": {"a": []}})") ==
        "/: missing key \"universe\"");
  CHECK(ParseError(R"({"universe": ["x", "x"], "params": [], "sections": {}})")
            .rfind("/universe", 0) == 0);
  CHECK_FALSE(ParseError(R"({"universe": ["x"], "params": ["a"], "sections": {"b": ["x"]}})")
                  .empty());
}

TEST_CASE("topology errors are reported against the offending key") {
  const SpaceDescription desc = parse_space_description(ReadFile(Fixture("not_a_topology.json")));
  try {
    build_space(desc);
    FAIL("expected InputError");
  } catch (const InputError& e) {
    CHECK(std::string(e.what()).rfind("/tau1", 0) == 0);
  }
}

TEST_CASE("exit codes") {
  CHECK(Cli({"check", Fixture("representation.json")}).code == kExitOk);
  CHECK(Cli({"verify", Fixture("single_parameter.json")}).code == kExitOk);
  CHECK(Cli({"verify", Fixture("discrete_pair.json")}).code == kExitFailure);
  CHECK(Cli({"--disjointness", "some-parameter", "verify", Fixture("discrete_pair.json")}).code ==
        kExitOk);
  const Run bad = Cli({"check", Fixture("unknown_element.json")});
  CHECK(bad.code == kExitInput);
  CHECK(bad.out.empty());
  CHECK(bad.err.find("/sections/a/1") != std::string::npos);
  CHECK(Cli({"check", Fixture("no_such_file.json")}).code == kExitInput);
  CHECK(Cli({"check", Fixture("not_a_topology.json")}).code == kExitInput);
  CHECK(Cli({"frobnicate"}).code == kExitInput);
  CHECK(Cli({"--disjointness", "sometimes", "examples"}).code == kExitInput);
  CHECK(Cli({"search", "--max-universe", "4"}).code == kExitCapacity);
  CHECK(Cli({"search", "--max-params", "3"}).code == kExitCapacity);
  CHECK(Cli({"search", "--max-universe", "1", "--max-params", "1"}).code == kExitOk);
  CHECK(Cli({"--help"}).code == kExitOk);
}

TEST_CASE("stdin input") {
  const std::string text = ReadFile(Fixture("representation.json"));
  const Run piped = Cli({"check"}, text);
  const Run dash = Cli({"check", "-"}, text);
  const Run file = Cli({"check", Fixture("representation.json")});
  CHECK(piped.code == kExitOk);
  CHECK(piped.out == file.out);
  CHECK(dash.out == file.out);
}

TEST_CASE("JSON output carries every text verdict") {
  const std::string path = Fixture("induced_hausdorff.json");
  const Report report = cmd_check(parse_space_description(ReadFile(path)), CommandOptions{});
  const Run json = Cli({"--json", "check", path});
  const nlohmann::ordered_json doc = nlohmann::ordered_json::parse(json.out);
  CHECK(doc["command"] == "check");
  CHECK(doc["exit_code"] == json.code);
  REQUIRE(doc["verdicts"].size() == report.verdicts.size());
  for (std::size_t i = 0; i < report.verdicts.size(); ++i) {
    CHECK(doc["verdicts"][i]["name"] == report.verdicts[i].key);
    CHECK(doc["verdicts"][i]["value"] == report.verdicts[i].value);
  }
  const std::string text = Cli({"check", path}).out;
  for (const ReportLine& line : report.verdicts) {
    CHECK(text.find(line.key) != std::string::npos);
  }
}

TEST_CASE("reports are deterministic and timing is opt-in") {
  const Run a = Cli({"search"});
  const Run b = Cli({"search"});
  CHECK(a.out == b.out);
  CHECK(a.out.find("time:") == std::string::npos);
  CHECK(Cli({"--timing", "search", "--max-universe", "1", "--max-params", "1"}).out.find("time:") !=
        std::string::npos);
}

TEST_CASE("the symbolic fixture is decided with a three-member witness") {
  const Run r = Cli({"check", Fixture("symbolic_mixed.json")});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("size 3: template indices [0,2], explicit members [0]") != std::string::npos);
}
