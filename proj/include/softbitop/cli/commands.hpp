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


// The check, verify, examples and search subcommands.

#ifndef SOFTBITOP_CLI_COMMANDS_HPP_
#define SOFTBITOP_CLI_COMMANDS_HPP_

#include <cstddef>
#include <cstdint>
#include <iosfwd>

#include "softbitop/cli/report.hpp"
#include "softbitop/cli/space_description.hpp"

namespace softbitop::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;  // theorem or golden failure
inline constexpr int kExitInput = 2;
inline constexpr int kExitCapacity = 3;

struct CommandOptions {
  std::uint64_t seed = 20260101;
  std::size_t max_universe = 2;
  std::size_t max_params = 2;
  std::size_t list = 5;  // search hits printed per class
  SeparationOptions separation;
};

Report cmd_check(const SpaceDescription& desc, const CommandOptions& options);
Report cmd_verify(const SpaceDescription& desc, const CommandOptions& options);
Report cmd_examples(const CommandOptions& options);
Report cmd_search(const CommandOptions& options);

/// Parses arguments, runs one subcommand and writes its report. Returns the
/// process exit code.
int run_cli(int argc, const char* const* argv, std::istream& in, std::ostream& out,
            std::ostream& err);

}  // namespace softbitop::cli

#endif  // SOFTBITOP_CLI_COMMANDS_HPP_
