// Copyright 2026 The gen2prng Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GEN2_TOOLS_COMMANDS_H_
#define GEN2_TOOLS_COMMANDS_H_

#include "CLI11.hpp"

namespace gen2::cli {

// Each subcommand's callback stores its process exit code in `exit_code`.
void AddStreamCommands(CLI::App& app, int& exit_code);
void AddProtocolCommands(CLI::App& app, int& exit_code);

}  // namespace gen2::cli

#endif  // GEN2_TOOLS_COMMANDS_H_
