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

// gen2prng: command-line front end for the gen2 library.

#include <iostream>

#include "CLI11.hpp"
#include "commands.h"
#include "gen2/keystore_io.h"
#include "report.h"

int main(int argc, char** argv) {
  CLI::App app{"EPC Gen2 filtered-LFSR PRNG, statistics and authentication scenarios"};
  app.require_subcommand(1);
  int exit_code = gen2::cli::kExitPass;
  gen2::cli::AddStreamCommands(app, exit_code);
  gen2::cli::AddProtocolCommands(app, exit_code);
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : gen2::cli::kExitUsage;
  } catch (const gen2::cli::UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return gen2::cli::kExitUsage;
  } catch (const gen2::KeystoreError& e) {
    std::cerr << "keystore error: " << e.what() << "\n";
    return gen2::cli::kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return gen2::cli::kExitUsage;
  }
  return exit_code;
}
