// Copyright 2026 The qipflow Authors
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

#ifndef QIPFLOW_CLI_CLI_H
#define QIPFLOW_CLI_CLI_H

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace qipflow::cli {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitNumerical = 3;

/// Runs the command line tool. Output that is not redirected with --out goes
/// to `out`; diagnostics go to `err`. Returns the process exit code.
int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

/// `key = value` lines, `#` comments, blank lines ignored. Throws
/// InvalidInput on malformed lines or duplicate keys.
std::map<std::string, std::string> parse_config(std::istream &in);

/// Gnuplot script for figure 1 (sweep CSV), 2 (three qip-flow CSVs) or 3
/// (one qip-flow CSV with comparison columns). Throws InvalidInput if a CSV
/// is missing or lacks the expected columns.
std::string plot_script(int figure, const std::vector<std::string> &csv_paths);

}  // namespace qipflow::cli

#endif
