// Copyright 2026 The persuade Authors
//
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

#ifndef PERSUASION_CLI_HPP_
#define PERSUASION_CLI_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace persuasion {

// Runs the command-line front end. args excludes the program name. Returns
// the process exit status: 0 on success, 2 on validation errors (bad games,
// malformed arguments, unreadable files), 1 on internal errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace persuasion

#endif  // PERSUASION_CLI_HPP_
