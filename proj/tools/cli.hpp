//
// Copyright 2026 The dpdc Authors
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
//

#ifndef DPDC_TOOLS_CLI_H_
#define DPDC_TOOLS_CLI_H_

#include <iosfwd>
#include <string>
#include <vector>

namespace dpdc::cli {

// Runs one CLI invocation. `args` excludes the program name. Reports go to
// `out` (or the --output path), diagnostics to `err`. Exit status: 0 ok,
// 1 file/parse errors, 2 usage errors, 3 selftest failure.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace dpdc::cli

#endif  // DPDC_TOOLS_CLI_H_
