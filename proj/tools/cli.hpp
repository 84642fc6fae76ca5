/*
   Copyright 2026 The invar-lattice Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef INVLAT_TOOLS_CLI_HPP
#define INVLAT_TOOLS_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

#include "invlat/error.hpp"

namespace invlat::cli {

enum ExitCode : int { ok = 0, computation_error = 1, usage_error = 2, theory_violation = 3 };

int exit_code_for(ErrorCode code) noexcept;

// args excludes the program name. Reports go to out, diagnostics to err as
// "error[<code>]: <message>".
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace invlat::cli

#endif
