/*
   Copyright 2026 The valfield Authors

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

#ifndef VALFIELD_TOOLS_CLI_HPP
#define VALFIELD_TOOLS_CLI_HPP

#include <ostream>

namespace valfield::cli {

/// Runs the valfield command line. For verify, returns 0 iff no claim failed;
/// 1 when a claim failed; 2 for usage errors, unknown scenarios and bad input.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace valfield::cli

#endif
