// Copyright 2026 The examsched Authors.
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

#ifndef EXAMSCHED_CLI_HPP
#define EXAMSCHED_CLI_HPP

#include <string>
#include <vector>

#include "examsched/errors.hpp"
#include "examsched/model.hpp"

namespace examsched {

struct CliOptions {
  ScheduleConfig config;
  bool check_only = false;  // --check: validate the inputs, run nothing
  bool help = false;
  std::string help_text;
};

// Flags after the program name:
//   -t, --rate N          students per proctor (default 54)
//   --supervisor-rate N   students per supervisor (default 650)
//   --input-dir PATH      where the five input csv files live (default .)
//   --output-dir PATH     where the four outputs go (default .)
//   --check               validate the datasets and stop
// Throws SchedError(errc::usage) on anything malformed, including
// non-positive rates.
CliOptions parse_flags(const std::vector<std::string>& args);

// Exit code for a failure: 2 usage, 3 bad input data, 4 rooms cannot seat
// a test, 5 the crews cannot be staffed, 6 crew organization error.
int exit_code_for(errc code);

// Full command: parse, run (or just validate), report. Returns the
// process exit code.
int run_cli(int argc, const char* const* argv);

}  // namespace examsched

#endif  // EXAMSCHED_CLI_HPP
