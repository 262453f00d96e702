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

#ifndef EXAMSCHED_ERRORS_HPP
#define EXAMSCHED_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace examsched {

// Every failure the engine can raise carries one of these codes so callers
// (the CLI, the tests) can react without string matching.
enum class errc {
  // csv / file layer
  bad_csv,
  missing_file,
  // ingest
  bad_header,
  missing_footer,
  malformed_time,
  non_integer_demand,
  duplicate_room,
  non_positive_capacity,
  unknown_level,
  duplicate_name,
  non_integer_experience,
  total_mismatch,
  // cross-dataset validation
  validation_failed,
  // room decision
  insufficient_capacity,
  // personnel decision
  lecturer_overflow,
  unknown_slot,
  no_proctors,
  infeasible_assignment,
  unknown_ta,
  // crew organization
  insufficient_undergraduates,
  crew_size_mismatch,
  // oracles
  instance_too_large,
  // cli
  usage
};

const char* errc_name(errc code);

class SchedError : public std::runtime_error {
 public:
  SchedError(errc code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  errc code() const { return code_; }

 private:
  errc code_;
};

// Raised when the equity solve cannot staff the round even with the
// deviation bound wide open; lists where the coverage breaks down.
class InfeasibleAssignmentError : public SchedError {
 public:
  struct Shortfall {
    std::string scope;  // test label or "<date> <slot>" group
    int required = 0;
    int available = 0;
  };

  InfeasibleAssignmentError(const std::string& message,
                            std::vector<Shortfall> shortfalls)
      : SchedError(errc::infeasible_assignment, message),
        shortfalls_(std::move(shortfalls)) {}

  const std::vector<Shortfall>& shortfalls() const { return shortfalls_; }

 private:
  std::vector<Shortfall> shortfalls_;
};

}  // namespace examsched

#endif  // EXAMSCHED_ERRORS_HPP
