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

#ifndef EXAMSCHED_ORACLE_HPP
#define EXAMSCHED_ORACLE_HPP

#include <optional>
#include <vector>

#include "examsched/personnel_decision.hpp"

namespace examsched {
namespace oracle {

// Exhaustive reference solvers, deliberately naive and kept independent
// of the production code paths they certify. Instances are capped where
// full enumeration still finishes within seconds.
struct SmallInstanceLimits {
  int max_rooms = 14;
  int max_tas = 8;
  int max_tests = 4;
};

inline constexpr SmallInstanceLimits kLimits{14, 8, 4};

struct RoomsWitness {
  long long objective = 0;          // minimum total proctor weight
  std::vector<bool> selection;
};

// Minimum-weight covering room subset over all 2^N subsets, or nullopt
// when no subset can seat the demand. Throws
// SchedError(errc::instance_too_large) beyond kLimits.max_rooms.
std::optional<RoomsWitness> brute_force_rooms(
    const std::vector<int>& capacities, int demand, int rate);

struct EquityWitness {
  int bound = 0;                          // minimum deviation cap
  std::vector<std::vector<char>> cells;
};

// Enumerates every availability- and slot-respecting assignment that
// meets the demands exactly and returns the minimum deviation cap, or
// nullopt when no assignment exists. Throws instance_too_large beyond
// kLimits. `loads` is the per-TA service history.
std::optional<EquityWitness> brute_force_equity(
    const AvailabilityMatrix& availability, const DemandVector& demands,
    const std::vector<int>& loads);

}  // namespace oracle
}  // namespace examsched

#endif  // EXAMSCHED_ORACLE_HPP
