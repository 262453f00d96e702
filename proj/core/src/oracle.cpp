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

#include "examsched/oracle.hpp"

#include <algorithm>
#include <string>

#include "examsched/errors.hpp"

namespace examsched {
namespace oracle {

std::optional<RoomsWitness> brute_force_rooms(
    const std::vector<int>& capacities, int demand, int rate) {
  const int n = static_cast<int>(capacities.size());
  if (n > kLimits.max_rooms) {
    throw SchedError(errc::instance_too_large,
                     std::to_string(n) + " rooms exceeds the enumeration cap "
                     "of " + std::to_string(kLimits.max_rooms));
  }

  std::optional<RoomsWitness> best;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    long long seats = 0;
    long long weight = 0;
    for (int i = 0; i < n; ++i) {
      if (mask & (1u << i)) {
        seats += capacities[i];
        weight += (capacities[i] + rate - 1) / rate;
      }
    }
    if (seats < demand) continue;
    if (!best || weight < best->objective) {
      RoomsWitness witness;
      witness.objective = weight;
      witness.selection.resize(n);
      for (int i = 0; i < n; ++i) witness.selection[i] = (mask >> i) & 1u;
      best = std::move(witness);
    }
  }
  return best;
}

namespace {

struct EquitySearch {
  const AvailabilityMatrix& availability;
  const DemandVector& demands;
  const std::vector<int>& loads;
  std::vector<int> group_of_test;
  int average_floor = 0;
  int average_ceil = 0;

  std::vector<int> shifts;                 // per TA, current branch
  std::vector<std::vector<char>> used;     // [ta][group]
  std::vector<std::vector<char>> current;  // [ta][test]
  std::optional<EquityWitness> best;

  void finish() {
    int cap = 0;
    for (size_t p = 0; p < availability.tas.size(); ++p) {
      cap = std::max(cap, shifts[p] + loads[p] - average_ceil);
      cap = std::max(cap, average_floor - loads[p] - shifts[p]);
    }
    if (!best || cap < best->bound) {
      best = EquityWitness{cap, current};
    }
  }

  // Pick `remaining` more TAs for test t, scanning from `from` upward so
  // each subset is visited once.
  void pick(size_t t, int remaining, size_t from) {
    if (remaining == 0) {
      descend(t + 1);
      return;
    }
    for (size_t p = from; p < availability.tas.size(); ++p) {
      if (!availability.cells[p][t]) continue;
      if (used[p][group_of_test[t]]) continue;
      used[p][group_of_test[t]] = 1;
      current[p][t] = 1;
      ++shifts[p];
      pick(t, remaining - 1, p + 1);
      --shifts[p];
      current[p][t] = 0;
      used[p][group_of_test[t]] = 0;
    }
  }

  void descend(size_t t) {
    if (t == availability.tests.size()) {
      finish();
      return;
    }
    pick(t, demands.per_test[t], 0);
  }
};

}  // namespace

std::optional<EquityWitness> brute_force_equity(
    const AvailabilityMatrix& availability, const DemandVector& demands,
    const std::vector<int>& loads) {
  const int ta_count = static_cast<int>(availability.tas.size());
  const int test_count = static_cast<int>(availability.tests.size());
  if (ta_count > kLimits.max_tas || test_count > kLimits.max_tests) {
    throw SchedError(errc::instance_too_large,
                     std::to_string(ta_count) + " TAs x " +
                         std::to_string(test_count) +
                         " tests exceeds the enumeration cap");
  }

  EquitySearch search{availability, demands, loads};
  search.group_of_test = availability.test_group_ids();

  long long total = 0;
  for (int load : loads) total += load;
  for (int d : demands.per_test) total += d;
  if (ta_count > 0) {
    search.average_floor = static_cast<int>(total / ta_count);
    search.average_ceil =
        static_cast<int>((total + ta_count - 1) / ta_count);
  } else if (demands.total() == 0) {
    return EquityWitness{0, {}};
  } else {
    return std::nullopt;
  }

  search.shifts.assign(ta_count, 0);
  search.used.assign(ta_count,
                     std::vector<char>(availability.slot_groups.size(), 0));
  search.current.assign(ta_count, std::vector<char>(test_count, 0));
  search.descend(0);
  return search.best;
}

}  // namespace oracle
}  // namespace examsched
