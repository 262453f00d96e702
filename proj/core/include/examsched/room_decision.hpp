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

#ifndef EXAMSCHED_ROOM_DECISION_HPP
#define EXAMSCHED_ROOM_DECISION_HPP

#include <vector>

#include "examsched/model.hpp"

namespace examsched {

// Proctors required to cover `capacity` seats: ceil(capacity / rate).
int room_weight(int capacity, int rate);

// Students that must leave a room before it needs one proctor fewer:
// capacity mod rate, in [0, rate).
int slack_priority(int capacity, int rate);

// Classic 0-1 knapsack instance; items have a profit and a size and the
// selected sizes must fit within `capacity`.
struct KnapsackInstance {
  std::vector<long long> profits;
  std::vector<long long> weights;
  long long capacity = 0;
};

struct KnapsackSolution {
  std::vector<bool> selection;
  long long objective = 0;
};

// Exact dynamic program over capacities 0..capacity with an item-by-item
// decision bit plane for reconstruction. Among optimal selections, returns
// the lexicographically smallest one in item order, so results are
// reproducible byte for byte.
KnapsackSolution solve_knapsack_dp(const KnapsackInstance& instance);

// Picks the rooms covering `demand` students with the fewest proctors.
// Formulated as the complementary knapsack: leaving room i OUT yields
// profit room_weight(c_i), the left-out seats must fit within the total
// slack sum(c) - demand. The complement of that knapsack's selection is
// returned; it covers the demand at minimum total weight.
//
// Throws SchedError(errc::insufficient_capacity) when the candidates
// cannot seat the demand.
std::vector<bool> choose_rooms(const std::vector<int>& capacities, int demand,
                               int rate);
std::vector<bool> choose_rooms(const std::vector<Room>& candidates, int demand,
                               int rate);

// The greedy walk state: remaining slack, per-room priorities, and the
// visiting order (priorities ascending, ties by input position).
struct SlackState {
  int remaining = 0;
  std::vector<int> priorities;
  std::vector<int> order;
};

SlackState make_slack_state(const std::vector<int>& capacities, int demand,
                            int rate);

struct SlackDistribution {
  std::vector<int> enrolled;
  std::vector<int> proctors;
};

// Distributes the selected rooms' spare seats so that sum(enrolled) equals
// the demand exactly while shaving proctors where it is cheapest: rooms
// are visited in priority order and each gives up its priority worth of
// seats (dropping one proctor) while slack lasts; a final remainder that
// cannot drop anyone is parked in the room visited when it runs out, and
// any slack left after the walk comes off the fullest room.
//
// Inputs are the selected rooms only and must be able to seat the demand.
SlackDistribution distribute_slack(const std::vector<int>& capacities,
                                   int demand, int rate);

// Full per-test room decision: choose_rooms, then distribute_slack, then
// envelope numbering in candidate order and the supervisor head count
// (ceil(demand / supervisor_rate), at least 1 for a non-empty test).
ScheduledTest schedule_test(const TestSession& test, const RoomCatalog& catalog,
                            const ScheduleConfig& config);

}  // namespace examsched

#endif  // EXAMSCHED_ROOM_DECISION_HPP
