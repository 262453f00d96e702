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

#include "examsched/room_decision.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <string>

#include "examsched/errors.hpp"

namespace examsched {

int room_weight(int capacity, int rate) {
  assert(rate >= 1 && capacity >= 0);
  return static_cast<int>((static_cast<long long>(capacity) + rate - 1) / rate);
}

int slack_priority(int capacity, int rate) {
  assert(rate >= 1 && capacity >= 0);
  return capacity % rate;
}

KnapsackSolution solve_knapsack_dp(const KnapsackInstance& instance) {
  const size_t n = instance.profits.size();
  assert(instance.weights.size() == n);
  const long long capacity = std::max<long long>(instance.capacity, 0);
  const size_t width = static_cast<size_t>(capacity) + 1;

  std::vector<long long> best(width, 0);
  // taken[i * width + w]: processing item i with w spare, the optimum over
  // items i..n-1 requires taking item i.
  std::vector<bool> taken(n * width, false);

  // Items are folded in reverse so the reconstruction can walk forward and
  // prefer leaving an item out whenever that ties; the first-index-out
  // choice is what makes the selection lexicographically smallest.
  for (size_t i = n; i-- > 0;) {
    const long long weight = instance.weights[i];
    const long long profit = instance.profits[i];
    if (weight > capacity) continue;
    for (long long w = capacity; w >= weight; --w) {
      const long long candidate = best[w - weight] + profit;
      if (candidate > best[w]) {
        best[w] = candidate;
        taken[i * width + w] = true;
      }
    }
  }

  KnapsackSolution solution;
  solution.objective = best[capacity];
  solution.selection.assign(n, false);
  long long w = capacity;
  for (size_t i = 0; i < n; ++i) {
    if (taken[i * width + w]) {
      solution.selection[i] = true;
      w -= instance.weights[i];
    }
  }
  return solution;
}

std::vector<bool> choose_rooms(const std::vector<int>& capacities, int demand,
                               int rate) {
  long long total = std::accumulate(capacities.begin(), capacities.end(), 0LL);
  if (total < demand) {
    throw SchedError(errc::insufficient_capacity,
                     "candidate rooms seat " + std::to_string(total) +
                         " students but " + std::to_string(demand) +
                         " are enrolled");
  }

  KnapsackInstance complement;
  complement.capacity = total - demand;
  complement.profits.reserve(capacities.size());
  complement.weights.reserve(capacities.size());
  for (int capacity : capacities) {
    complement.profits.push_back(room_weight(capacity, rate));
    complement.weights.push_back(capacity);
  }

  KnapsackSolution left_out = solve_knapsack_dp(complement);
  std::vector<bool> selection(capacities.size());
  for (size_t i = 0; i < capacities.size(); ++i) {
    selection[i] = !left_out.selection[i];
  }
  return selection;
}

std::vector<bool> choose_rooms(const std::vector<Room>& candidates, int demand,
                               int rate) {
  std::vector<int> capacities;
  capacities.reserve(candidates.size());
  for (const auto& room : candidates) capacities.push_back(room.capacity);
  return choose_rooms(capacities, demand, rate);
}

SlackState make_slack_state(const std::vector<int>& capacities, int demand,
                            int rate) {
  SlackState state;
  long long total = std::accumulate(capacities.begin(), capacities.end(), 0LL);
  state.remaining = static_cast<int>(total - demand);
  state.priorities.reserve(capacities.size());
  for (int capacity : capacities) {
    state.priorities.push_back(slack_priority(capacity, rate));
  }
  state.order.resize(capacities.size());
  std::iota(state.order.begin(), state.order.end(), 0);
  std::stable_sort(state.order.begin(), state.order.end(),
                   [&](int a, int b) {
                     return state.priorities[a] < state.priorities[b];
                   });
  return state;
}

SlackDistribution distribute_slack(const std::vector<int>& capacities,
                                   int demand, int rate) {
  SlackState state = make_slack_state(capacities, demand, rate);
  assert(state.remaining >= 0);

  SlackDistribution result;
  result.enrolled = capacities;
  int slack = state.remaining;
  for (int index : state.order) {
    const int priority = state.priorities[index];
    if (slack > 0 && slack <= priority) {
      result.enrolled[index] -= slack;
      slack = 0;
    } else if (slack > priority) {
      result.enrolled[index] -= priority;
      slack -= priority;
    }
  }

  // Slack exceeding the sum of all priorities cannot drop any more
  // proctors; it comes off the fullest rooms (first in input order on
  // ties). One room always suffices when the selection is minimal.
  while (slack > 0) {
    auto fullest = std::max_element(result.enrolled.begin(),
                                    result.enrolled.end());
    if (fullest == result.enrolled.end() || *fullest <= 0) break;
    int removed = std::min(slack, *fullest);
    *fullest -= removed;
    slack -= removed;
  }

  result.proctors.reserve(capacities.size());
  for (int enrolled : result.enrolled) {
    result.proctors.push_back(room_weight(enrolled, rate));
  }
  return result;
}

ScheduledTest schedule_test(const TestSession& test, const RoomCatalog& catalog,
                            const ScheduleConfig& config) {
  std::vector<Room> candidates;
  candidates.reserve(test.candidate_rooms.size());
  for (const auto& label : test.candidate_rooms) {
    const Room* room = catalog.find(label);
    if (room == nullptr) {
      throw SchedError(errc::insufficient_capacity,
                       "test " + test.label + ": candidate room \"" + label +
                           "\" is not in the room catalog");
    }
    candidates.push_back(*room);
  }

  ScheduledTest scheduled;
  scheduled.test = test;
  if (test.demand == 0) {
    return scheduled;
  }

  std::vector<bool> selection;
  try {
    selection = choose_rooms(candidates, test.demand, config.rate);
  } catch (const SchedError& error) {
    if (error.code() != errc::insufficient_capacity) throw;
    throw SchedError(errc::insufficient_capacity,
                     "test " + test.label + ": " + error.what());
  }

  std::vector<Room> selected;
  for (size_t i = 0; i < candidates.size(); ++i) {
    if (selection[i]) selected.push_back(candidates[i]);
  }
  std::vector<int> capacities;
  capacities.reserve(selected.size());
  for (const auto& room : selected) capacities.push_back(room.capacity);

  SlackDistribution distribution =
      distribute_slack(capacities, test.demand, config.rate);

  scheduled.choices.reserve(selected.size());
  for (size_t i = 0; i < selected.size(); ++i) {
    RoomChoice choice;
    choice.room = selected[i];
    choice.selected = true;
    choice.enrolled = distribution.enrolled[i];
    choice.proctors = distribution.proctors[i];
    choice.envelope = static_cast<int>(i) + 1;
    choice.slack = choice.room.capacity - choice.enrolled;
    scheduled.choices.push_back(std::move(choice));
  }
  scheduled.supervisors =
      std::max(1, room_weight(test.demand, config.supervisor_rate));
  return scheduled;
}

}  // namespace examsched
