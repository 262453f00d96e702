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

#include "examsched/personnel_decision.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <set>

#include "examsched/errors.hpp"
#include "examsched/flow.hpp"

namespace examsched {

std::vector<int> AvailabilityMatrix::test_group_ids() const {
  std::vector<int> ids(tests.size(), -1);
  int group = 0;
  for (const auto& [key, members] : slot_groups) {
    for (int t : members) ids[t] = group;
    ++group;
  }
  return ids;
}

int DemandVector::total() const {
  return std::accumulate(per_test.begin(), per_test.end(), 0);
}

std::vector<int> AssignmentMatrix::shifts_per_ta() const {
  std::vector<int> shifts(tas.size(), 0);
  for (size_t p = 0; p < tas.size(); ++p) {
    for (size_t t = 0; t < tests.size(); ++t) shifts[p] += cells[p][t];
  }
  return shifts;
}

std::map<std::string, std::vector<std::string>> assign_lecturers(
    const std::vector<LecturerProfile>& lecturers,
    const std::vector<ScheduledTest>& scheduled) {
  std::map<std::string, std::vector<std::string>> duties;
  for (const auto& test : scheduled) duties[test.test.label];

  for (const auto& lecturer : lecturers) {
    if (lecturer.coordinator) continue;  // coordinators run the show instead
    auto it = duties.find(lecturer.subject);
    if (it == duties.end()) continue;  // no matching test; flagged upstream
    it->second.push_back(lecturer.name);
  }

  for (const auto& test : scheduled) {
    const auto& assigned = duties[test.test.label];
    if (static_cast<int>(assigned.size()) > test.total_proctors()) {
      throw SchedError(errc::lecturer_overflow,
                       "test " + test.test.label + " has " +
                           std::to_string(assigned.size()) +
                           " lecturers but only " +
                           std::to_string(test.total_proctors()) +
                           " positions");
    }
  }
  return duties;
}

DemandVector make_demands(
    const std::vector<ScheduledTest>& scheduled,
    const std::map<std::string, std::vector<std::string>>& lecturer_duties) {
  DemandVector demands;
  demands.per_test.reserve(scheduled.size());
  for (const auto& test : scheduled) {
    int lecturers = 0;
    auto it = lecturer_duties.find(test.test.label);
    if (it != lecturer_duties.end()) {
      lecturers = static_cast<int>(it->second.size());
    }
    int remaining = test.total_proctors() - lecturers;
    assert(remaining >= 0);
    demands.per_test.push_back(remaining);
  }
  return demands;
}

AvailabilityMatrix build_availability(
    const std::vector<ProctorProfile>& personnel,
    const std::vector<ScheduledTest>& scheduled) {
  AvailabilityMatrix matrix;
  for (const auto& profile : personnel) matrix.tas.push_back(profile.name);
  for (const auto& test : scheduled) matrix.tests.push_back(test.test.label);

  matrix.cells.assign(personnel.size(),
                      std::vector<char>(scheduled.size(), 0));
  for (size_t t = 0; t < scheduled.size(); ++t) {
    const std::string token = scheduled[t].test.slot.token();
    for (size_t p = 0; p < personnel.size(); ++p) {
      auto it = personnel[p].availability.find(token);
      if (it == personnel[p].availability.end()) {
        throw SchedError(errc::unknown_slot,
                         "test " + scheduled[t].test.label + " runs at \"" +
                             token +
                             "\" but the personnel table has no such column");
      }
      matrix.cells[p][t] = it->second ? 1 : 0;
    }
    matrix.slot_groups[{scheduled[t].test.date, token}].push_back(
        static_cast<int>(t));
  }
  return matrix;
}

EquityContext compute_context(const ProctorLog& log,
                              const DemandVector& demands,
                              const std::vector<std::string>& tas) {
  EquityContext context;
  long long history = 0;
  for (const auto& name : tas) {
    const ProctorLog::Entry* entry = log.find(name);
    int load = entry ? entry->total : 0;
    context.loads.push_back(load);
    history += load;
  }

  const long long total_demand = demands.total();
  if (tas.empty()) {
    if (total_demand > 0) {
      throw SchedError(errc::no_proctors,
                       "the round needs " + std::to_string(total_demand) +
                           " TA shifts but the personnel table is empty");
    }
    return context;
  }

  context.average_num = history + total_demand;
  context.average_den = static_cast<long long>(tas.size());
  context.average_floor =
      static_cast<int>(context.average_num / context.average_den);
  context.average_ceil = static_cast<int>(
      (context.average_num + context.average_den - 1) / context.average_den);
  return context;
}

std::optional<AssignmentMatrix> feasible_for_bound(
    int bound, const AvailabilityMatrix& availability,
    const DemandVector& demands, const EquityContext& context) {
  const int ta_count = static_cast<int>(availability.tas.size());
  const int test_count = static_cast<int>(availability.tests.size());
  assert(static_cast<int>(demands.per_test.size()) == test_count);
  assert(static_cast<int>(context.loads.size()) == ta_count);

  AssignmentMatrix assignment;
  assignment.tas = availability.tas;
  assignment.tests = availability.tests;
  assignment.cells.assign(ta_count, std::vector<char>(test_count, 0));
  assignment.bound = bound;

  if (ta_count == 0) {
    if (demands.total() == 0) return assignment;
    return std::nullopt;
  }

  // Per-TA shift window implied by the deviation cap. The upper side may
  // be negative when a TA's history alone already exceeds the cap; no
  // assignment can fix that, so the probe fails outright.
  std::vector<long long> low(ta_count), high(ta_count);
  for (int p = 0; p < ta_count; ++p) {
    low[p] = std::max<long long>(
        0, static_cast<long long>(context.average_floor) - context.loads[p] -
               bound);
    high[p] = static_cast<long long>(context.average_ceil) - context.loads[p] +
              bound;
    if (high[p] < 0) return std::nullopt;
  }

  const std::vector<int> group_of_test = availability.test_group_ids();
  const int group_count =
      static_cast<int>(availability.slot_groups.size());

  // Nodes: source, tests, one gate per (TA, group) the TA can reach, TAs,
  // sink. The gates carry the one-test-per-simultaneous-group rule.
  std::vector<int> gate_id(static_cast<size_t>(ta_count) * group_count, -1);
  int next_node = 1 + test_count;
  for (int p = 0; p < ta_count; ++p) {
    for (int t = 0; t < test_count; ++t) {
      if (!availability.cells[p][t]) continue;
      int& gate = gate_id[p * group_count + group_of_test[t]];
      if (gate == -1) gate = next_node++;
    }
  }
  const int first_ta_node = next_node;
  const int sink = first_ta_node + ta_count;

  FlowNetwork network;
  network.node_count = sink + 1;
  network.source = 0;
  network.sink = sink;

  for (int t = 0; t < test_count; ++t) {
    network.arcs.push_back({0, 1 + t, demands.per_test[t], demands.per_test[t]});
  }
  std::vector<std::pair<int, int>> cell_arcs;  // (p, t) per arc below
  for (int t = 0; t < test_count; ++t) {
    for (int p = 0; p < ta_count; ++p) {
      if (!availability.cells[p][t]) continue;
      int gate = gate_id[p * group_count + group_of_test[t]];
      cell_arcs.emplace_back(p, t);
      network.arcs.push_back({1 + t, gate, 0, 1});
    }
  }
  const size_t first_cell_arc = test_count;
  for (int p = 0; p < ta_count; ++p) {
    for (int g = 0; g < group_count; ++g) {
      int gate = gate_id[p * group_count + g];
      if (gate != -1) network.arcs.push_back({gate, first_ta_node + p, 0, 1});
    }
  }
  for (int p = 0; p < ta_count; ++p) {
    network.arcs.push_back({first_ta_node + p, sink, low[p], high[p]});
  }

  auto flows = feasible_flow_with_lower_bounds(network);
  if (!flows) return std::nullopt;

  for (size_t i = 0; i < cell_arcs.size(); ++i) {
    if ((*flows)[first_cell_arc + i] > 0) {
      auto [p, t] = cell_arcs[i];
      assignment.cells[p][t] = 1;
    }
  }
  return assignment;
}

AssignmentMatrix solve_equity(const AvailabilityMatrix& availability,
                              const DemandVector& demands,
                              const EquityContext& context) {
  int max_load = 0;
  for (int load : context.loads) max_load = std::max(max_load, load);
  const int cap_limit = static_cast<int>(availability.tests.size()) +
                        context.average_ceil + max_load;

  if (!feasible_for_bound(cap_limit, availability, demands, context)) {
    // The cap is not the obstacle: coverage itself is short. Report where.
    std::vector<InfeasibleAssignmentError::Shortfall> shortfalls;
    for (size_t t = 0; t < availability.tests.size(); ++t) {
      int available = 0;
      for (size_t p = 0; p < availability.tas.size(); ++p) {
        available += availability.cells[p][t];
      }
      if (available < demands.per_test[t]) {
        shortfalls.push_back(
            {availability.tests[t], demands.per_test[t], available});
      }
    }
    for (const auto& [key, members] : availability.slot_groups) {
      int required = 0;
      for (int t : members) required += demands.per_test[t];
      int available = 0;
      for (size_t p = 0; p < availability.tas.size(); ++p) {
        for (int t : members) {
          if (availability.cells[p][t]) {
            ++available;
            break;
          }
        }
      }
      if (available < required) {
        shortfalls.push_back(
            {key.first + " " + key.second, required, available});
      }
    }
    std::string message = "cannot staff the round";
    for (const auto& shortfall : shortfalls) {
      message += "; " + shortfall.scope + " needs " +
                 std::to_string(shortfall.required) + " TAs, " +
                 std::to_string(shortfall.available) + " available";
    }
    throw InfeasibleAssignmentError(message, std::move(shortfalls));
  }

  // Feasibility only widens as the cap grows, so the minimum is found by
  // binary search.
  int lo = 0, hi = cap_limit;
  while (lo < hi) {
    int mid = lo + (hi - lo) / 2;
    if (feasible_for_bound(mid, availability, demands, context)) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  auto best = feasible_for_bound(lo, availability, demands, context);
  assert(best.has_value());
  return *best;
}

ProctorLog update_log(const ProctorLog& log, const AssignmentMatrix& assignment,
                      const std::vector<ScheduledTest>& scheduled) {
  std::map<std::string, size_t> row_of;
  for (size_t i = 0; i < log.entries.size(); ++i) {
    row_of[log.entries[i].name] = i;
  }
  std::map<std::string, const ScheduledTest*> scheduled_by_label;
  for (const auto& test : scheduled) {
    scheduled_by_label[test.test.label] = &test;
  }

  for (const auto& name : assignment.tas) {
    if (row_of.find(name) == row_of.end()) {
      throw SchedError(errc::unknown_ta,
                       "assignment names \"" + name +
                           "\" which is not in the service log");
    }
  }

  ProctorLog updated = log;
  for (size_t t = 0; t < assignment.tests.size(); ++t) {
    const auto& label = assignment.tests[t];
    auto it = scheduled_by_label.find(label);
    const std::string date =
        it != scheduled_by_label.end() ? it->second->test.date : std::string();
    updated.events.push_back(label + ", " + date);

    for (auto& entry : updated.entries) entry.marks.push_back(0);
    for (size_t p = 0; p < assignment.tas.size(); ++p) {
      if (!assignment.cells[p][t]) continue;
      updated.entries[row_of[assignment.tas[p]]].marks.back() = 1;
    }
  }
  for (auto& entry : updated.entries) {
    entry.total = std::accumulate(entry.marks.begin(), entry.marks.end(), 0);
  }
  return updated;
}

}  // namespace examsched
