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

#ifndef EXAMSCHED_PERSONNEL_DECISION_HPP
#define EXAMSCHED_PERSONNEL_DECISION_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "examsched/model.hpp"

namespace examsched {

// Availability of every TA for every test of the round, in personnel and
// round order respectively. Tests sharing a (date, slot) pair run
// simultaneously and are grouped; a TA may serve at most one test per
// group.
struct AvailabilityMatrix {
  std::vector<std::string> tas;
  std::vector<std::string> tests;
  std::vector<std::vector<char>> cells;  // [ta][test], 1 = available
  std::map<std::pair<std::string, std::string>, std::vector<int>> slot_groups;

  // Dense group id per test, in slot_groups iteration order.
  std::vector<int> test_group_ids() const;
};

// TA positions still to fill per test after lecturers take theirs.
struct DemandVector {
  std::vector<int> per_test;

  int total() const;
};

// The service picture the fairness objective is measured against:
// historical loads plus the exact (rational) average service after the
// round, kept as numerator/denominator so floor and ceiling are exact.
struct EquityContext {
  std::vector<int> loads;  // aligned with AvailabilityMatrix::tas
  long long average_num = 0;
  long long average_den = 1;
  int average_floor = 0;
  int average_ceil = 0;
};

// The chosen shifts. bound is the smallest deviation cap the round admits.
struct AssignmentMatrix {
  std::vector<std::string> tas;
  std::vector<std::string> tests;
  std::vector<std::vector<char>> cells;  // [ta][test], 1 = serves
  int bound = 0;

  std::vector<int> shifts_per_ta() const;
};

// Every lecturer who is not a course coordinator proctors the test whose
// label equals their (first) subject. Throws
// SchedError(errc::lecturer_overflow) when a test receives more lecturers
// than it has positions.
std::map<std::string, std::vector<std::string>> assign_lecturers(
    const std::vector<LecturerProfile>& lecturers,
    const std::vector<ScheduledTest>& scheduled);

// Per-test TA demand: total positions minus pre-assigned lecturers.
DemandVector make_demands(
    const std::vector<ScheduledTest>& scheduled,
    const std::map<std::string, std::vector<std::string>>& lecturer_duties);

// Throws SchedError(errc::unknown_slot) when a test's slot was never a
// column of the personnel table.
AvailabilityMatrix build_availability(
    const std::vector<ProctorProfile>& personnel,
    const std::vector<ScheduledTest>& scheduled);

// Throws SchedError(errc::no_proctors) when demand exists but no TA does.
EquityContext compute_context(const ProctorLog& log,
                              const DemandVector& demands,
                              const std::vector<std::string>& tas);

// One feasibility probe of the fairness cap: is there an assignment
// meeting every demand exactly, respecting availability and the
// one-test-per-slot-group rule, where each TA's round-plus-history load
// stays within [floor(avg) - bound, ceil(avg) + bound]? Solved exactly as
// a flow with lower bounds; nullopt means no such assignment.
std::optional<AssignmentMatrix> feasible_for_bound(
    int bound, const AvailabilityMatrix& availability,
    const DemandVector& demands, const EquityContext& context);

// Minimizes the deviation cap by binary search (feasibility is monotone
// in the cap) and returns the assignment at the optimum. Throws
// InfeasibleAssignmentError, listing per-test and per-slot-group
// shortfalls, when even an unbounded cap cannot staff the round.
AssignmentMatrix solve_equity(const AvailabilityMatrix& availability,
                              const DemandVector& demands,
                              const EquityContext& context);

// Returns a new log with one event column appended per test ("<TEST>,
// <DATE>"), marks where TAs served, and recomputed totals. The input log
// is left untouched; the previous file stays on disk as a safety copy.
// Throws SchedError(errc::unknown_ta) if the assignment names a TA the
// log does not know.
ProctorLog update_log(const ProctorLog& log, const AssignmentMatrix& assignment,
                      const std::vector<ScheduledTest>& scheduled);

}  // namespace examsched

#endif  // EXAMSCHED_PERSONNEL_DECISION_HPP
