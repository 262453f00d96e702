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

#ifndef EXAMSCHED_CREW_ORGANIZATION_HPP
#define EXAMSCHED_CREW_ORGANIZATION_HPP

#include <string>
#include <vector>

#include "examsched/model.hpp"

namespace examsched {

// One proctoring position: the k proctors of a room occupy positions 1..k.
struct PositionRow {
  std::string room;
  int proctors_in_room = 0;
  int position = 0;
  int students = 0;

  friend bool operator==(const PositionRow&, const PositionRow&) = default;
};

// Expands the scheduled rooms into one row per position, sorted so the
// thinnest proctoring comes first: proctors ascending, position ascending,
// students descending, room label ascending. Walking the rows in order
// with a seniority-sorted crew puts the strongest people where they are
// most alone.
std::vector<PositionRow> expand_positions(const ScheduledTest& scheduled);

enum class CrewLevel { undergraduate, postgraduate, lecturer };

const char* crew_level_name(CrewLevel level);

// One person of a test's crew, as read from the crew roster.
struct Assignee {
  std::string name;
  std::string cell;
  std::string email;
  int experience = 0;
  CrewLevel level = CrewLevel::undergraduate;
};

struct SupervisorSplit {
  std::vector<Assignee> supervisors;
  std::vector<Assignee> remainder;  // input order preserved
};

// Picks the `count` most experienced undergraduate TAs as supervisors
// (experience descending, ties by name). Supervising is an undergraduate
// TA duty; throws SchedError(errc::insufficient_undergraduates) when the
// crew cannot provide enough of them.
SupervisorSplit select_supervisors(const std::vector<Assignee>& crew,
                                   int count);

// Which end of the academic ladder anchors a one-proctor room. The
// default sends lecturers, then postgraduates, then undergraduates into
// the thin rooms; the alternative ranks undergraduates highest.
enum class SeniorityOrder { lecturer_first, undergraduate_first };

struct ProgrammingRow {
  std::string room;          // room label, or "Supervisor k"
  std::string envelope;      // pack number, or "na"
  std::string observations;  // "na" for supervisors
  std::string capacity;
  std::string students;
  std::string slack;
  std::string test;
  std::string date;          // "<slot> <date>"
  int proctors = 0;
  std::string name;
  std::string cell;
  std::string email;
};

// Pairs the crew with the room positions: supervisors are drawn first,
// the rest are sorted by seniority (level, then experience, then name)
// and zipped against the sorted position rows. Output rows come in
// envelope order, one row per proctor of a room, supervisors last.
// Throws SchedError(errc::crew_size_mismatch) unless the crew matches the
// position count plus supervisors exactly.
std::vector<ProgrammingRow> organize_crew(
    const ScheduledTest& scheduled, const std::vector<Assignee>& crew,
    SeniorityOrder order = SeniorityOrder::lecturer_first);

}  // namespace examsched

#endif  // EXAMSCHED_CREW_ORGANIZATION_HPP
