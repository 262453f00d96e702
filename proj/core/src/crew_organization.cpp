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

#include "examsched/crew_organization.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include "examsched/errors.hpp"

namespace examsched {

namespace {

int seniority_weight(CrewLevel level, SeniorityOrder order) {
  if (order == SeniorityOrder::lecturer_first) {
    switch (level) {
      case CrewLevel::lecturer: return 3;
      case CrewLevel::postgraduate: return 2;
      case CrewLevel::undergraduate: return 1;
    }
  }
  switch (level) {
    case CrewLevel::undergraduate: return 3;
    case CrewLevel::postgraduate: return 2;
    case CrewLevel::lecturer: return 1;
  }
  return 0;
}

std::string slot_and_date(const ScheduledTest& scheduled) {
  return scheduled.test.slot.token() + " " + scheduled.test.date;
}

}  // namespace

const char* crew_level_name(CrewLevel level) {
  switch (level) {
    case CrewLevel::undergraduate: return "Undergraduate";
    case CrewLevel::postgraduate: return "Postgraduate";
    case CrewLevel::lecturer: return "PhD";
  }
  return "";
}

std::vector<PositionRow> expand_positions(const ScheduledTest& scheduled) {
  std::vector<PositionRow> rows;
  for (const auto& choice : scheduled.choices) {
    for (int position = 1; position <= choice.proctors; ++position) {
      rows.push_back(PositionRow{choice.room.label, choice.proctors, position,
                                 choice.enrolled});
    }
  }
  std::sort(rows.begin(), rows.end(), [](const PositionRow& a,
                                         const PositionRow& b) {
    return std::tuple(a.proctors_in_room, a.position, -a.students, a.room) <
           std::tuple(b.proctors_in_room, b.position, -b.students, b.room);
  });
  return rows;
}

SupervisorSplit select_supervisors(const std::vector<Assignee>& crew,
                                   int count) {
  std::vector<size_t> undergraduates;
  for (size_t i = 0; i < crew.size(); ++i) {
    if (crew[i].level == CrewLevel::undergraduate) undergraduates.push_back(i);
  }
  if (static_cast<int>(undergraduates.size()) < count) {
    throw SchedError(errc::insufficient_undergraduates,
                     "need " + std::to_string(count) +
                         " undergraduate supervisors but the crew has " +
                         std::to_string(undergraduates.size()));
  }
  std::sort(undergraduates.begin(), undergraduates.end(),
            [&](size_t a, size_t b) {
              if (crew[a].experience != crew[b].experience) {
                return crew[a].experience > crew[b].experience;
              }
              return crew[a].name < crew[b].name;
            });

  SupervisorSplit split;
  std::vector<bool> taken(crew.size(), false);
  for (int i = 0; i < count; ++i) {
    split.supervisors.push_back(crew[undergraduates[i]]);
    taken[undergraduates[i]] = true;
  }
  for (size_t i = 0; i < crew.size(); ++i) {
    if (!taken[i]) split.remainder.push_back(crew[i]);
  }
  return split;
}

std::vector<ProgrammingRow> organize_crew(const ScheduledTest& scheduled,
                                          const std::vector<Assignee>& crew,
                                          SeniorityOrder order) {
  std::vector<PositionRow> positions = expand_positions(scheduled);
  const int expected =
      static_cast<int>(positions.size()) + scheduled.supervisors;
  if (static_cast<int>(crew.size()) != expected) {
    throw SchedError(errc::crew_size_mismatch,
                     "test " + scheduled.test.label + " has " +
                         std::to_string(positions.size()) + " positions and " +
                         std::to_string(scheduled.supervisors) +
                         " supervisor slots but a crew of " +
                         std::to_string(crew.size()));
  }

  SupervisorSplit split = select_supervisors(crew, scheduled.supervisors);

  std::vector<Assignee> ranked = split.remainder;
  std::stable_sort(ranked.begin(), ranked.end(),
                   [order](const Assignee& a, const Assignee& b) {
                     int wa = seniority_weight(a.level, order);
                     int wb = seniority_weight(b.level, order);
                     if (wa != wb) return wa > wb;
                     if (a.experience != b.experience) {
                       return a.experience > b.experience;
                     }
                     return a.name < b.name;
                   });

  // Walk the sorted positions and hand each one the next-ranked person.
  std::map<std::pair<std::string, int>, const Assignee*> occupant;
  for (size_t i = 0; i < positions.size(); ++i) {
    occupant[{positions[i].room, positions[i].position}] = &ranked[i];
  }

  const std::string date = slot_and_date(scheduled);
  std::vector<ProgrammingRow> rows;
  for (const auto& choice : scheduled.choices) {
    for (int position = 1; position <= choice.proctors; ++position) {
      const Assignee* person = occupant.at({choice.room.label, position});
      rows.push_back(ProgrammingRow{
          choice.room.label, std::to_string(choice.envelope),
          choice.room.observations, std::to_string(choice.room.capacity),
          std::to_string(choice.enrolled), std::to_string(choice.slack),
          scheduled.test.label, date, choice.proctors, person->name,
          person->cell, person->email});
    }
  }
  for (int i = 0; i < scheduled.supervisors; ++i) {
    const Assignee& person = split.supervisors[i];
    rows.push_back(ProgrammingRow{"Supervisor " + std::to_string(i + 1), "na",
                                  "na", "na", "na", "na", scheduled.test.label,
                                  date, 1, person.name, person.cell,
                                  person.email});
  }
  return rows;
}

}  // namespace examsched
