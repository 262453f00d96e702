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

#include "examsched/emit.hpp"

#include "examsched/csv.hpp"

namespace examsched {

std::string write_scheduled_rooms(const ScheduledTest& scheduled) {
  std::vector<CsvRow> rows = {{"Room", "Envelope", "Proctors", "Observations",
                               "Capacity", "Students", "Slack", "Test",
                               "Date"}};
  const std::string date =
      scheduled.test.slot.token() + " " + scheduled.test.date;
  for (const auto& choice : scheduled.choices) {
    rows.push_back({choice.room.label, std::to_string(choice.envelope),
                    std::to_string(choice.proctors), choice.room.observations,
                    std::to_string(choice.room.capacity),
                    std::to_string(choice.enrolled),
                    std::to_string(choice.slack), scheduled.test.label, date});
  }
  for (int i = 0; i < scheduled.supervisors; ++i) {
    rows.push_back({"Supervisor " + std::to_string(i + 1), "na", "1", "na",
                    "na", "na", "na", scheduled.test.label, date});
  }
  return write_csv(rows);
}

std::string write_scheduled_crew(const std::vector<CrewRow>& rows) {
  std::vector<CsvRow> out = {
      {"Cell", "Experience", "Level", "Name", "Test", "email"}};
  for (const auto& row : rows) {
    out.push_back({row.cell, std::to_string(row.experience), row.level,
                   row.name, row.test, row.email});
  }
  return write_csv(out);
}

std::string write_proposed_programming(
    const std::vector<ProgrammingRow>& rows) {
  std::vector<CsvRow> out = {{"Room", "Envelope", "Observations", "Capacity",
                              "Students", "Slack", "Test", "Date", "Proctors",
                              "Name", "Cell", "email"}};
  for (const auto& row : rows) {
    out.push_back({row.room, row.envelope, row.observations, row.capacity,
                   row.students, row.slack, row.test, row.date,
                   std::to_string(row.proctors), row.name, row.cell,
                   row.email});
  }
  return write_csv(out);
}

}  // namespace examsched
