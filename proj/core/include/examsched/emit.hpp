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

#ifndef EXAMSCHED_EMIT_HPP
#define EXAMSCHED_EMIT_HPP

#include <string>
#include <vector>

#include "examsched/crew_organization.hpp"
#include "examsched/model.hpp"

namespace examsched {

// One line of the crew roster (scheduled_crew.csv).
struct CrewRow {
  std::string cell;
  int experience = 0;
  std::string level;  // Undergraduate / Postgraduate / PhD
  std::string name;
  std::string test;
  std::string email;
};

// Room decisions for one test, supervisor rows last:
// Room,Envelope,Proctors,Observations,Capacity,Students,Slack,Test,Date.
std::string write_scheduled_rooms(const ScheduledTest& scheduled);

// Crew roster: Cell,Experience,Level,Name,Test,email.
std::string write_scheduled_crew(const std::vector<CrewRow>& rows);

// Position pairing for one test:
// Room,Envelope,Observations,Capacity,Students,Slack,Test,Date,Proctors,
// Name,Cell,email. Multi-proctor rooms repeat their row per proctor.
std::string write_proposed_programming(const std::vector<ProgrammingRow>& rows);

}  // namespace examsched

#endif  // EXAMSCHED_EMIT_HPP
