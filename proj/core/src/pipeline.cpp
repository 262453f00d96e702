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

#include "examsched/pipeline.hpp"

#include <chrono>
#include <fstream>
#include <map>

#include "examsched/crew_organization.hpp"
#include "examsched/emit.hpp"
#include "examsched/errors.hpp"
#include "examsched/ingest.hpp"
#include "examsched/personnel_decision.hpp"
#include "examsched/room_decision.hpp"

namespace examsched {

namespace {

constexpr int kLecturerExperience = 10;  // lecturers rank as veterans

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << text;
  if (!out) {
    throw SchedError(errc::missing_file, "cannot write " + path.string());
  }
}

[[noreturn]] void rethrow_tagged(const std::string& stage,
                                 const SchedError& error) {
  const std::string message = "stage " + stage + ": " + error.what();
  if (const auto* infeasible =
          dynamic_cast<const InfeasibleAssignmentError*>(&error)) {
    throw InfeasibleAssignmentError(message, infeasible->shortfalls());
  }
  throw SchedError(error.code(), message);
}

}  // namespace

PipelineRun run_pipeline(const ScheduleConfig& config) {
  const auto started = std::chrono::steady_clock::now();
  PipelineRun run;
  run.config = config;

  RoundInputs inputs;
  try {
    inputs = load_round(config.input_dir);
  } catch (const SchedError& error) {
    rethrow_tagged("ingest", error);
  }

  std::vector<TestSession> sessions = inputs.available_rooms.to_sessions();
  run.validation =
      validate_round(inputs.catalog, sessions, inputs.personnel.profiles,
                     inputs.log, inputs.lecturers);
  if (run.validation.has_errors()) {
    throw SchedError(errc::validation_failed,
                     "stage validate: the datasets are inconsistent\n" +
                         run.validation.to_string());
  }

  std::vector<ScheduledTest> scheduled;
  try {
    scheduled.reserve(sessions.size());
    for (const auto& session : sessions) {
      scheduled.push_back(schedule_test(session, inputs.catalog, config));
    }
  } catch (const SchedError& error) {
    rethrow_tagged("room_decision", error);
  }
  const auto rooms_dir = config.output_dir / "scheduled_rooms";
  for (const auto& test : scheduled) {
    const auto path = rooms_dir / (test.test.label + ".csv");
    write_file(path, write_scheduled_rooms(test));
    run.stage_outputs.push_back(path);
    run.stats.per_test_proctors.emplace_back(test.test.label,
                                             test.total_proctors());
  }

  AssignmentMatrix assignment;
  std::map<std::string, std::vector<std::string>> lecturer_duties;
  try {
    lecturer_duties = assign_lecturers(inputs.lecturers, scheduled);
    DemandVector demands = make_demands(scheduled, lecturer_duties);
    AvailabilityMatrix availability =
        build_availability(inputs.personnel.profiles, scheduled);
    EquityContext context =
        compute_context(inputs.log, demands, availability.tas);
    assignment = solve_equity(availability, demands, context);
  } catch (const SchedError& error) {
    rethrow_tagged("personnel_decision", error);
  }
  run.stats.bound = assignment.bound;

  std::map<std::string, const ProctorProfile*> profile_of;
  for (const auto& profile : inputs.personnel.profiles) {
    profile_of[profile.name] = &profile;
  }
  std::map<std::string, const LecturerProfile*> lecturer_of;
  for (const auto& lecturer : inputs.lecturers) {
    lecturer_of[lecturer.name] = &lecturer;
  }

  // One roster block per test: assigned TAs in personnel order, then the
  // test's lecturers.
  std::vector<CrewRow> crew_rows;
  std::vector<std::vector<Assignee>> crews(scheduled.size());
  for (size_t t = 0; t < scheduled.size(); ++t) {
    const std::string& label = scheduled[t].test.label;
    for (size_t p = 0; p < assignment.tas.size(); ++p) {
      if (!assignment.cells[p][t]) continue;
      const ProctorProfile& profile = *profile_of.at(assignment.tas[p]);
      crews[t].push_back(Assignee{profile.name, profile.cell, profile.email,
                                  profile.experience,
                                  profile.level == Level::undergraduate
                                      ? CrewLevel::undergraduate
                                      : CrewLevel::postgraduate});
      crew_rows.push_back(CrewRow{profile.cell, profile.experience,
                                  level_name(profile.level), profile.name,
                                  label, profile.email});
    }
    for (const auto& name : lecturer_duties[label]) {
      const LecturerProfile& lecturer = *lecturer_of.at(name);
      crews[t].push_back(Assignee{lecturer.name, lecturer.cell, lecturer.email,
                                  kLecturerExperience, CrewLevel::lecturer});
      crew_rows.push_back(CrewRow{lecturer.cell, kLecturerExperience,
                                  crew_level_name(CrewLevel::lecturer),
                                  lecturer.name, label, lecturer.email});
    }
  }
  const auto crew_path = config.output_dir / "scheduled_crew.csv";
  write_file(crew_path, write_scheduled_crew(crew_rows));
  run.stage_outputs.push_back(crew_path);

  ProctorLog updated_log;
  try {
    updated_log = update_log(inputs.log, assignment, scheduled);
  } catch (const SchedError& error) {
    rethrow_tagged("personnel_decision", error);
  }
  const auto log_path = config.output_dir / "new_proctor_log.csv";
  write_file(log_path, write_proctor_log(updated_log));
  run.stage_outputs.push_back(log_path);

  const auto programming_dir = config.output_dir / "proposed_programming";
  for (size_t t = 0; t < scheduled.size(); ++t) {
    std::vector<ProgrammingRow> rows;
    try {
      rows = organize_crew(scheduled[t], crews[t]);
    } catch (const SchedError& error) {
      rethrow_tagged("crew_organization", error);
    }
    const auto path = programming_dir / (scheduled[t].test.label + ".csv");
    write_file(path, write_proposed_programming(rows));
    run.stage_outputs.push_back(path);
  }

  run.stats.runtime_ms =
      std::chrono::duration<double, std::milli>(
          std::chrono::steady_clock::now() - started)
          .count();
  return run;
}

}  // namespace examsched
