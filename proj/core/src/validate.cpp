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

#include <set>
#include <string>

#include "examsched/model.hpp"

namespace examsched {

namespace {

void report_duplicates(const std::vector<std::string>& names,
                       const std::string& dataset, ValidationReport& report) {
  std::set<std::string> seen;
  std::set<std::string> reported;
  for (const auto& name : names) {
    if (!seen.insert(name).second && reported.insert(name).second) {
      report.items.push_back(
          {Severity::error,
           "duplicate name \"" + name + "\" in " + dataset +
               "; if two people really share it, differentiate the entries "
               "(e.g. \"" + name + " I\", \"" + name + " II\")"});
    }
  }
}

}  // namespace

ValidationReport validate_round(const RoomCatalog& catalog,
                                const std::vector<TestSession>& tests,
                                const std::vector<ProctorProfile>& personnel,
                                const ProctorLog& log,
                                const std::vector<LecturerProfile>& lecturers) {
  ValidationReport report;

  for (const auto& test : tests) {
    for (const auto& label : test.candidate_rooms) {
      if (catalog.find(label) == nullptr) {
        report.items.push_back(
            {Severity::error, "test " + test.label + ": candidate room \"" +
                                  label + "\" is not in the room catalog"});
      }
    }
  }

  // Names join the personnel table, the service log and the assignment
  // output, so both directions must resolve.
  std::set<std::string> personnel_names;
  for (const auto& profile : personnel) personnel_names.insert(profile.name);
  std::set<std::string> log_names;
  for (const auto& entry : log.entries) log_names.insert(entry.name);

  for (const auto& profile : personnel) {
    if (log_names.count(profile.name) == 0) {
      report.items.push_back(
          {Severity::error, "personnel name \"" + profile.name +
                                "\" has no row in the service log"});
    }
  }
  for (const auto& entry : log.entries) {
    if (personnel_names.count(entry.name) == 0) {
      report.items.push_back(
          {Severity::error, "service log name \"" + entry.name +
                                "\" has no row in the personnel table"});
    }
  }

  {
    std::vector<std::string> names;
    for (const auto& profile : personnel) names.push_back(profile.name);
    report_duplicates(names, "the personnel table", report);
    names.clear();
    for (const auto& entry : log.entries) names.push_back(entry.name);
    report_duplicates(names, "the service log", report);
  }

  // A test slot must be a column of the personnel table for availability
  // to be decidable. Token comparison is exact: "Mo 8-10" is not "Mo 08-10".
  for (const auto& test : tests) {
    const std::string token = test.slot.token();
    for (const auto& profile : personnel) {
      if (profile.availability.count(token) == 0) {
        report.items.push_back(
            {Severity::error,
             "test " + test.label + " runs at \"" + token +
                 "\" but that slot is not a column of the personnel table "
                 "(check the dd TT-TT tokens match exactly)"});
        break;
      }
    }
  }

  std::set<std::string> test_labels;
  for (const auto& test : tests) test_labels.insert(test.label);
  for (const auto& lecturer : lecturers) {
    if (!lecturer.coordinator && test_labels.count(lecturer.subject) == 0) {
      report.items.push_back(
          {Severity::warning, "lecturer \"" + lecturer.name + "\" teaches \"" +
                                  lecturer.subject +
                                  "\" which is not a test this round; the "
                                  "lecturer will not be scheduled"});
    }
  }

  return report;
}

}  // namespace examsched
