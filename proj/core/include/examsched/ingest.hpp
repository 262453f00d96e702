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

#ifndef EXAMSCHED_INGEST_HPP
#define EXAMSCHED_INGEST_HPP

#include <filesystem>
#include <string_view>
#include <vector>

#include "examsched/model.hpp"

namespace examsched {

// Parsed available_rooms.csv: room rows, test columns, and the three
// footer rows (Students / Date / Time) that describe each test.
struct AvailableRoomsTable {
  struct TestColumn {
    std::string label;
    int demand = 0;
    std::string date;
    TimeSlot slot;
    std::vector<std::string> candidate_rooms;  // row order

    friend bool operator==(const TestColumn&, const TestColumn&) = default;
  };

  std::vector<std::string> room_labels;  // row order, footer excluded
  std::vector<TestColumn> tests;         // column order

  std::vector<TestSession> to_sessions() const;

  friend bool operator==(const AvailableRoomsTable&,
                         const AvailableRoomsTable&) = default;
};

// available_rooms.csv: header "Room,<test>,<test>,...", one row per room
// where any non-empty cell marks the room available for that test (the
// cell value itself carries no meaning; capacities come from room_data),
// and footer rows labeled Students, Date, Time as the last three rows.
AvailableRoomsTable parse_available_rooms(std::string_view text);

// room_data.csv: header "Room,Capacity,Observations".
RoomCatalog parse_room_data(std::string_view text);

// personnel_time.csv: header "Name,Cell,email,ID,Experience,Level" followed
// by one column per weekly slot. A slot cell means available exactly when
// it is "1"; anything else ("0", "Day Off", "Busy", "NA", empty, ...) means
// unavailable.
PersonnelTable parse_personnel_time(std::string_view text);

// proctor_log.csv: the personnel identification columns, then one column
// per past exam event, then "Total". The stored Total must equal the sum
// of the row's event marks.
ProctorLog parse_proctor_log(std::string_view text);

// professors.csv: header "Name,Coordinator,Subject,Subject_2,Cell,email".
// Coordinator only for the literal cell "yes"; only the first subject
// carries proctoring duties.
std::vector<LecturerProfile> parse_professors(std::string_view text);

// The five datasets of one round, as loaded from an input directory.
struct RoundInputs {
  AvailableRoomsTable available_rooms;
  RoomCatalog catalog;
  PersonnelTable personnel;
  ProctorLog log;
  std::vector<LecturerProfile> lecturers;
};

// Reads available_rooms.csv, room_data.csv, personnel_time.csv,
// proctor_log.csv and professors.csv from `input_dir`. Every file must
// exist (professors.csv may be empty apart from its header, but it must
// be present). Throws SchedError on missing files or parse defects.
RoundInputs load_round(const std::filesystem::path& input_dir);

// Serializers for the five inputs; parse(serialize(x)) == x.
std::string write_available_rooms(const AvailableRoomsTable& table);
std::string write_room_data(const RoomCatalog& catalog);
std::string write_personnel_time(const PersonnelTable& table);
std::string write_proctor_log(const ProctorLog& log);
std::string write_professors(const std::vector<LecturerProfile>& lecturers);

}  // namespace examsched

#endif  // EXAMSCHED_INGEST_HPP
