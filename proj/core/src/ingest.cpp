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

#include "examsched/ingest.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "examsched/csv.hpp"
#include "examsched/errors.hpp"

namespace examsched {

namespace {

std::string cell_at(const CsvRow& row, size_t index) {
  return index < row.size() ? row[index] : std::string();
}

void require_headers(const CsvTable& table,
                     const std::vector<std::string>& expected,
                     const std::string& file) {
  if (table.empty()) {
    throw SchedError(errc::bad_header, file + ": missing header row");
  }
  const CsvRow& header = table.header();
  for (size_t i = 0; i < expected.size(); ++i) {
    if (cell_at(header, i) != expected[i]) {
      throw SchedError(errc::bad_header,
                       file + ": column " + std::to_string(i + 1) +
                           " must be \"" + expected[i] + "\", found \"" +
                           cell_at(header, i) + "\"");
    }
  }
}

int parse_non_negative(const std::string& text, errc code,
                       const std::string& what) {
  auto value = parse_int(text);
  if (!value || *value < 0) {
    throw SchedError(code, what + ": \"" + text + "\" is not a non-negative integer");
  }
  return static_cast<int>(*value);
}

const std::vector<std::string> kPersonColumns = {"Name", "Cell", "email",
                                                 "ID", "Experience", "Level"};

struct PersonFields {
  std::string name, cell, email, id;
  int experience = 0;
  Level level = Level::undergraduate;
};

PersonFields parse_person(const CsvRow& row, const std::string& file) {
  PersonFields person;
  person.name = cell_at(row, 0);
  person.cell = cell_at(row, 1);
  person.email = cell_at(row, 2);
  person.id = cell_at(row, 3);
  person.experience =
      parse_non_negative(cell_at(row, 4), errc::non_integer_experience,
                         file + ": Experience of \"" + person.name + "\"");
  auto level = parse_level(cell_at(row, 5));
  if (!level) {
    throw SchedError(errc::unknown_level,
                     file + ": Level of \"" + person.name + "\" must be "
                     "Undergraduate or Postgraduate, found \"" +
                         cell_at(row, 5) + "\"");
  }
  person.level = *level;
  return person;
}

void check_unique_name(std::set<std::string>& seen, const std::string& name,
                       const std::string& file) {
  if (!seen.insert(name).second) {
    throw SchedError(errc::duplicate_name,
                     file + ": name \"" + name +
                         "\" appears twice; differentiate the rows "
                         "(e.g. \"" + name + " I\", \"" + name + " II\")");
  }
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw SchedError(errc::missing_file,
                     "required input file is missing: " + path.string());
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace

std::vector<TestSession> AvailableRoomsTable::to_sessions() const {
  std::vector<TestSession> sessions;
  sessions.reserve(tests.size());
  for (const auto& column : tests) {
    sessions.push_back(TestSession{column.label, column.demand, column.date,
                                   column.slot, column.candidate_rooms});
  }
  return sessions;
}

AvailableRoomsTable parse_available_rooms(std::string_view text) {
  const std::string file = "available_rooms.csv";
  CsvTable csv = parse_csv(text);
  require_headers(csv, {"Room"}, file);

  // The last three rows describe the tests themselves.
  if (csv.rows.size() < 4) {
    throw SchedError(errc::missing_footer,
                     file + ": expected footer rows Students, Date, Time");
  }
  const CsvRow& students_row = csv.rows[csv.rows.size() - 3];
  const CsvRow& date_row = csv.rows[csv.rows.size() - 2];
  const CsvRow& time_row = csv.rows[csv.rows.size() - 1];
  if (cell_at(students_row, 0) != "Students" || cell_at(date_row, 0) != "Date" ||
      cell_at(time_row, 0) != "Time") {
    throw SchedError(errc::missing_footer,
                     file + ": the last three rows must be labeled "
                     "Students, Date and Time");
  }

  AvailableRoomsTable table;
  const CsvRow& header = csv.header();
  std::set<std::string> labels;
  for (size_t j = 1; j < header.size(); ++j) {
    const std::string& label = header[j];
    if (label.empty()) {
      throw SchedError(errc::bad_header,
                       file + ": empty test label in header column " +
                           std::to_string(j + 1));
    }
    if (!labels.insert(label).second) {
      throw SchedError(errc::bad_header,
                       file + ": test label \"" + label + "\" appears twice");
    }
    AvailableRoomsTable::TestColumn column;
    column.label = label;
    column.demand = parse_non_negative(cell_at(students_row, j),
                                       errc::non_integer_demand,
                                       file + ": Students of " + label);
    column.date = cell_at(date_row, j);
    const std::string token = cell_at(time_row, j);
    auto slot = TimeSlot::parse(token);
    if (!slot) {
      throw SchedError(errc::malformed_time,
                       file + ": Time of " + label + " is \"" + token +
                           "\"; the required shape is dd TT-TT, e.g. Mo 08-10");
    }
    column.slot = *slot;
    table.tests.push_back(std::move(column));
  }

  for (size_t i = 1; i + 3 < csv.rows.size(); ++i) {
    const CsvRow& row = csv.rows[i];
    const std::string room = cell_at(row, 0);
    table.room_labels.push_back(room);
    // Any non-empty cell marks availability; the value is not read.
    for (size_t j = 1; j < header.size(); ++j) {
      if (!cell_at(row, j).empty()) {
        table.tests[j - 1].candidate_rooms.push_back(room);
      }
    }
  }
  return table;
}

RoomCatalog parse_room_data(std::string_view text) {
  const std::string file = "room_data.csv";
  CsvTable csv = parse_csv(text);
  require_headers(csv, {"Room", "Capacity", "Observations"}, file);

  RoomCatalog catalog;
  for (size_t i = 1; i < csv.rows.size(); ++i) {
    const CsvRow& row = csv.rows[i];
    Room room;
    room.label = cell_at(row, 0);
    auto capacity = parse_int(cell_at(row, 1));
    if (!capacity || *capacity < 1) {
      throw SchedError(errc::non_positive_capacity,
                       file + ": room " + room.label + " has capacity \"" +
                           cell_at(row, 1) + "\"; it must be at least 1");
    }
    room.capacity = static_cast<int>(*capacity);
    room.observations = cell_at(row, 2);
    if (!catalog.add(std::move(room))) {
      throw SchedError(errc::duplicate_room,
                       file + ": room \"" + cell_at(row, 0) +
                           "\" appears twice");
    }
  }
  return catalog;
}

PersonnelTable parse_personnel_time(std::string_view text) {
  const std::string file = "personnel_time.csv";
  CsvTable csv = parse_csv(text);
  require_headers(csv, kPersonColumns, file);

  PersonnelTable table;
  const CsvRow& header = csv.header();
  std::set<std::string> columns;
  for (size_t j = kPersonColumns.size(); j < header.size(); ++j) {
    if (!columns.insert(header[j]).second) {
      throw SchedError(errc::bad_header, file + ": slot column \"" +
                                             header[j] + "\" appears twice");
    }
    table.slot_columns.push_back(header[j]);
  }

  std::set<std::string> names;
  for (size_t i = 1; i < csv.rows.size(); ++i) {
    const CsvRow& row = csv.rows[i];
    PersonFields person = parse_person(row, file);
    check_unique_name(names, person.name, file);
    ProctorProfile profile{person.name,       person.cell, person.email,
                           person.id,         person.experience,
                           person.level,      {}};
    for (size_t j = 0; j < table.slot_columns.size(); ++j) {
      // Only the literal "1" means available.
      profile.availability[table.slot_columns[j]] =
          cell_at(row, kPersonColumns.size() + j) == "1";
    }
    table.profiles.push_back(std::move(profile));
  }
  return table;
}

ProctorLog parse_proctor_log(std::string_view text) {
  const std::string file = "proctor_log.csv";
  CsvTable csv = parse_csv(text);
  require_headers(csv, kPersonColumns, file);
  const CsvRow& header = csv.header();
  if (header.size() < kPersonColumns.size() + 1 ||
      header.back() != "Total") {
    throw SchedError(errc::bad_header,
                     file + ": the last column must be \"Total\"");
  }

  ProctorLog log;
  for (size_t j = kPersonColumns.size(); j + 1 < header.size(); ++j) {
    log.events.push_back(header[j]);
  }

  std::set<std::string> names;
  for (size_t i = 1; i < csv.rows.size(); ++i) {
    const CsvRow& row = csv.rows[i];
    PersonFields person = parse_person(row, file);
    check_unique_name(names, person.name, file);
    ProctorLog::Entry entry{person.name,  person.cell,  person.email,
                            person.id,    person.experience,
                            person.level, {},           0};
    int sum = 0;
    for (size_t j = 0; j < log.events.size(); ++j) {
      int mark = cell_at(row, kPersonColumns.size() + j) == "1" ? 1 : 0;
      entry.marks.push_back(mark);
      sum += mark;
    }
    const std::string total_text = cell_at(row, header.size() - 1);
    auto total = parse_int(total_text);
    if (!total || *total != sum) {
      throw SchedError(errc::total_mismatch,
                       file + ": \"" + entry.name + "\" has Total \"" +
                           total_text + "\" but the event marks sum to " +
                           std::to_string(sum));
    }
    entry.total = sum;
    log.entries.push_back(std::move(entry));
  }
  return log;
}

std::vector<LecturerProfile> parse_professors(std::string_view text) {
  const std::string file = "professors.csv";
  CsvTable csv = parse_csv(text);
  require_headers(
      csv, {"Name", "Coordinator", "Subject", "Subject_2", "Cell", "email"},
      file);

  std::vector<LecturerProfile> lecturers;
  for (size_t i = 1; i < csv.rows.size(); ++i) {
    const CsvRow& row = csv.rows[i];
    LecturerProfile lecturer;
    lecturer.name = cell_at(row, 0);
    // Case sensitive on purpose: "Yes" or "1" do not exempt anyone.
    lecturer.coordinator = cell_at(row, 1) == "yes";
    lecturer.subject = cell_at(row, 2);
    lecturer.cell = cell_at(row, 4);
    lecturer.email = cell_at(row, 5);
    lecturers.push_back(std::move(lecturer));
  }
  return lecturers;
}

RoundInputs load_round(const std::filesystem::path& input_dir) {
  RoundInputs inputs;
  inputs.available_rooms =
      parse_available_rooms(read_file(input_dir / "available_rooms.csv"));
  inputs.catalog = parse_room_data(read_file(input_dir / "room_data.csv"));
  inputs.personnel =
      parse_personnel_time(read_file(input_dir / "personnel_time.csv"));
  inputs.log = parse_proctor_log(read_file(input_dir / "proctor_log.csv"));
  inputs.lecturers = parse_professors(read_file(input_dir / "professors.csv"));
  return inputs;
}

std::string write_available_rooms(const AvailableRoomsTable& table) {
  std::vector<CsvRow> rows;
  CsvRow header = {"Room"};
  for (const auto& test : table.tests) header.push_back(test.label);
  rows.push_back(header);

  std::vector<std::set<std::string>> candidates(table.tests.size());
  for (size_t j = 0; j < table.tests.size(); ++j) {
    candidates[j].insert(table.tests[j].candidate_rooms.begin(),
                         table.tests[j].candidate_rooms.end());
  }
  for (const auto& room : table.room_labels) {
    CsvRow row = {room};
    for (size_t j = 0; j < table.tests.size(); ++j) {
      row.push_back(candidates[j].count(room) ? "1" : "");
    }
    rows.push_back(row);
  }

  CsvRow students = {"Students"}, date = {"Date"}, time = {"Time"};
  for (const auto& test : table.tests) {
    students.push_back(std::to_string(test.demand));
    date.push_back(test.date);
    time.push_back(test.slot.token());
  }
  rows.push_back(students);
  rows.push_back(date);
  rows.push_back(time);
  return write_csv(rows);
}

std::string write_room_data(const RoomCatalog& catalog) {
  std::vector<CsvRow> rows = {{"Room", "Capacity", "Observations"}};
  for (const auto& room : catalog.rooms()) {
    rows.push_back({room.label, std::to_string(room.capacity),
                    room.observations});
  }
  return write_csv(rows);
}

std::string write_personnel_time(const PersonnelTable& table) {
  std::vector<CsvRow> rows;
  CsvRow header = kPersonColumns;
  for (const auto& column : table.slot_columns) header.push_back(column);
  rows.push_back(header);
  for (const auto& profile : table.profiles) {
    CsvRow row = {profile.name, profile.cell, profile.email, profile.id,
                  std::to_string(profile.experience),
                  level_name(profile.level)};
    for (const auto& column : table.slot_columns) {
      auto it = profile.availability.find(column);
      row.push_back(it != profile.availability.end() && it->second ? "1" : "0");
    }
    rows.push_back(row);
  }
  return write_csv(rows);
}

std::string write_proctor_log(const ProctorLog& log) {
  std::vector<CsvRow> rows;
  CsvRow header = kPersonColumns;
  for (const auto& event : log.events) header.push_back(event);
  header.push_back("Total");
  rows.push_back(header);
  for (const auto& entry : log.entries) {
    CsvRow row = {entry.name, entry.cell, entry.email, entry.id,
                  std::to_string(entry.experience), level_name(entry.level)};
    for (int mark : entry.marks) row.push_back(mark ? "1" : "");
    row.push_back(std::to_string(entry.total));
    rows.push_back(row);
  }
  return write_csv(rows);
}

std::string write_professors(const std::vector<LecturerProfile>& lecturers) {
  std::vector<CsvRow> rows = {
      {"Name", "Coordinator", "Subject", "Subject_2", "Cell", "email"}};
  for (const auto& lecturer : lecturers) {
    rows.push_back({lecturer.name, lecturer.coordinator ? "yes" : "",
                    lecturer.subject, "", lecturer.cell, lecturer.email});
  }
  return write_csv(rows);
}

}  // namespace examsched
