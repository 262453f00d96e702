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

#ifndef EXAMSCHED_MODEL_HPP
#define EXAMSCHED_MODEL_HPP

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace examsched {

// Engine-wide knobs. `rate` is the number of students a single proctor
// covers; `supervisor_rate` the number of students one floor supervisor
// covers (at least one supervisor is appointed for any non-empty test).
struct ScheduleConfig {
  int rate = 54;
  int supervisor_rate = 650;
  std::filesystem::path input_dir = ".";
  std::filesystem::path output_dir = ".";
};

// Weekly time slot in the fixed textual shape "dd TT-TT" (two-letter day,
// space, two-digit start hour, hyphen, two-digit end hour). Slots compare
// by exact token; no calendar semantics.
struct TimeSlot {
  std::string day;
  std::string start_hour;
  std::string end_hour;

  std::string token() const { return day + " " + start_hour + "-" + end_hour; }

  static std::optional<TimeSlot> parse(std::string_view token);

  friend bool operator==(const TimeSlot&, const TimeSlot&) = default;
  friend auto operator<=>(const TimeSlot&, const TimeSlot&) = default;
};

struct Room {
  std::string label;
  int capacity = 0;
  std::string observations;

  friend bool operator==(const Room&, const Room&) = default;
};

// All rooms on campus, keyed by label, preserving file order.
class RoomCatalog {
 public:
  // False if the label is already present.
  bool add(Room room);
  const Room* find(const std::string& label) const;
  const std::vector<Room>& rooms() const { return rooms_; }
  size_t size() const { return rooms_.size(); }

  friend bool operator==(const RoomCatalog& a, const RoomCatalog& b) {
    return a.rooms_ == b.rooms_;
  }

 private:
  std::vector<Room> rooms_;
  std::unordered_map<std::string, size_t> index_;
};

// One exam event of the round.
struct TestSession {
  std::string label;          // course acronym, e.g. "VC"
  int demand = 0;             // students taking the test
  std::string date;           // opaque token, e.g. "06-IV"
  TimeSlot slot;
  std::vector<std::string> candidate_rooms;  // labels, file order

  friend bool operator==(const TestSession&, const TestSession&) = default;
};

enum class Level { undergraduate, postgraduate };

const char* level_name(Level level);
std::optional<Level> parse_level(std::string_view text);

struct ProctorProfile {
  std::string name;
  std::string cell;
  std::string email;
  std::string id;
  int experience = 0;
  Level level = Level::undergraduate;
  // One entry per slot column of the personnel table, keyed by slot token.
  // Presence with value false is distinct from absence of the column.
  std::map<std::string, bool> availability;

  friend bool operator==(const ProctorProfile&, const ProctorProfile&) = default;
};

// Personnel table with its slot-column order preserved for serialization.
struct PersonnelTable {
  std::vector<std::string> slot_columns;  // tokens, file order
  std::vector<ProctorProfile> profiles;   // file order

  friend bool operator==(const PersonnelTable&, const PersonnelTable&) = default;
};

struct LecturerProfile {
  std::string name;
  bool coordinator = false;
  std::string subject;  // first subject only; later ones carry no duties
  std::string cell;
  std::string email;

  friend bool operator==(const LecturerProfile&, const LecturerProfile&) = default;
};

// Historical service record of the teaching assistants.
struct ProctorLog {
  struct Entry {
    std::string name;
    std::string cell;
    std::string email;
    std::string id;
    int experience = 0;
    Level level = Level::undergraduate;
    std::vector<int> marks;  // aligned with `events`, each 0 or 1
    int total = 0;           // always the sum of `marks`

    friend bool operator==(const Entry&, const Entry&) = default;
  };

  std::vector<std::string> events;  // column labels, e.g. "ODE, 04-II"
  std::vector<Entry> entries;       // file order

  const Entry* find(const std::string& name) const;

  friend bool operator==(const ProctorLog&, const ProctorLog&) = default;
};

// Decision for one candidate room of one test.
struct RoomChoice {
  Room room;
  bool selected = false;
  int enrolled = 0;   // students seated here
  int proctors = 0;   // ceil(enrolled / rate) when selected
  int envelope = 0;   // 1-based test-pack index in emission order
  int slack = 0;      // room.capacity - enrolled
};

// A test with its rooms decided. `choices` holds selected rooms only.
struct ScheduledTest {
  TestSession test;
  std::vector<RoomChoice> choices;
  int supervisors = 0;

  // Total staffing demand: room proctors plus supervisors.
  int total_proctors() const;
};

enum class Severity { error, warning };

struct ValidationItem {
  Severity severity = Severity::error;
  std::string message;
};

struct ValidationReport {
  std::vector<ValidationItem> items;

  bool has_errors() const;
  size_t error_count() const;
  std::string to_string() const;
};

// Cross-dataset consistency check. Never throws: every defect becomes a
// report item and the caller decides what is fatal. Errors are lookups
// that would fail downstream (unknown rooms, names missing from the log,
// slot tokens absent from the personnel columns, duplicated names); a
// lecturer whose subject matches no test is only a warning.
ValidationReport validate_round(const RoomCatalog& catalog,
                                const std::vector<TestSession>& tests,
                                const std::vector<ProctorProfile>& personnel,
                                const ProctorLog& log,
                                const std::vector<LecturerProfile>& lecturers);

}  // namespace examsched

#endif  // EXAMSCHED_MODEL_HPP
