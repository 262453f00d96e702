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

#include "examsched/csv.hpp"

#include <charconv>

#include "examsched/errors.hpp"

namespace examsched {

namespace {

bool is_space(char c) {
  return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\v' ||
         c == '\f';
}

bool row_is_blank(const CsvRow& row) {
  for (const auto& field : row) {
    if (!field.empty()) return false;
  }
  return true;
}

}  // namespace

std::string trim(std::string_view text) {
  size_t begin = 0;
  size_t end = text.size();
  while (begin < end && is_space(text[begin])) ++begin;
  while (end > begin && is_space(text[end - 1])) --end;
  return std::string(text.substr(begin, end - begin));
}

CsvTable parse_csv(std::string_view text) {
  if (text.size() >= 3 && text.substr(0, 3) == "\xEF\xBB\xBF") {
    text.remove_prefix(3);
  }

  CsvTable table;
  CsvRow row;
  std::string field;
  bool in_quotes = false;
  bool field_was_quoted = false;

  auto end_field = [&] {
    row.push_back(field_was_quoted ? field : trim(field));
    field.clear();
    field_was_quoted = false;
  };
  auto end_row = [&] {
    end_field();
    if (!row_is_blank(row)) table.rows.push_back(std::move(row));
    row = CsvRow{};
  };

  for (size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (in_quotes) {
      if (c == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          field.push_back('"');
          ++i;
        } else {
          in_quotes = false;
        }
      } else {
        field.push_back(c);
      }
      continue;
    }
    switch (c) {
      case '"':
        // A quote only opens a quoted section at field start; a stray
        // quote mid-field is kept literally.
        if (trim(field).empty() && !field_was_quoted) {
          in_quotes = true;
          field_was_quoted = true;
          field.clear();
        } else {
          field.push_back(c);
        }
        break;
      case ',':
        end_field();
        break;
      case '\n':
        end_row();
        break;
      case '\r':
        if (i + 1 < text.size() && text[i + 1] == '\n') {
          end_row();
          ++i;
        } else {
          end_row();
        }
        break;
      default:
        field.push_back(c);
    }
  }
  if (in_quotes) {
    throw SchedError(errc::bad_csv, "unterminated quoted field");
  }
  end_row();
  return table;
}

std::string write_csv(const std::vector<CsvRow>& rows) {
  std::string out;
  for (const auto& row : rows) {
    for (size_t i = 0; i < row.size(); ++i) {
      if (i > 0) out.push_back(',');
      const std::string& field = row[i];
      bool needs_quotes =
          field.find_first_of(",\"\r\n") != std::string::npos ||
          (!field.empty() && (is_space(field.front()) || is_space(field.back())));
      if (needs_quotes) {
        out.push_back('"');
        for (char c : field) {
          if (c == '"') out.push_back('"');
          out.push_back(c);
        }
        out.push_back('"');
      } else {
        out += field;
      }
    }
    out.push_back('\n');
  }
  return out;
}

std::optional<long long> parse_int(std::string_view text) {
  if (text.empty()) return std::nullopt;
  if (text.front() == '+') text.remove_prefix(1);
  if (text.empty()) return std::nullopt;
  long long value = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) return std::nullopt;
  return value;
}

const char* errc_name(errc code) {
  switch (code) {
    case errc::bad_csv: return "bad_csv";
    case errc::missing_file: return "missing_file";
    case errc::bad_header: return "bad_header";
    case errc::missing_footer: return "missing_footer";
    case errc::malformed_time: return "malformed_time";
    case errc::non_integer_demand: return "non_integer_demand";
    case errc::duplicate_room: return "duplicate_room";
    case errc::non_positive_capacity: return "non_positive_capacity";
    case errc::unknown_level: return "unknown_level";
    case errc::duplicate_name: return "duplicate_name";
    case errc::non_integer_experience: return "non_integer_experience";
    case errc::total_mismatch: return "total_mismatch";
    case errc::validation_failed: return "validation_failed";
    case errc::insufficient_capacity: return "insufficient_capacity";
    case errc::lecturer_overflow: return "lecturer_overflow";
    case errc::unknown_slot: return "unknown_slot";
    case errc::no_proctors: return "no_proctors";
    case errc::infeasible_assignment: return "infeasible_assignment";
    case errc::unknown_ta: return "unknown_ta";
    case errc::insufficient_undergraduates: return "insufficient_undergraduates";
    case errc::crew_size_mismatch: return "crew_size_mismatch";
    case errc::instance_too_large: return "instance_too_large";
    case errc::usage: return "usage";
  }
  return "unknown";
}

}  // namespace examsched
