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

#ifndef EXAMSCHED_CSV_HPP
#define EXAMSCHED_CSV_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace examsched {

using CsvRow = std::vector<std::string>;

struct CsvTable {
  std::vector<CsvRow> rows;

  bool empty() const { return rows.empty(); }
  const CsvRow& header() const { return rows.front(); }
};

// RFC-4180 style reader: comma separator, double-quote quoting with ""
// escapes, LF or CRLF records. Unquoted fields are trimmed of outer
// whitespace; quoted fields keep their content verbatim. Rows that are
// completely empty are dropped. A UTF-8 BOM is ignored.
//
// Throws SchedError(errc::bad_csv) on an unterminated quoted field; any
// other byte sequence parses.
CsvTable parse_csv(std::string_view text);

// Inverse of parse_csv: fields are quoted only when needed (comma, quote,
// newline, or outer whitespace), records end in a single '\n'. Output is
// byte-stable for a given table.
std::string write_csv(const std::vector<CsvRow>& rows);

// Strict decimal integer ("123", "+7" and "-7" accepted, nothing else).
std::optional<long long> parse_int(std::string_view text);

std::string trim(std::string_view text);

}  // namespace examsched

#endif  // EXAMSCHED_CSV_HPP
