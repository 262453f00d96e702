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

#include "examsched/model.hpp"

#include <cctype>

namespace examsched {

namespace {

bool two_letters(std::string_view s) {
  return s.size() == 2 && std::isalpha(static_cast<unsigned char>(s[0])) &&
         std::isalpha(static_cast<unsigned char>(s[1]));
}

bool two_digits(std::string_view s) {
  return s.size() == 2 && std::isdigit(static_cast<unsigned char>(s[0])) &&
         std::isdigit(static_cast<unsigned char>(s[1]));
}

}  // namespace

std::optional<TimeSlot> TimeSlot::parse(std::string_view token) {
  // "dd TT-TT": positions are fixed, no elasticity.
  if (token.size() != 8) return std::nullopt;
  if (token[2] != ' ' || token[5] != '-') return std::nullopt;
  std::string_view day = token.substr(0, 2);
  std::string_view from = token.substr(3, 2);
  std::string_view to = token.substr(6, 2);
  if (!two_letters(day) || !two_digits(from) || !two_digits(to)) {
    return std::nullopt;
  }
  return TimeSlot{std::string(day), std::string(from), std::string(to)};
}

bool RoomCatalog::add(Room room) {
  auto [it, inserted] = index_.emplace(room.label, rooms_.size());
  if (!inserted) return false;
  rooms_.push_back(std::move(room));
  return true;
}

const Room* RoomCatalog::find(const std::string& label) const {
  auto it = index_.find(label);
  if (it == index_.end()) return nullptr;
  return &rooms_[it->second];
}

const char* level_name(Level level) {
  return level == Level::undergraduate ? "Undergraduate" : "Postgraduate";
}

std::optional<Level> parse_level(std::string_view text) {
  if (text == "Undergraduate") return Level::undergraduate;
  if (text == "Postgraduate") return Level::postgraduate;
  return std::nullopt;
}

const ProctorLog::Entry* ProctorLog::find(const std::string& name) const {
  for (const auto& entry : entries) {
    if (entry.name == name) return &entry;
  }
  return nullptr;
}

int ScheduledTest::total_proctors() const {
  int total = supervisors;
  for (const auto& choice : choices) total += choice.proctors;
  return total;
}

bool ValidationReport::has_errors() const { return error_count() > 0; }

size_t ValidationReport::error_count() const {
  size_t count = 0;
  for (const auto& item : items) {
    if (item.severity == Severity::error) ++count;
  }
  return count;
}

std::string ValidationReport::to_string() const {
  std::string out;
  for (const auto& item : items) {
    out += item.severity == Severity::error ? "error: " : "warning: ";
    out += item.message;
    out += '\n';
  }
  return out;
}

}  // namespace examsched
