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

#ifndef EXAMSCHED_PIPELINE_HPP
#define EXAMSCHED_PIPELINE_HPP

#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "examsched/model.hpp"

namespace examsched {

struct PipelineStats {
  int bound = 0;  // achieved deviation cap of the equity solve
  std::vector<std::pair<std::string, int>> per_test_proctors;
  double runtime_ms = 0.0;
};

struct PipelineRun {
  ScheduleConfig config;
  std::vector<std::filesystem::path> stage_outputs;
  ValidationReport validation;
  PipelineStats stats;
};

// The whole round, stage by stage: ingest the five inputs, validate them,
// decide rooms per test, assign the crews, organize them into positions.
// Outputs land under config.output_dir as each stage completes, so a
// failing stage leaves the earlier artifacts in place for inspection:
//
//   scheduled_rooms/<TEST>.csv      room decisions
//   scheduled_crew.csv              who proctors which test
//   new_proctor_log.csv             service log with this round appended
//   proposed_programming/<TEST>.csv final position pairing
//
// The input proctor_log.csv is never rewritten; the updated log always
// goes to the separate new_proctor_log.csv.
//
// Throws SchedError with a stage-tagged message on the first defect;
// validation errors abort before any optimization runs.
PipelineRun run_pipeline(const ScheduleConfig& config);

}  // namespace examsched

#endif  // EXAMSCHED_PIPELINE_HPP
