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

#include "examsched/cli.hpp"

#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "examsched/ingest.hpp"
#include "examsched/pipeline.hpp"

namespace examsched {

CliOptions parse_flags(const std::vector<std::string>& args) {
  CLI::App app{"examsched: room and proctoring-crew scheduler for "
               "simultaneous large-scale exams"};
  app.name("examsched");

  CliOptions options;
  std::string input_dir = ".";
  std::string output_dir = ".";
  app.add_option("-t,--rate", options.config.rate,
                 "students one proctor covers")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--supervisor-rate", options.config.supervisor_rate,
                 "students one supervisor covers")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--input-dir", input_dir,
                 "directory with the five input csv files")
      ->capture_default_str();
  app.add_option("--output-dir", output_dir, "directory for the outputs")
      ->capture_default_str();
  app.add_flag("--check", options.check_only,
               "validate the input datasets and exit");

  std::vector<const char*> argv;
  argv.push_back("examsched");
  for (const auto& arg : args) argv.push_back(arg.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    options.help = true;
    options.help_text = app.help();
    return options;
  } catch (const CLI::ParseError& error) {
    throw SchedError(errc::usage, error.what());
  }

  options.config.input_dir = input_dir;
  options.config.output_dir = output_dir;
  return options;
}

int exit_code_for(errc code) {
  switch (code) {
    case errc::usage:
      return 2;
    case errc::bad_csv:
    case errc::missing_file:
    case errc::bad_header:
    case errc::missing_footer:
    case errc::malformed_time:
    case errc::non_integer_demand:
    case errc::duplicate_room:
    case errc::non_positive_capacity:
    case errc::unknown_level:
    case errc::duplicate_name:
    case errc::non_integer_experience:
    case errc::total_mismatch:
    case errc::validation_failed:
      return 3;
    case errc::insufficient_capacity:
      return 4;
    case errc::lecturer_overflow:
    case errc::unknown_slot:
    case errc::no_proctors:
    case errc::infeasible_assignment:
    case errc::unknown_ta:
      return 5;
    case errc::insufficient_undergraduates:
    case errc::crew_size_mismatch:
      return 6;
    case errc::instance_too_large:
      return 1;
  }
  return 1;
}

int run_cli(int argc, const char* const* argv) {
  CliOptions options;
  try {
    std::vector<std::string> args(argv + 1, argv + argc);
    options = parse_flags(args);
  } catch (const SchedError& error) {
    std::cerr << "examsched: " << error.what() << "\n";
    return exit_code_for(error.code());
  }
  if (options.help) {
    std::cout << options.help_text;
    return 0;
  }

  if (options.check_only) {
    try {
      RoundInputs inputs = load_round(options.config.input_dir);
      ValidationReport report = validate_round(
          inputs.catalog, inputs.available_rooms.to_sessions(),
          inputs.personnel.profiles, inputs.log, inputs.lecturers);
      std::cout << report.to_string();
      if (report.has_errors()) {
        std::cerr << "examsched: " << report.error_count()
                  << " consistency error(s)\n";
        return 3;
      }
      std::cout << "datasets are consistent\n";
      return 0;
    } catch (const SchedError& error) {
      std::cerr << "examsched: " << error.what() << "\n";
      return exit_code_for(error.code());
    }
  }

  try {
    PipelineRun run = run_pipeline(options.config);
    for (const auto& item : run.validation.items) {
      std::cerr << "examsched: warning: " << item.message << "\n";
    }
    std::ostringstream summary;
    summary << "scheduled " << run.stats.per_test_proctors.size()
            << " test(s):";
    for (const auto& [label, proctors] : run.stats.per_test_proctors) {
      summary << " " << label << "=" << proctors;
    }
    summary << " proctors; service deviation cap " << run.stats.bound
            << "; " << run.stage_outputs.size() << " files in "
            << run.stats.runtime_ms << " ms\n";
    std::cout << summary.str();
    return 0;
  } catch (const SchedError& error) {
    std::cerr << "examsched: " << error.what() << "\n";
    return exit_code_for(error.code());
  }
}

}  // namespace examsched
