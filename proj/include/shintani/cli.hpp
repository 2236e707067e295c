#pragma once

// Batch commands behind the command-line tool. Each command reads one JSON
// document and produces one JSON document; exit codes classify failures.

#include <cstdint>
#include <string>

namespace shintani::cli {

enum ExitCode : int {
  kOk = 0,
  kOther = 1,
  kSchema = 2,
  kDependentInput = 3,
  kNotAMeasure = 4,
  kPrecisionExhausted = 5,
  kTrialFailed = 6,
};

struct RunConfig {
  std::string command;
  std::string input;  // JSON text, not a path
  std::int64_t p = 3;
  std::int64_t M = 4;
  std::int64_t n = 1;
  std::int64_t precision = 20;
  std::int64_t degree = 12;
  std::int64_t bound = 12;
  std::uint64_t seed = 0;
  std::int64_t trials = 10;
  bool corrupt_sign = false;
};

struct RunResult {
  int exit_code = kOk;
  std::string output;  // JSON report, empty on error
  std::string error;
};

RunResult run(const RunConfig& config);

}  // namespace shintani::cli
