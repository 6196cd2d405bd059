#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "stratalab/enumeration.hpp"
#include "stratalab/spec.hpp"

namespace stratalab::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitValidation = 2;
inline constexpr int kExitBudget = 3;
inline constexpr int kExitUsage = 4;

enum class Format { Json, Csv };

struct RunConfig {
  std::string command;  // analyze | simulate | enumerate | compare
  std::int64_t ball_count = 0;
  std::vector<std::int64_t> pot_counts;
  std::optional<Method> method;  // both methods when empty
  std::uint64_t seed = 0;
  std::uint64_t trials = 100'000;
  std::vector<std::int64_t> target;  // all-ones when empty
  std::uint64_t budget = kDefaultBudget;
  Format format = Format::Json;
  std::optional<std::string> output_path;
  unsigned threads = 0;
};

/// Parses and executes one invocation. `args` excludes the program name.
/// The report goes to `out` (or --output); errors go to `err` as a JSON
/// {code, message, detail} object. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Executes an already parsed configuration.
int execute(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace stratalab::cli
