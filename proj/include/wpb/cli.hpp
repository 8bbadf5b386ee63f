#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "wpb/isometry.hpp"

namespace wpb::cli {

inline const std::vector<std::string>& commands() {
  static const std::vector<std::string> names = {"poset-info",     "weigh",          "distance",
                                                 "ball",           "code-report",    "perfect-construct",
                                                 "isometry-check", "isometry-group", "decompose",
                                                 "validate"};
  return names;
}

struct RunConfig {
  std::string command;
  std::string poset_path;
  std::string labeling_path;  // optional: defaults to k_i = 1
  std::string alphabet_path;
  std::string weight_path;    // optional: defaults to Hamming
  std::string vector_path;
  std::string vector2_path;
  std::string code_path;
  std::string function_path;
  std::string matrix_path;
  int radius = 0;
  int t = -1;                        // perfect-construct: head length; -1 takes it from the function file
  std::string generate = "identity";  // perfect-construct without a function file: identity | random
  std::uint64_t budget = kDefaultVectorBudget;
  std::uint64_t matrix_budget = kDefaultMatrixBudget;
  std::uint64_t seed = 0;
  bool pretty = false;
  bool list = false;
  bool exhaustive = false;
};

struct Diagnostic {
  std::string code;
  std::string message;
};

/// Cross-file consistency problems (and files that fail to parse), without
/// running any analysis.
std::vector<Diagnostic> validate_bundle(const RunConfig& config);

/// FNV-1a 64 over the command, every referenced file and the parameters.
std::string inputs_digest(const RunConfig& config);

/// Writes one JSON document to `out`. Returns 0 on success, 1 on validation
/// or parse errors, 2 when a budget is exceeded.
int run(const RunConfig& config, std::ostream& out);

}  // namespace wpb::cli
