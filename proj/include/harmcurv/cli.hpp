#pragma once

#include <optional>
#include <stdexcept>
#include <ostream>
#include <string>
#include <vector>

#include "harmcurv/curvature.hpp"
#include "harmcurv/tolerances.hpp"

namespace harmcurv::cli {

enum class Command { Roots, Curvature, Critical, Fibers, Equiv, Loop };
enum class Format { Csv, Json, Svg };

enum ExitCode : int { kSuccess = 0, kUsageError = 2, kNumericFailure = 3 };

struct RunConfig {
  Command command = Command::Roots;
  std::vector<std::string> inputs;
  std::optional<Domain2D> domain;
  int grid_n = 512;
  Part part = Part::Real;
  int t_samples = 64;
  Format format = Format::Json;
  std::optional<std::string> out_path;  // stdout when absent
  Tolerances tolerances;
};

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Parses argv into a RunConfig. Throws UsageError; --help is reported by
// returning nullopt after printing to `out`.
std::optional<RunConfig> parse_args(int argc, const char* const* argv, std::ostream& out);

// Checks the invariants of a config (grid range, input count, formats).
void validate(const RunConfig& config);

// Executes one command. Returns an ExitCode; failures print a single JSON line
// {"error": kind, "message": text} to `err`.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

// parse_args + run with the same error conventions.
int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace harmcurv::cli
