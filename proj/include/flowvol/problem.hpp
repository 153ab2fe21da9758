#pragma once

#include "flowvol/multiplicity.hpp"
#include "flowvol/rational.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace flowvol {

/// Malformed or out-of-contract input; maps to exit status 2.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct ProblemSpec {
  MultiplicityMatrix m;
  std::optional<std::vector<Rational>> a;
  std::optional<int> degree;     // kernel
  std::optional<int> dilations;  // oracle-compare

  friend bool operator==(const ProblemSpec&, const ProblemSpec&) = default;
};

/// Parses "r=3; m[1,2]=1; m[1,3]=1; ...; a=(1,1/2,2)". Whitespace is
/// ignored and entries are separated by semicolons; "degree=<int>" and
/// "dilations=<int>" are accepted as well. Every m[i,j] with
/// 1 <= i < j <= r+1 must appear exactly once with a positive value.
ProblemSpec parse_spec(std::string_view text);

/// The same data as a JSON object:
///   {"r": 3, "m": {"1,2": 1, ...}, "a": ["1", "1/2", 2], "degree": 6}
ProblemSpec parse_spec_json(std::string_view text);

/// Canonical text form accepted by parse_spec.
std::string render_spec(const ProblemSpec& spec);

enum class Command { Volume, CheckPde, Kernel, Lift, OracleCompare, Corner };

Command parse_command(std::string_view name);
std::string_view command_name(Command c);

struct RunOptions {
  bool latex = false;
  bool order_check = false;
};

enum ExitStatus : int { kSuccess = 0, kPropertyViolation = 1, kInputError = 2 };

struct CommandResult {
  int status = kSuccess;
  std::string report;
};

/// Runs one command and renders a deterministic report. Throws InputError
/// when a command-specific parameter is missing or invalid.
CommandResult run_command(const ProblemSpec& spec, Command command, const RunOptions& options = {});

}  // namespace flowvol
