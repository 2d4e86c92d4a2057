#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "gmix/aggregator.hpp"
#include "gmix/cli/config.hpp"
#include "gmix/error.hpp"
#include "gmix/lab/properties.hpp"

namespace gmix::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitRefuted = 1,
  kExitUsage = 2,
  kExitIo = 3,
  kExitNumeric = 4,
};

int exit_code_for(ErrorCode code) noexcept;

/// Property names accepted by audit:
///   boundary monotone idempotent averaging homogeneous:<k> shift-invariant
///   symmetric directional:<r1/r2/...> pre-aggregation
///   neutral annihilator zero-divisor one-divisor
/// Throws UnknownProperty for anything else.
lab::PropertyReport run_property(const AggregatorSpec& agg, std::string_view property,
                                 const lab::CheckBudget& budget);

/// False for the element searches, whose Refuted verdict only means that no
/// such element exists.
bool expected_to_hold(std::string_view property);

/// Runs a parsed command and returns its exit code. Library errors propagate.
int execute(const CliConfig& cfg, std::ostream& out);

/// Parses and runs; maps every error to its exit code and a message on err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gmix::cli
