#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "isac/engine.hpp"
#include "isac/montecarlo.hpp"
#include "isac/protocol.hpp"
#include "isac/verifier.hpp"

namespace isac::cli {

enum ExitCode : int {
  kSuccess = 0,
  kUsage = 1,
  kRuntime = 2,
  kViolation = 3,
};

inline constexpr std::string_view kCsvHeader =
    "model,algorithm,Q,theta,m,n,G,runs,seed,mean_ttr,max_ttr,var_ttr,bound,bound_satisfied,"
    "censored_runs";

// One resolved simulate configuration (one CSV row).
struct ScenarioConfig {
  AvailabilityModel model = AvailabilityModel::kSymmetric;
  int universe = 50;
  double theta = 0.1;
  int sender_size = 5;
  int receiver_size = 5;
  int common = 5;
  Algorithm algorithm = Algorithm::kIsac;
  std::uint64_t runs = 1;
  std::uint64_t seed = 0;
  Slot max_slots = 0;  // resolved; "auto" already applied
  Protocol protocol = Protocol::aligned();
  SetPolicy sets = SetPolicy::kFresh;
  unsigned threads = 1;

  BatchConfig batch() const;
};

// Parses `simulate` flags (without the subcommand name) into a grid, one
// config per Q value. Throws ConfigError naming the violated constraint.
std::vector<ScenarioConfig> parse_config(std::span<const std::string> args);

// "50", "10,20,30" or "10:100:10" (start:stop:step, inclusive).
std::vector<int> parse_universe_list(std::string_view text);
// "1,3,4".
std::vector<int> parse_int_list(std::string_view text);

// Six significant digits, '.' decimal point.
std::string format_real(double x);

std::string csv_row(const ScenarioConfig& cfg, const BatchResult& result);

// Runs every config in order, writing the header and one row each to `out`.
// Violations are dumped to `err` and yield kViolation after all rows.
int run_campaign(std::span<const ScenarioConfig> grid, std::ostream& out, std::ostream& err);

// Full command line: simulate | verify | sequence.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace isac::cli
