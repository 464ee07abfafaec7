#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "isac/channel.hpp"
#include "isac/engine.hpp"
#include "isac/protocol.hpp"
#include "isac/stats.hpp"

namespace isac {

enum class Algorithm { kIsac, kRandom };

// Re-draw the channel sets every run, or draw once per batch.
enum class SetPolicy { kFresh, kFixed };

struct BatchConfig {
  AvailabilityModel model = AvailabilityModel::kSymmetric;
  int universe = 50;
  int sender_size = 5;
  int receiver_size = 5;
  int common = 5;
  Algorithm algorithm = Algorithm::kIsac;
  Protocol protocol = Protocol::aligned();
  SetPolicy sets = SetPolicy::kFresh;
  std::uint64_t runs = 1;
  std::uint64_t seed = 0;
  Slot max_slots = 1;
  unsigned threads = 1;
  // When set, BatchResult::above_threshold counts runs with TTR > threshold.
  std::optional<Slot> threshold;
};

// An ISAC run that failed to meet within max_slots >= bound.
struct Violation {
  std::uint64_t run = 0;
  ChannelSet sender_set;
  ChannelSet receiver_set;
  int start_index = 0;
  std::vector<ChannelId> extra;
  std::vector<ChannelId> permutation;
  Slot offset = 0;
};

struct BatchResult {
  TtrStatistics stats;
  std::uint64_t censored = 0;  // runs recorded at max_slots after a timeout
  std::uint64_t above_threshold = 0;
  std::int64_t bound = 0;
  std::optional<Violation> violation;  // lowest run index
};

// Checks sizes, G feasibility and run count; throws ConfigError.
void validate(const BatchConfig& cfg);

// Runs cfg.runs independent trials. Run i draws everything from the stream
// (seed, i), so the result does not depend on cfg.threads.
BatchResult run_batch(const BatchConfig& cfg);

}  // namespace isac
