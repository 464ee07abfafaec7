#pragma once

#include <cstdint>
#include <vector>

#include "isac/channel.hpp"
#include "isac/hopping.hpp"
#include "isac/protocol.hpp"
#include "isac/stats.hpp"

namespace isac {

// Frozen choices and offset that produced a report's worst TTR.
struct Witness {
  int start_index = 0;
  std::vector<ChannelId> extra;
  std::vector<ChannelId> permutation;
  Slot offset = 0;
};

struct VerificationReport {
  std::uint64_t instances_checked = 0;
  Slot worst_ttr = 0;
  std::uint64_t never_met = 0;  // instances with no rendezvous in a full joint period
  std::int64_t bound = 0;
  bool violated = false;
  Witness witness;
  std::uint64_t expansions_checked = 0;
  bool expansions_sampled = false;
  std::uint64_t permutations_checked = 0;
  bool permutations_sampled = false;
  TtrStatistics ttr;  // over every met instance
};

// The protocol selects which choices are enumerated: a random rule means
// every value in its support, a fixed rule means the single fixed value.
struct VerifyOptions {
  Protocol protocol = Protocol::async();
  std::uint64_t expansion_limit = 10000;  // exhaustive up to this many combos
  std::uint64_t expansion_samples = 2000;
  std::uint64_t permutation_samples = 2000;  // when not exhaustive
  std::uint64_t seed = 1;                    // used only for sampling
  unsigned threads = 1;
};

// Largest set accepted by verify_symmetric with exhaustive permutations.
inline constexpr std::size_t kMaxExhaustiveSymmetric = 9;
// Largest sets accepted by verify_asymmetric.
inline constexpr std::size_t kMaxAsymmetric = 7;

// Worst TTR over every start index, expansion, receiver permutation and
// offset, against 2 m_p - 1.
VerificationReport verify_symmetric(const ChannelSet& set, bool exhaustive_permutations,
                                    const VerifyOptions& options = {});

// Same enumeration for two sets, against 2 m_p n - 2G + 2.
VerificationReport verify_asymmetric(const ChannelSet& sender, const ChannelSet& receiver,
                                     const VerifyOptions& options = {});

// Re-simulates a witness through simulate_pair; returns the TTR or 0.
Slot replay(const ChannelSet& sender, const ChannelSet& receiver, const Witness& witness);

// Channels at window_start, window_start + 2, ..., window_start + 2(m_p - 1)
// form the multiset C^1_* exactly.
bool check_odd_slot_permutation(const SenderStrategy& s, Slot window_start);

}  // namespace isac
