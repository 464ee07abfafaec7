#pragma once

#include <cstdint>
#include <optional>
#include <span>

#include "isac/channel.hpp"
#include "isac/hopping.hpp"

namespace isac {

enum class AvailabilityModel { kSymmetric, kAsymmetric };

struct RendezvousOutcome {
  std::optional<Slot> ttr;  // empty on timeout
  std::optional<ChannelId> channel;
  Slot offset = 0;

  bool met() const { return ttr.has_value(); }
};

// Least t in [1, max_slots] with sender(t) == receiver(t + offset). The
// receiver has been hopping for `offset` slots when the sender starts.
// Throws ConfigError for max_slots < 1 or offset < 0.
RendezvousOutcome simulate_pair(const HoppingStrategy& sender, const HoppingStrategy& receiver,
                                Slot offset, Slot max_slots);

// Same search over precomputed single periods of both schedules:
// sender_cycle[i] = sender(i + 1), receiver_cycle[j] = receiver(j + 1).
// Returns the TTR, or 0 when there is no meeting within max_slots.
Slot first_meeting(std::span<const ChannelId> sender_cycle,
                   std::span<const ChannelId> receiver_cycle, Slot offset, Slot max_slots);

struct BoundSpec {
  AvailabilityModel model;
  std::int64_t value;
};

// Symmetric: 2 m_p - 1. Asymmetric: 2 m_p n - 2G + 2.
// Throws DomainError for m, n < 1 or G outside [1, min(m, n)].
BoundSpec ttr_bound(AvailabilityModel model, int m, int n, int common);

}  // namespace isac
