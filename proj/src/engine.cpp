#include "isac/engine.hpp"

#include <algorithm>
#include <string>

#include "isac/error.hpp"
#include "isac/primes.hpp"

namespace isac {

RendezvousOutcome simulate_pair(const HoppingStrategy& sender, const HoppingStrategy& receiver,
                                Slot offset, Slot max_slots) {
  if (max_slots < 1) throw ConfigError("max_slots must be >= 1");
  if (offset < 0) throw ConfigError("offset must be >= 0");
  for (Slot t = 1; t <= max_slots; ++t) {
    const ChannelId c = sender.channel_at(t);
    if (c == receiver.channel_at(t + offset)) return {t, c, offset};
  }
  return {std::nullopt, std::nullopt, offset};
}

Slot first_meeting(std::span<const ChannelId> sender_cycle,
                   std::span<const ChannelId> receiver_cycle, Slot offset, Slot max_slots) {
  const auto sp = sender_cycle.size();
  const auto rp = receiver_cycle.size();
  std::size_t si = 0;
  std::size_t ri = static_cast<std::size_t>(offset % static_cast<Slot>(rp));
  for (Slot t = 1; t <= max_slots; ++t) {
    if (sender_cycle[si] == receiver_cycle[ri]) return t;
    if (++si == sp) si = 0;
    if (++ri == rp) ri = 0;
  }
  return 0;
}

BoundSpec ttr_bound(AvailabilityModel model, int m, int n, int common) {
  if (m < 1 || n < 1) throw DomainError("ttr_bound: m and n must be >= 1");
  const std::int64_t prime = smallest_prime_geq(m);
  if (model == AvailabilityModel::kSymmetric) return {model, 2 * prime - 1};
  if (common < 1) throw DomainError("ttr_bound: G < 1, no common channel means no bound");
  if (common > std::min(m, n)) throw DomainError("ttr_bound: G exceeds min(m, n)");
  return {model, 2 * prime * n - 2 * static_cast<std::int64_t>(common) + 2};
}

}  // namespace isac
