#include "isac/hopping.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "isac/error.hpp"
#include "isac/primes.hpp"

namespace isac {

namespace {

void require_slot(Slot t) {
  if (t < 1) throw DomainError("slot index must be >= 1, got " + std::to_string(t));
}

}  // namespace

SenderStrategy::SenderStrategy(ChannelSet base, std::span<const ChannelId> extra, int start_index)
    : base_(std::move(base)), start_index_(start_index) {
  const auto prime = smallest_prime_geq(static_cast<std::int64_t>(base_.size()));
  if (base_.size() + extra.size() != static_cast<std::size_t>(prime)) {
    throw DomainError("expansion must have m_p - m = " +
                      std::to_string(prime - static_cast<std::int64_t>(base_.size())) +
                      " channels, got " + std::to_string(extra.size()));
  }
  for (ChannelId c : extra) {
    if (!base_.contains(c)) throw DomainError("expansion channel not in the sender's set");
  }
  if (start_index < 1 || start_index > prime) {
    throw DomainError("start index k must be in [1, m_p], got " + std::to_string(start_index));
  }
  expanded_.assign(base_.begin(), base_.end());
  expanded_.insert(expanded_.end(), extra.begin(), extra.end());
}

SenderStrategy SenderStrategy::build(const ChannelSet& base, Rng& rng, Expansion expansion) {
  const auto m = base.size();
  const auto prime = static_cast<std::size_t>(smallest_prime_geq(static_cast<std::int64_t>(m)));
  std::vector<ChannelId> extra;
  extra.reserve(prime - m);
  for (std::size_t h = 0; h < prime - m; ++h) {
    extra.push_back(expansion == Expansion::kCyclic ? base[h % m] : base[rng.below(m)]);
  }
  const int k = static_cast<int>(rng.uniform(1, static_cast<std::int64_t>(prime)));
  return SenderStrategy(base, extra, k);
}

ChannelId SenderStrategy::channel_at(Slot t) const {
  require_slot(t);
  // T = (t - 2 + k) % m_p + 1, 1-based.
  return expanded_[static_cast<std::size_t>(floor_mod(t - 2 + start_index_, prime()))];
}

ReceiverStrategy::ReceiverStrategy(ChannelSet base, std::vector<ChannelId> permutation)
    : base_(std::move(base)), permutation_(std::move(permutation)) {
  std::vector<ChannelId> a(base_.begin(), base_.end());
  std::vector<ChannelId> b = permutation_;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  if (a != b) throw DomainError("receiver order must be a permutation of its channel set");
}

ReceiverStrategy ReceiverStrategy::build(const ChannelSet& base, Rng& rng, ReceiverOrder order) {
  std::vector<ChannelId> perm(base.begin(), base.end());
  if (order == ReceiverOrder::kRandom) {
    for (std::size_t i = perm.size(); i > 1; --i) {
      std::swap(perm[i - 1], perm[rng.below(i)]);
    }
  }
  return ReceiverStrategy(base, std::move(perm));
}

std::int64_t ReceiverStrategy::position_at(Slot t) const {
  require_slot(t);
  const auto n = static_cast<std::int64_t>(permutation_.size());
  if (t % 2 == 1) return (t / 2) % n + 1;
  // Round r = (t - 1) / (2n) rotates the even-slot order left by r.
  return floor_mod((t - 1) / (2 * n) % n + (t / 2) % n - 1, n) + 1;
}

ChannelId ReceiverStrategy::channel_at(Slot t) const {
  return permutation_[static_cast<std::size_t>(position_at(t) - 1)];
}

std::optional<Slot> ReceiverStrategy::period() const {
  const auto n = static_cast<Slot>(permutation_.size());
  return 2 * n * n;
}

RandomStrategy::RandomStrategy(ChannelSet base, std::uint64_t seed)
    : base_(std::move(base)), seed_(seed) {}

ChannelId RandomStrategy::channel_at(Slot t) const {
  require_slot(t);
  const std::uint64_t word = mix64(seed_ ^ mix64(static_cast<std::uint64_t>(t)));
  return base_[reduce(word, base_.size())];
}

ChannelId random_channel_at(const ChannelSet& set, Rng& rng) { return set[rng.below(set.size())]; }

Slot strategy_period(const SenderStrategy& s) { return *s.period(); }
Slot strategy_period(const ReceiverStrategy& r) { return *r.period(); }

std::vector<ChannelId> tabulate(const HoppingStrategy& s, Slot count) {
  std::vector<ChannelId> out;
  out.reserve(static_cast<std::size_t>(count));
  for (Slot t = 1; t <= count; ++t) out.push_back(s.channel_at(t));
  return out;
}

}  // namespace isac
