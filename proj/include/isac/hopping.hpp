#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "isac/channel.hpp"
#include "isac/protocol.hpp"
#include "isac/rng.hpp"

namespace isac {

// A channel-hopping schedule: a pure map from slot t >= 1 to a channel.
// New rendezvous algorithms plug into the engine by deriving from this.
class HoppingStrategy {
 public:
  virtual ~HoppingStrategy() = default;

  // Throws DomainError for t < 1.
  virtual ChannelId channel_at(Slot t) const = 0;

  // Some P with channel_at(t) == channel_at(t + P) for all t >= 1, or
  // nullopt when the schedule has no period.
  virtual std::optional<Slot> period() const = 0;
};

// Sender role: round-robin over the base set expanded to m_p entries,
// starting at a random index k.
class SenderStrategy final : public HoppingStrategy {
 public:
  // `extra` holds the m_p - m expansion channels; each must belong to `base`.
  // `start_index` is k in [1, m_p].
  SenderStrategy(ChannelSet base, std::span<const ChannelId> extra, int start_index);

  static SenderStrategy build(const ChannelSet& base, Rng& rng,
                              Expansion expansion = Expansion::kRandom);

  const ChannelSet& base() const { return base_; }
  // C^1_*: base channels followed by the expansion, length m_p.
  std::span<const ChannelId> expanded() const { return expanded_; }
  std::span<const ChannelId> extra() const {
    return std::span(expanded_).subspan(base_.size());
  }
  int prime() const { return static_cast<int>(expanded_.size()); }
  int start_index() const { return start_index_; }

  ChannelId channel_at(Slot t) const override;
  std::optional<Slot> period() const override { return prime(); }

 private:
  ChannelSet base_;
  std::vector<ChannelId> expanded_;
  int start_index_;
};

// Receiver role: odd slots walk the permutation round-robin; even slots walk
// it too, but each round of n even slots is left-rotated by one more position.
class ReceiverStrategy final : public HoppingStrategy {
 public:
  // `permutation` must contain every channel of `base` exactly once.
  ReceiverStrategy(ChannelSet base, std::vector<ChannelId> permutation);

  static ReceiverStrategy build(const ChannelSet& base, Rng& rng,
                                ReceiverOrder order = ReceiverOrder::kRandom);

  const ChannelSet& base() const { return base_; }
  std::span<const ChannelId> permutation() const { return permutation_; }

  // 1-based position into the permutation used at slot t.
  std::int64_t position_at(Slot t) const;

  ChannelId channel_at(Slot t) const override;
  // 2 n^2.
  std::optional<Slot> period() const override;

 private:
  ChannelSet base_;
  std::vector<ChannelId> permutation_;
};

// Baseline: an independent uniform channel each slot. The draw for slot t is a
// hash of (seed, t), so the schedule is still a pure function of t.
class RandomStrategy final : public HoppingStrategy {
 public:
  RandomStrategy(ChannelSet base, std::uint64_t seed);

  ChannelId channel_at(Slot t) const override;
  std::optional<Slot> period() const override { return std::nullopt; }

 private:
  ChannelSet base_;
  std::uint64_t seed_;
};

// Single uniform draw from the set.
ChannelId random_channel_at(const ChannelSet& set, Rng& rng);

Slot strategy_period(const SenderStrategy& s);
Slot strategy_period(const ReceiverStrategy& r);

// channel_at(1), ..., channel_at(count).
std::vector<ChannelId> tabulate(const HoppingStrategy& s, Slot count);

}  // namespace isac
