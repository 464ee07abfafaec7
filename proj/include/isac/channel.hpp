#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <vector>

#include "isac/rng.hpp"

namespace isac {

// 1-based channel index in a universe c_1..c_Q.
struct ChannelId {
  int value = 0;
  friend constexpr auto operator<=>(ChannelId, ChannelId) = default;
};

std::ostream& operator<<(std::ostream& os, ChannelId c);

// 1-based time slot index.
using Slot = std::int64_t;

// Ordered list of distinct channels available to one user. Never empty.
class ChannelSet {
 public:
  explicit ChannelSet(std::vector<ChannelId> channels);
  ChannelSet(std::initializer_list<int> ids);

  static ChannelSet from_ints(std::span<const int> ids);

  std::size_t size() const { return channels_.size(); }
  ChannelId operator[](std::size_t i) const { return channels_[i]; }
  std::span<const ChannelId> channels() const { return channels_; }
  auto begin() const { return channels_.begin(); }
  auto end() const { return channels_.end(); }

  bool contains(ChannelId c) const;
  int max_id() const;
  // Throws ConfigError if any id exceeds the universe size.
  void check_universe(int universe) const;

  friend bool operator==(const ChannelSet&, const ChannelSet&) = default;

 private:
  std::vector<ChannelId> channels_;
};

std::size_t common_count(const ChannelSet& a, const ChannelSet& b);
std::vector<ChannelId> intersection(const ChannelSet& a, const ChannelSet& b);

struct ScenarioPair {
  ChannelSet sender;
  ChannelSet receiver;
  std::size_t common = 0;
};

// Both users get the same uniformly random m-subset of [1, Q], ascending.
ScenarioPair gen_symmetric_scenario(int universe, int m, Rng& rng);

// Sets of sizes m and n sharing exactly G channels. Draws G common channels,
// then m-G sender-only and n-G receiver-only channels, all disjoint.
ScenarioPair gen_asymmetric_scenario(int universe, int m, int n, int common, Rng& rng);

// round(theta * Q) clamped to [1, Q].
int theta_to_size(int universe, double theta);

}  // namespace isac
