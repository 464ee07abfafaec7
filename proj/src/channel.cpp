#include "isac/channel.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <ostream>
#include <string>

#include "isac/error.hpp"

namespace isac {

std::ostream& operator<<(std::ostream& os, ChannelId c) { return os << c.value; }

ChannelSet::ChannelSet(std::vector<ChannelId> channels) : channels_(std::move(channels)) {
  if (channels_.empty()) throw DomainError("channel set must not be empty");
  std::vector<ChannelId> sorted = channels_;
  std::sort(sorted.begin(), sorted.end());
  if (sorted.front().value < 1) {
    throw ConfigError("channel ids start at 1, got " + std::to_string(sorted.front().value));
  }
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw ConfigError("channel set contains a duplicate id");
  }
}

ChannelSet::ChannelSet(std::initializer_list<int> ids)
    : ChannelSet(from_ints(std::span(ids.begin(), ids.size()))) {}

ChannelSet ChannelSet::from_ints(std::span<const int> ids) {
  std::vector<ChannelId> v;
  v.reserve(ids.size());
  for (int id : ids) v.push_back(ChannelId{id});
  return ChannelSet(std::move(v));
}

bool ChannelSet::contains(ChannelId c) const {
  return std::find(channels_.begin(), channels_.end(), c) != channels_.end();
}

int ChannelSet::max_id() const {
  return std::max_element(channels_.begin(), channels_.end())->value;
}

void ChannelSet::check_universe(int universe) const {
  if (max_id() > universe) {
    throw ConfigError("channel " + std::to_string(max_id()) + " outside universe [1, " +
                      std::to_string(universe) + "]");
  }
}

std::vector<ChannelId> intersection(const ChannelSet& a, const ChannelSet& b) {
  std::vector<ChannelId> out;
  for (ChannelId c : a) {
    if (b.contains(c)) out.push_back(c);
  }
  return out;
}

std::size_t common_count(const ChannelSet& a, const ChannelSet& b) {
  return intersection(a, b).size();
}

namespace {

// First `take` entries of a uniform random permutation of 1..universe.
std::vector<ChannelId> draw_distinct(int universe, int take, Rng& rng) {
  std::vector<ChannelId> pool(static_cast<std::size_t>(universe));
  for (int i = 0; i < universe; ++i) pool[static_cast<std::size_t>(i)] = ChannelId{i + 1};
  for (int i = 0; i < take; ++i) {
    const auto j = static_cast<std::size_t>(rng.uniform(i, universe - 1));
    std::swap(pool[static_cast<std::size_t>(i)], pool[j]);
  }
  pool.resize(static_cast<std::size_t>(take));
  return pool;
}

ChannelSet sorted_set(std::vector<ChannelId> v) {
  std::sort(v.begin(), v.end());
  return ChannelSet(std::move(v));
}

}  // namespace

ScenarioPair gen_symmetric_scenario(int universe, int m, Rng& rng) {
  if (universe < 1) throw ConfigError("universe size Q must be >= 1");
  if (m < 1 || m > universe) {
    throw ConfigError("symmetric scenario needs 1 <= m <= Q (m=" + std::to_string(m) +
                      ", Q=" + std::to_string(universe) + ")");
  }
  ChannelSet set = sorted_set(draw_distinct(universe, m, rng));
  return ScenarioPair{set, set, static_cast<std::size_t>(m)};
}

ScenarioPair gen_asymmetric_scenario(int universe, int m, int n, int common, Rng& rng) {
  if (common < 1) throw ConfigError("G must be >= 1 (no common channel, no rendezvous)");
  if (common > std::min(m, n)) {
    throw ConfigError("G must be <= min(m, n) (G=" + std::to_string(common) +
                      ", m=" + std::to_string(m) + ", n=" + std::to_string(n) + ")");
  }
  if (m + n - common > universe) {
    throw ConfigError("m + n - G must be <= Q (" + std::to_string(m + n - common) + " > " +
                      std::to_string(universe) + ")");
  }
  const std::vector<ChannelId> drawn = draw_distinct(universe, m + n - common, rng);
  const auto g = static_cast<std::ptrdiff_t>(common);
  const auto sender_only = static_cast<std::ptrdiff_t>(m - common);
  std::vector<ChannelId> sender(drawn.begin(), drawn.begin() + g + sender_only);
  std::vector<ChannelId> receiver(drawn.begin(), drawn.begin() + g);
  receiver.insert(receiver.end(), drawn.begin() + g + sender_only, drawn.end());
  return ScenarioPair{sorted_set(std::move(sender)), sorted_set(std::move(receiver)),
                      static_cast<std::size_t>(common)};
}

int theta_to_size(int universe, double theta) {
  if (!(theta > 0.0 && theta <= 1.0)) {
    throw ConfigError("theta must be in (0, 1], got " + std::to_string(theta));
  }
  if (universe < 1) throw ConfigError("universe size Q must be >= 1");
  const auto size = static_cast<int>(std::lround(theta * universe));
  return std::clamp(size, 1, universe);
}

}  // namespace isac
