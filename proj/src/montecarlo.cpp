#include "isac/montecarlo.hpp"

#include <algorithm>
#include <string>
#include <thread>

#include "isac/error.hpp"
#include "isac/hopping.hpp"
#include "isac/primes.hpp"

namespace isac {

namespace {

ScenarioPair draw_scenario(const BatchConfig& cfg, Rng& rng) {
  if (cfg.model == AvailabilityModel::kSymmetric) {
    return gen_symmetric_scenario(cfg.universe, cfg.sender_size, rng);
  }
  return gen_asymmetric_scenario(cfg.universe, cfg.sender_size, cfg.receiver_size, cfg.common,
                                 rng);
}

Slot draw_offset(const Protocol& protocol, const ScenarioPair& sc, Rng& rng) {
  if (protocol.offset == OffsetModel::kZero) return 0;
  const auto period = joint_period(static_cast<std::int64_t>(sc.sender.size()),
                                   static_cast<std::int64_t>(sc.receiver.size()));
  return static_cast<Slot>(rng.below(static_cast<std::uint64_t>(period)));
}

struct Partial {
  TtrStatistics stats;
  std::uint64_t censored = 0;
  std::uint64_t above = 0;
  std::optional<Violation> violation;
};

void run_range(const BatchConfig& cfg, const std::optional<ScenarioPair>& fixed,
               std::int64_t bound, std::uint64_t first, std::uint64_t last, Partial& out) {
  for (std::uint64_t run = first; run < last; ++run) {
    Rng rng = Rng::for_stream(cfg.seed, run);
    const ScenarioPair scenario = fixed ? *fixed : draw_scenario(cfg, rng);

    RendezvousOutcome outcome;
    if (cfg.algorithm == Algorithm::kIsac) {
      const auto sender = SenderStrategy::build(scenario.sender, rng, cfg.protocol.expansion);
      const auto receiver =
          ReceiverStrategy::build(scenario.receiver, rng, cfg.protocol.receiver_order);
      const Slot offset = draw_offset(cfg.protocol, scenario, rng);
      outcome = simulate_pair(sender, receiver, offset, cfg.max_slots);
      if (!outcome.met() && cfg.max_slots >= bound && !out.violation) {
        out.violation = Violation{run,
                                  scenario.sender,
                                  scenario.receiver,
                                  sender.start_index(),
                                  {sender.extra().begin(), sender.extra().end()},
                                  {receiver.permutation().begin(), receiver.permutation().end()},
                                  offset};
      }
    } else {
      const RandomStrategy sender(scenario.sender, rng.next());
      const RandomStrategy receiver(scenario.receiver, rng.next());
      const Slot offset = draw_offset(cfg.protocol, scenario, rng);
      outcome = simulate_pair(sender, receiver, offset, cfg.max_slots);
    }

    const Slot ttr = outcome.met() ? *outcome.ttr : cfg.max_slots;
    out.stats.add(ttr);
    if (!outcome.met()) ++out.censored;
    // A timeout at max_slots >= threshold is known to exceed it.
    if (cfg.threshold && (ttr > *cfg.threshold || (!outcome.met() && ttr >= *cfg.threshold))) {
      ++out.above;
    }
  }
}

}  // namespace

void validate(const BatchConfig& cfg) {
  if (cfg.runs < 1) throw ConfigError("runs must be >= 1");
  if (cfg.max_slots < 1) throw ConfigError("max_slots must be >= 1");
  if (cfg.universe < 1) throw ConfigError("universe size Q must be >= 1");
  const int m = cfg.sender_size;
  const int n = cfg.receiver_size;
  if (cfg.model == AvailabilityModel::kSymmetric) {
    if (m < 1 || m > cfg.universe) throw ConfigError("symmetric model needs 1 <= m <= Q");
    if (n != m || cfg.common != m) throw ConfigError("symmetric model needs m = n = G");
    return;
  }
  if (m < 1 || n < 1) throw ConfigError("set sizes must be >= 1");
  if (cfg.common < 1) throw ConfigError("G must be >= 1");
  if (cfg.common > std::min(m, n)) throw ConfigError("G must be <= min(m, n)");
  if (m + n - cfg.common > cfg.universe) throw ConfigError("m + n - G must be <= Q");
}

BatchResult run_batch(const BatchConfig& cfg) {
  validate(cfg);
  const auto bound =
      ttr_bound(cfg.model, cfg.sender_size, cfg.receiver_size, cfg.common).value;

  std::optional<ScenarioPair> fixed;
  if (cfg.sets == SetPolicy::kFixed) {
    // Stream index past any run index.
    Rng rng = Rng::for_stream(cfg.seed, ~std::uint64_t{0});
    fixed = draw_scenario(cfg, rng);
  }

  const auto workers =
      static_cast<std::uint64_t>(std::max(1u, std::min<unsigned>(cfg.threads, 256)));
  const std::uint64_t chunks = std::min<std::uint64_t>(workers, cfg.runs);
  std::vector<Partial> partials(chunks);
  auto bounds_of = [&](std::uint64_t i) { return cfg.runs * i / chunks; };

  if (chunks == 1) {
    run_range(cfg, fixed, bound, 0, cfg.runs, partials[0]);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(chunks);
    for (std::uint64_t i = 0; i < chunks; ++i) {
      pool.emplace_back([&, i] { run_range(cfg, fixed, bound, bounds_of(i), bounds_of(i + 1), partials[i]); });
    }
  }

  BatchResult result;
  result.bound = bound;
  for (auto& p : partials) {
    result.stats = merge(result.stats, p.stats);
    result.censored += p.censored;
    result.above_threshold += p.above;
    if (!result.violation && p.violation) result.violation = std::move(p.violation);
  }
  return result;
}

}  // namespace isac
