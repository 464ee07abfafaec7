#include "isac/verifier.hpp"

#include <algorithm>
#include <limits>
#include <string>
#include <thread>

#include "isac/engine.hpp"
#include "isac/error.hpp"
#include "isac/primes.hpp"

namespace isac {

namespace {

using Channels = std::vector<ChannelId>;

struct Choices {
  std::vector<Channels> extras;
  bool extras_sampled = false;
  std::vector<Channels> permutations;
  bool permutations_sampled = false;
  Slot offsets = 1;  // offsets 0 .. offsets-1
};

std::vector<Channels> expansion_choices(const ChannelSet& base, const VerifyOptions& opt,
                                        Rng& rng, bool& sampled) {
  const std::size_t m = base.size();
  const auto extra_len = static_cast<std::size_t>(
      smallest_prime_geq(static_cast<std::int64_t>(m)) - static_cast<std::int64_t>(m));
  sampled = false;
  if (opt.protocol.expansion == Expansion::kCyclic) {
    Channels extra;
    for (std::size_t h = 0; h < extra_len; ++h) extra.push_back(base[h % m]);
    return {extra};
  }

  std::uint64_t combos = 1;
  for (std::size_t i = 0; i < extra_len && combos <= opt.expansion_limit; ++i) combos *= m;
  std::vector<Channels> out;
  if (combos > opt.expansion_limit) {
    sampled = true;
    for (std::uint64_t s = 0; s < opt.expansion_samples; ++s) {
      Channels extra;
      for (std::size_t h = 0; h < extra_len; ++h) extra.push_back(base[rng.below(m)]);
      out.push_back(std::move(extra));
    }
    return out;
  }
  // Odometer over m^(m_p - m) index tuples.
  std::vector<std::size_t> digits(extra_len, 0);
  for (std::uint64_t c = 0; c < combos; ++c) {
    Channels extra;
    for (auto d : digits) extra.push_back(base[d]);
    out.push_back(std::move(extra));
    for (std::size_t i = extra_len; i-- > 0;) {
      if (++digits[i] < m) break;
      digits[i] = 0;
    }
  }
  return out;
}

std::vector<Channels> permutation_choices(const ChannelSet& base, bool exhaustive,
                                          const VerifyOptions& opt, Rng& rng, bool& sampled) {
  Channels listed(base.begin(), base.end());
  sampled = false;
  if (opt.protocol.receiver_order == ReceiverOrder::kListed) return {listed};
  std::vector<Channels> out;
  if (!exhaustive) {
    sampled = true;
    for (std::uint64_t s = 0; s < opt.permutation_samples; ++s) {
      Channels p = listed;
      for (std::size_t i = p.size(); i > 1; --i) std::swap(p[i - 1], p[rng.below(i)]);
      out.push_back(std::move(p));
    }
    return out;
  }
  std::vector<std::size_t> idx(listed.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  do {
    Channels p;
    for (auto i : idx) p.push_back(listed[i]);
    out.push_back(std::move(p));
  } while (std::next_permutation(idx.begin(), idx.end()));
  return out;
}

struct Partial {
  std::uint64_t instances = 0;
  std::uint64_t never_met = 0;
  Slot worst = 0;
  Witness witness;
  TtrStatistics ttr;
};

// Sender cycles indexed [extra][k - 1].
void scan(const ChannelSet& receiver, const Choices& ch,
          const std::vector<std::vector<Channels>>& sender_cycles, Slot joint,
          std::size_t perm_first, std::size_t perm_last, Partial& out) {
  const auto receiver_period = 2 * static_cast<Slot>(receiver.size() * receiver.size());
  for (std::size_t p = perm_first; p < perm_last; ++p) {
    const ReceiverStrategy rs(receiver, ch.permutations[p]);
    const Channels rcycle = tabulate(rs, receiver_period);
    for (std::size_t e = 0; e < ch.extras.size(); ++e) {
      for (std::size_t k = 0; k < sender_cycles[e].size(); ++k) {
        const Channels& scycle = sender_cycles[e][k];
        for (Slot off = 0; off < ch.offsets; ++off) {
          ++out.instances;
          Slot ttr = first_meeting(scycle, rcycle, off, joint);
          if (ttr == 0) {
            ++out.never_met;
            ttr = joint + 1;
          } else {
            out.ttr.add(ttr);
          }
          if (ttr > out.worst) {
            out.worst = ttr;
            out.witness = Witness{static_cast<int>(k + 1), ch.extras[e], ch.permutations[p], off};
          }
        }
      }
    }
  }
}

VerificationReport run(const ChannelSet& sender, const ChannelSet& receiver,
                       bool exhaustive_permutations, std::int64_t bound,
                       const VerifyOptions& opt) {
  Rng rng(opt.seed);
  Choices ch;
  ch.extras = expansion_choices(sender, opt, rng, ch.extras_sampled);
  ch.permutations =
      permutation_choices(receiver, exhaustive_permutations, opt, rng, ch.permutations_sampled);
  const Slot joint = joint_period(static_cast<std::int64_t>(sender.size()),
                                  static_cast<std::int64_t>(receiver.size()));
  ch.offsets = opt.protocol.offset == OffsetModel::kZero ? 1 : joint;

  const auto prime = smallest_prime_geq(static_cast<std::int64_t>(sender.size()));
  std::vector<std::vector<Channels>> sender_cycles;
  for (const auto& extra : ch.extras) {
    auto& per_k = sender_cycles.emplace_back();
    for (int k = 1; k <= prime; ++k) per_k.push_back(tabulate(SenderStrategy(sender, extra, k), prime));
  }

  const std::size_t perms = ch.permutations.size();
  const std::size_t chunks = std::max<std::size_t>(1, std::min<std::size_t>(opt.threads, perms));
  std::vector<Partial> partials(chunks);
  auto edge = [&](std::size_t i) { return perms * i / chunks; };
  if (chunks == 1) {
    scan(receiver, ch, sender_cycles, joint, 0, perms, partials[0]);
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t i = 0; i < chunks; ++i) {
      pool.emplace_back([&, i] {
        scan(receiver, ch, sender_cycles, joint, edge(i), edge(i + 1), partials[i]);
      });
    }
  }

  VerificationReport report;
  report.bound = bound;
  report.expansions_checked = ch.extras.size();
  report.expansions_sampled = ch.extras_sampled;
  report.permutations_checked = perms;
  report.permutations_sampled = ch.permutations_sampled;
  for (auto& p : partials) {
    report.instances_checked += p.instances;
    report.never_met += p.never_met;
    report.ttr = merge(report.ttr, p.ttr);
    // Strictly greater keeps the earliest witness in enumeration order.
    if (p.worst > report.worst_ttr) {
      report.worst_ttr = p.worst;
      report.witness = std::move(p.witness);
    }
  }
  report.violated = report.worst_ttr > bound;
  return report;
}

}  // namespace

VerificationReport verify_symmetric(const ChannelSet& set, bool exhaustive_permutations,
                                    const VerifyOptions& options) {
  if (exhaustive_permutations && options.protocol.receiver_order == ReceiverOrder::kRandom &&
      set.size() > kMaxExhaustiveSymmetric) {
    throw ConfigError("exhaustive permutations need |C| <= " +
                      std::to_string(kMaxExhaustiveSymmetric) + " (got " +
                      std::to_string(set.size()) + "); use sampled permutations");
  }
  const int m = static_cast<int>(set.size());
  const auto bound = ttr_bound(AvailabilityModel::kSymmetric, m, m, m).value;
  return run(set, set, exhaustive_permutations, bound, options);
}

VerificationReport verify_asymmetric(const ChannelSet& sender, const ChannelSet& receiver,
                                     const VerifyOptions& options) {
  if (sender.size() > kMaxAsymmetric || receiver.size() > kMaxAsymmetric) {
    throw ConfigError("asymmetric verification needs |C1|, |C2| <= " +
                      std::to_string(kMaxAsymmetric));
  }
  const auto common = common_count(sender, receiver);
  if (common == 0) throw DomainError("channel sets share no channel; rendezvous is impossible");
  const auto bound = ttr_bound(AvailabilityModel::kAsymmetric, static_cast<int>(sender.size()),
                               static_cast<int>(receiver.size()), static_cast<int>(common))
                         .value;
  return run(sender, receiver, true, bound, options);
}

Slot replay(const ChannelSet& sender, const ChannelSet& receiver, const Witness& witness) {
  const SenderStrategy s(sender, witness.extra, witness.start_index);
  const ReceiverStrategy r(receiver, witness.permutation);
  const Slot joint = joint_period(static_cast<std::int64_t>(sender.size()),
                                  static_cast<std::int64_t>(receiver.size()));
  const auto outcome = simulate_pair(s, r, witness.offset, joint);
  return outcome.ttr.value_or(0);
}

bool check_odd_slot_permutation(const SenderStrategy& s, Slot window_start) {
  if (window_start < 1) throw DomainError("window start must be >= 1");
  std::vector<ChannelId> seen;
  for (int i = 0; i < s.prime(); ++i) seen.push_back(s.channel_at(window_start + 2 * i));
  std::vector<ChannelId> expected(s.expanded().begin(), s.expanded().end());
  std::sort(seen.begin(), seen.end());
  std::sort(expected.begin(), expected.end());
  return seen == expected;
}

}  // namespace isac
