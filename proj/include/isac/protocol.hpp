#pragma once

#include <string>
#include <string_view>

namespace isac {

// How the sender fills slots m+1..m_p of its expanded channel list.
enum class Expansion {
  kRandom,  // uniform draws from the base set, with replacement
  kCyclic,  // repeat the base set from its first channel: C_{m+h} = C_h
};

// Order in which the receiver walks its set.
enum class ReceiverOrder {
  kRandom,  // uniformly random permutation
  kListed,  // the set's own (ascending) order
};

// Receiver head start, in slots, relative to the sender.
enum class OffsetModel {
  kZero,
  kJointPeriod,  // uniform over [0, lcm(m_p, 2n^2))
};

// The frozen-choice distribution used when strategies are built for a run.
//
// aligned(): only the sender's start index is random. This is the setting
// under which the published ISAC Monte Carlo figures are reproduced.
// async(): every choice is random and the receiver phase is arbitrary.
struct Protocol {
  Expansion expansion = Expansion::kCyclic;
  ReceiverOrder receiver_order = ReceiverOrder::kListed;
  OffsetModel offset = OffsetModel::kZero;

  static constexpr Protocol aligned() { return {}; }
  static constexpr Protocol async() {
    return {Expansion::kRandom, ReceiverOrder::kRandom, OffsetModel::kJointPeriod};
  }

  friend bool operator==(const Protocol&, const Protocol&) = default;
};

std::string to_string(const Protocol& p);

Expansion parse_expansion(std::string_view s);
ReceiverOrder parse_receiver_order(std::string_view s);
OffsetModel parse_offset_model(std::string_view s);
// "aligned" or "async".
Protocol parse_protocol(std::string_view s);

}  // namespace isac
