#include "isac/protocol.hpp"

#include "isac/error.hpp"

namespace isac {

std::string to_string(const Protocol& p) {
  if (p == Protocol::aligned()) return "aligned";
  if (p == Protocol::async()) return "async";
  std::string s = p.expansion == Expansion::kCyclic ? "cyclic" : "random";
  s += p.receiver_order == ReceiverOrder::kListed ? "/listed" : "/random";
  s += p.offset == OffsetModel::kZero ? "/zero" : "/joint";
  return s;
}

Expansion parse_expansion(std::string_view s) {
  if (s == "random") return Expansion::kRandom;
  if (s == "cyclic") return Expansion::kCyclic;
  throw ConfigError("unknown expansion rule '" + std::string(s) + "' (random|cyclic)");
}

ReceiverOrder parse_receiver_order(std::string_view s) {
  if (s == "random") return ReceiverOrder::kRandom;
  if (s == "listed") return ReceiverOrder::kListed;
  throw ConfigError("unknown receiver order '" + std::string(s) + "' (random|listed)");
}

OffsetModel parse_offset_model(std::string_view s) {
  if (s == "zero") return OffsetModel::kZero;
  if (s == "joint") return OffsetModel::kJointPeriod;
  throw ConfigError("unknown offset model '" + std::string(s) + "' (zero|joint)");
}

Protocol parse_protocol(std::string_view s) {
  if (s == "aligned") return Protocol::aligned();
  if (s == "async") return Protocol::async();
  throw ConfigError("unknown protocol '" + std::string(s) + "' (aligned|async)");
}

}  // namespace isac
