#include "isac/stats.hpp"

#include "isac/rng.hpp"

#include <algorithm>

namespace isac {

TtrStatistics TtrStatistics::of(std::span<const std::int64_t> samples) {
  TtrStatistics s;
  for (auto x : samples) s.add(x);
  return s;
}

void TtrStatistics::add(std::int64_t ttr) {
  const auto x = static_cast<std::uint64_t>(ttr);
  ++runs_;
  sum_ += x;
  sum_sq_ += x * x;
  max_ = std::max(max_, ttr);
}

double TtrStatistics::mean() const {
  return runs_ == 0 ? 0.0 : static_cast<double>(sum_) / static_cast<double>(runs_);
}

double TtrStatistics::variance() const {
  if (runs_ < 2) return 0.0;
  // (n * sum(x^2) - sum(x)^2) / n^2, numerator exact in 128 bits.
  const auto n = static_cast<uint128>(runs_);
  const auto numerator = n * sum_sq_ - static_cast<uint128>(sum_) * sum_;
  const long double denom = static_cast<long double>(runs_) * static_cast<long double>(runs_);
  return static_cast<double>(static_cast<long double>(numerator) / denom);
}

TtrStatistics merge(const TtrStatistics& a, const TtrStatistics& b) {
  TtrStatistics out;
  out.runs_ = a.runs_ + b.runs_;
  out.sum_ = a.sum_ + b.sum_;
  out.sum_sq_ = a.sum_sq_ + b.sum_sq_;
  out.max_ = std::max(a.max_, b.max_);
  return out;
}

}  // namespace isac
