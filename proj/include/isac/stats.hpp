#pragma once

#include <cstdint>
#include <span>

namespace isac {

// Count, mean, max and population variance of TTR samples. Kept as integer
// accumulators so that merging partial results is exact and order-free.
class TtrStatistics {
 public:
  TtrStatistics() = default;

  static TtrStatistics of(std::span<const std::int64_t> samples);

  void add(std::int64_t ttr);

  std::uint64_t runs() const { return runs_; }
  std::uint64_t sum() const { return sum_; }
  std::uint64_t sum_of_squares() const { return sum_sq_; }
  std::int64_t max() const { return max_; }
  double mean() const;
  // E[X^2] - E[X]^2; 0 for fewer than two samples.
  double variance() const;

  friend TtrStatistics merge(const TtrStatistics& a, const TtrStatistics& b);
  friend bool operator==(const TtrStatistics&, const TtrStatistics&) = default;

 private:
  std::uint64_t runs_ = 0;
  std::uint64_t sum_ = 0;
  std::uint64_t sum_sq_ = 0;
  std::int64_t max_ = 0;
};

}  // namespace isac
