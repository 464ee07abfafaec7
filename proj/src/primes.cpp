#include "isac/primes.hpp"

#include <numeric>
#include <string>

#include "isac/error.hpp"

namespace isac {

bool is_prime(std::int64_t x) {
  if (x < 2) return false;
  if (x % 2 == 0) return x == 2;
  for (std::int64_t d = 3; d * d <= x; d += 2) {
    if (x % d == 0) return false;
  }
  return true;
}

std::int64_t smallest_prime_geq(std::int64_t m) {
  if (m < 1) throw DomainError("smallest_prime_geq: m must be >= 1, got " + std::to_string(m));
  std::int64_t p = m < 2 ? 2 : m;
  while (!is_prime(p)) ++p;
  return p;
}

bool coprime(std::int64_t x, std::int64_t y) {
  if (x < 1 || y < 1) throw DomainError("coprime: arguments must be positive");
  return std::gcd(x, y) == 1;
}

std::int64_t joint_period(std::int64_t m, std::int64_t n) {
  if (n < 1) throw DomainError("joint_period: n must be >= 1");
  return std::lcm(smallest_prime_geq(m), 2 * n * n);
}

}  // namespace isac
