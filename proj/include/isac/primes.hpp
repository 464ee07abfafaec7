#pragma once

#include <cstdint>

namespace isac {

bool is_prime(std::int64_t x);

// Least prime p >= m. Primes start at 2, so m = 1 maps to 2.
// Throws DomainError for m < 1.
std::int64_t smallest_prime_geq(std::int64_t m);

// gcd(x, y) == 1. Throws DomainError unless x, y >= 1.
bool coprime(std::int64_t x, std::int64_t y);

// Number of slots after which the (sender, receiver) phase pair repeats:
// lcm(m_p, 2 n^2) where m_p = smallest_prime_geq(m).
std::int64_t joint_period(std::int64_t m, std::int64_t n);

// Mathematical modulo, result in [0, m).
constexpr std::int64_t floor_mod(std::int64_t a, std::int64_t m) {
  const std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

}  // namespace isac
