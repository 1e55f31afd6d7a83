#include "grplat/integer.hpp"

namespace grplat {

std::optional<std::pair<std::uint64_t, int>> as_prime_power(std::uint64_t n) {
  if (n < 2) return std::nullopt;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    int m = 0;
    while (n % p == 0) {
      n /= p;
      ++m;
    }
    if (n != 1) return std::nullopt;
    return std::make_pair(p, m);
  }
  return std::make_pair(n, 1);  // n itself is prime
}

std::uint64_t largest_proper_divisor_multiple(std::uint64_t n, std::uint64_t lo) {
  if (lo == 0 || n % lo != 0) return 0;
  const std::uint64_t q = n / lo;
  if (q == 1) return 0;
  // d = lo * e with e the largest proper divisor of q, i.e. q / (least prime)
  for (std::uint64_t p = 2; p * p <= q; ++p)
    if (q % p == 0) return lo * (q / p);
  return lo;  // q prime: e = 1
}

}  // namespace grplat
