#ifndef GRPLAT_INTEGER_HPP
#define GRPLAT_INTEGER_HPP

#include <cstdint>
#include <optional>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

namespace grplat {

// All Moebius/totient arithmetic is exact; no silent overflow anywhere.
using Integer = boost::multiprecision::cpp_int;

// Writes n = p^m with p prime, m >= 1 if possible.
std::optional<std::pair<std::uint64_t, int>> as_prime_power(std::uint64_t n);

// Largest d < n with lo | d and d | n; 0 if none exists.
std::uint64_t largest_proper_divisor_multiple(std::uint64_t n, std::uint64_t lo);

}  // namespace grplat

#endif
