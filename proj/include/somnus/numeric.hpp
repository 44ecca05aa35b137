#pragma once

#include <cstdint>

namespace somnus {

bool is_prime(std::int64_t n);
std::int64_t next_prime(std::int64_t n);  // smallest prime >= n

// Smallest x with x^k >= m (integer arithmetic, m >= 1, k >= 1).
std::int64_t ceil_kth_root(std::int64_t m, std::int64_t k);

// Smallest e with 2^e >= x (x >= 1).
std::int64_t ceil_log2(std::int64_t x);

// Iterated logarithm: number of times log2 must be applied to reach <= 1.
std::int64_t log_star(double x);

// splitmix64 finalizer, used to desynchronize per-vertex choices.
std::uint64_t mix64(std::uint64_t x);

}  // namespace somnus
