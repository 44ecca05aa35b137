#include "somnus/numeric.hpp"

#include <cmath>
#include <stdexcept>

namespace somnus {

bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::int64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

std::int64_t next_prime(std::int64_t n) {
    if (n < 2) return 2;
    while (!is_prime(n)) ++n;
    return n;
}

std::int64_t ceil_kth_root(std::int64_t m, std::int64_t k) {
    if (m < 1 || k < 1) throw std::invalid_argument("ceil_kth_root: m,k must be >= 1");
    if (k == 1 || m == 1) return k == 1 ? m : 1;
    auto pow_at_least = [&](std::int64_t x) {
        // x^k >= m without overflow
        std::int64_t acc = 1;
        for (std::int64_t i = 0; i < k; ++i) {
            if (acc > m / x + 1) return true;
            acc *= x;
            if (acc >= m) return true;
        }
        return acc >= m;
    };
    std::int64_t lo = 1, hi = 2;
    while (!pow_at_least(hi)) hi *= 2;
    while (lo + 1 < hi) {
        std::int64_t mid = lo + (hi - lo) / 2;
        if (pow_at_least(mid)) hi = mid; else lo = mid;
    }
    return hi;
}

std::int64_t ceil_log2(std::int64_t x) {
    if (x < 1) throw std::invalid_argument("ceil_log2: x must be >= 1");
    std::int64_t e = 0, p = 1;
    while (p < x) { p *= 2; ++e; }
    return e;
}

std::int64_t log_star(double x) {
    std::int64_t k = 0;
    while (x > 1.0) {
        x = std::log2(x);
        ++k;
    }
    return k;
}

std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

}  // namespace somnus
