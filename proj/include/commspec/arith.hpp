#pragma once

#include <cstdint>
#include <optional>
#include <utility>

namespace commspec {

inline std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

inline std::uint64_t powmod_u64(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    std::uint64_t r = m > 1 ? 1 : 0;
    base %= m;
    while (exp > 0) {
        if (exp & 1) r = mulmod_u64(r, base, m);
        base = mulmod_u64(base, base, m);
        exp >>= 1;
    }
    return r;
}

// Deterministic Miller-Rabin; the base set covers all 64-bit integers.
inline bool is_prime(long long n) {
    if (n < 2) return false;
    for (long long p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = static_cast<std::uint64_t>(n - 1);
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL,
                            19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        std::uint64_t x = powmod_u64(a, d, static_cast<std::uint64_t>(n));
        if (x == 1 || x == static_cast<std::uint64_t>(n - 1)) continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod_u64(x, x, static_cast<std::uint64_t>(n));
            if (x == static_cast<std::uint64_t>(n - 1)) { witness = false; break; }
        }
        if (witness) return false;
    }
    return true;
}

// q -> (p, n) with q = p^n, p prime, n >= 1.
inline std::optional<std::pair<long long, int>> prime_power_decompose(long long q) {
    if (q < 2) return std::nullopt;
    long long p = q;
    // smallest prime factor by trial division
    for (long long d = 2; d * d <= q; ++d) {
        if (q % d == 0) { p = d; break; }
    }
    long long rest = q;
    int n = 0;
    while (rest % p == 0) { rest /= p; ++n; }
    if (rest != 1) return std::nullopt;
    return std::make_pair(p, n);
}

// base^exp, or nullopt as soon as the result would exceed `cap`.
inline std::optional<long long> checked_pow(long long base, int exp, long long cap) {
    long long r = 1;
    for (int i = 0; i < exp; ++i) {
        if (r > cap / base) return std::nullopt;
        r *= base;
    }
    return r;
}

} // namespace commspec
