#pragma once

#include <atomic>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <thread>
#include <vector>

#include "commspec/arith.hpp"
#include "commspec/commuting_graph.hpp"
#include "commspec/errors.hpp"
#include "commspec/graph.hpp"
#include "commspec/int_polynomial.hpp"

namespace commspec {

struct CharPolyOptions {
    int max_vertices = 600;     // spectral cap
    int bareiss_check_max = 256; // independent determinant cross-check up to this size
    int threads = 1;            // per-prime passes are independent
};

namespace detail {

// Reduction modulo a fixed prime p < 2^31 for inputs below 2^63.
struct ModCtx {
    std::uint64_t p;
    std::uint64_t magic; // floor(2^64 / p); exact since p never divides 2^64

    explicit ModCtx(std::uint64_t prime) : p(prime), magic(~0ULL / prime) {}

    std::uint64_t reduce(std::uint64_t x) const {
        std::uint64_t q = static_cast<std::uint64_t>((static_cast<unsigned __int128>(x) * magic) >> 64);
        std::uint64_t r = x - q * p;
        while (r >= p) r -= p;
        return r;
    }

    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const { return reduce(a * b); }

    std::uint64_t pow(std::uint64_t b, std::uint64_t e) const {
        std::uint64_t r = 1;
        b = reduce(b);
        while (e) {
            if (e & 1) r = mul(r, b);
            b = mul(b, b);
            e >>= 1;
        }
        return r;
    }
};

// Characteristic polynomial of the adjacency matrix modulo p: similarity
// reduction to Hessenberg form followed by the leading-minor recurrence.
// Returns n+1 coefficients, constant-first, monic.
inline std::vector<std::uint64_t> charpoly_mod(const AdjacencyMatrix& a, std::uint64_t prime) {
    const int n = a.size();
    ModCtx m(prime);
    std::vector<std::uint64_t> h(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (a.at(i, j)) h[static_cast<std::size_t>(i) * n + static_cast<std::size_t>(j)] = 1;

    auto at = [&](int r, int c) -> std::uint64_t& { return h[static_cast<std::size_t>(r) * n + static_cast<std::size_t>(c)]; };

    for (int k = 0; k + 2 < n; ++k) {
        int piv = -1;
        for (int i = k + 1; i < n; ++i)
            if (at(i, k) != 0) { piv = i; break; }
        if (piv < 0) continue;
        if (piv != k + 1) {
            for (int c = 0; c < n; ++c) std::swap(at(piv, c), at(k + 1, c));
            for (int r = 0; r < n; ++r) std::swap(at(r, piv), at(r, k + 1));
        }
        std::uint64_t dinv = m.pow(at(k + 1, k), prime - 2);
        for (int i = k + 2; i < n; ++i) {
            std::uint64_t f = m.mul(at(i, k), dinv);
            if (f == 0) continue;
            std::uint64_t nf = prime - f;
            std::uint64_t* row_i = &at(i, 0);
            std::uint64_t* row_p = &at(k + 1, 0);
            for (int j = k; j < n; ++j) row_i[j] = m.reduce(row_i[j] + nf * row_p[j]);
            for (int r = 0; r < n; ++r) at(r, k + 1) = m.reduce(at(r, k + 1) + f * at(r, i));
        }
    }

    // p_m(x) = (x - H[m,m]) p_{m-1}(x) - sum_i H[i,m] (prod_j H[j,j-1]) p_{i-1}(x)
    std::vector<std::vector<std::uint64_t>> polys(static_cast<std::size_t>(n) + 1);
    polys[0] = {1};
    for (int mm = 1; mm <= n; ++mm) {
        auto& pm = polys[static_cast<std::size_t>(mm)];
        pm.assign(static_cast<std::size_t>(mm) + 1, 0);
        const auto& prev = polys[static_cast<std::size_t>(mm) - 1];
        std::uint64_t diag = at(mm - 1, mm - 1);
        std::uint64_t ndiag = diag ? prime - diag : 0;
        for (int k = 0; k < mm; ++k) {
            pm[static_cast<std::size_t>(k) + 1] = m.reduce(pm[static_cast<std::size_t>(k) + 1] + prev[static_cast<std::size_t>(k)]);
            if (ndiag) pm[static_cast<std::size_t>(k)] = m.reduce(pm[static_cast<std::size_t>(k)] + ndiag * prev[static_cast<std::size_t>(k)]);
        }
        std::uint64_t prod = 1;
        for (int i = mm - 1; i >= 1; --i) {
            prod = m.mul(prod, at(i, i - 1));
            if (prod == 0) break;
            std::uint64_t coef = m.mul(at(i - 1, mm - 1), prod);
            if (coef == 0) continue;
            std::uint64_t ncoef = prime - coef;
            const auto& pi = polys[static_cast<std::size_t>(i) - 1];
            for (std::size_t k = 0; k < pi.size(); ++k)
                pm[k] = m.reduce(pm[k] + ncoef * pi[k]);
        }
    }
    return polys[static_cast<std::size_t>(n)];
}

// Coefficient-size bound in bits: |c_{n-k}| <= C(n,k) * rho^k with rho an
// eigenvalue bound (max degree for adjacency matrices).
inline int coefficient_bound_bits(int n, int rho) {
    double lr = std::log2(static_cast<double>(std::max(rho, 2)));
    double lg = 0.0, best = 1.0;
    for (int k = 1; k <= n; ++k) {
        lg += std::log2(static_cast<double>(n - k + 1)) - std::log2(static_cast<double>(k));
        best = std::max(best, lg + k * lr);
    }
    return static_cast<int>(best) + 16;
}

inline std::vector<std::uint64_t> primes_for_bits(int bits) {
    std::vector<std::uint64_t> primes;
    double have = 0.0;
    for (long long c = (1LL << 31) - 1; have < bits + 1 && c > 3; c -= 2) {
        if (is_prime(c)) {
            primes.push_back(static_cast<std::uint64_t>(c));
            have += std::log2(static_cast<double>(c));
        }
    }
    return primes;
}

} // namespace detail

// Fraction-free determinant over exact integers (with row pivoting).
inline BigInt bareiss_determinant(std::vector<std::vector<BigInt>> m) {
    const int n = static_cast<int>(m.size());
    if (n == 0) return 1;
    BigInt prev = 1;
    int sign = 1;
    for (int k = 0; k + 1 < n; ++k) {
        if (m[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)] == 0) {
            int swap_row = -1;
            for (int i = k + 1; i < n; ++i)
                if (m[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] != 0) { swap_row = i; break; }
            if (swap_row < 0) return 0;
            std::swap(m[static_cast<std::size_t>(k)], m[static_cast<std::size_t>(swap_row)]);
            sign = -sign;
        }
        const BigInt& pivot = m[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)];
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                BigInt t = m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] * pivot -
                           m[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] *
                               m[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)];
                m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = t / prev; // exact
            }
            m[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] = 0;
        }
        prev = pivot;
    }
    BigInt det = m[static_cast<std::size_t>(n) - 1][static_cast<std::size_t>(n) - 1];
    return sign < 0 ? BigInt(-det) : det;
}

// Exact det(xI - A) by modular Hessenberg passes and Chinese remaindering.
// The reconstruction is cross-checked against a fraction-free determinant
// evaluation at x = n+1; a mismatch is a hard error.
inline IntPolynomial char_poly(const AdjacencyMatrix& a, const CharPolyOptions& opts = {}) {
    const int n = a.size();
    if (n > opts.max_vertices)
        throw CapExceededError("characteristic polynomial limited to " + std::to_string(opts.max_vertices) +
                                   " vertices, got " + std::to_string(n),
                               opts.max_vertices);
    if (n == 0) return IntPolynomial::one();

    int rho = 1;
    for (int u = 0; u < n; ++u) rho = std::max(rho, a.degree(u));
    const int bits = detail::coefficient_bound_bits(n, rho);
    const auto primes = detail::primes_for_bits(bits);

    std::vector<std::vector<std::uint64_t>> residues(primes.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= primes.size()) break;
            residues[i] = detail::charpoly_mod(a, primes[i]);
        }
    };
    if (opts.threads > 1) {
        std::vector<std::thread> pool;
        for (int t = 0; t < opts.threads; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    } else {
        worker();
    }

    // Incremental CRT per coefficient, then lift to symmetric range.
    std::vector<BigInt> coeffs(static_cast<std::size_t>(n) + 1, 0);
    BigInt modulus = 1;
    for (std::size_t i = 0; i < primes.size(); ++i) {
        const std::uint64_t p = primes[i];
        const std::uint64_t m_mod_p = static_cast<std::uint64_t>(modulus % p);
        detail::ModCtx ctx(p);
        const std::uint64_t m_inv = ctx.pow(m_mod_p, p - 2);
        for (std::size_t k = 0; k <= static_cast<std::size_t>(n); ++k) {
            std::uint64_t cur = static_cast<std::uint64_t>(coeffs[k] % p);
            std::uint64_t delta = residues[i][k] >= cur ? residues[i][k] - cur : residues[i][k] + p - cur;
            std::uint64_t t = ctx.mul(delta, m_inv);
            coeffs[k] += modulus * t;
        }
        modulus *= p;
    }
    BigInt half = modulus / 2;
    for (auto& c : coeffs)
        if (c > half) c -= modulus;

    IntPolynomial result(std::move(coeffs));
    if (!result.is_monic() || result.degree() != n)
        throw std::logic_error("characteristic polynomial reconstruction is not monic");

    if (n <= opts.bareiss_check_max) {
        std::vector<std::vector<BigInt>> m(static_cast<std::size_t>(n),
                                           std::vector<BigInt>(static_cast<std::size_t>(n), 0));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                    i == j ? BigInt(n + 1) : BigInt(a.at(i, j) ? -1 : 0);
        if (bareiss_determinant(std::move(m)) != result.evaluate(n + 1))
            throw std::logic_error("characteristic polynomial failed the determinant cross-check");
    }
    return result;
}

inline IntPolynomial char_poly(const CommutingGraph& cg, const CharPolyOptions& opts = {}) {
    return char_poly(cg.adj, opts);
}

} // namespace commspec
