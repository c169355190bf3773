#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "commspec/arith.hpp"
#include "commspec/errors.hpp"

namespace commspec {

inline constexpr long long kDefaultFieldCap = 1LL << 16;

// Residue polynomial over GF(p), constant-first, every coefficient in [0, p).
struct FieldElement {
    std::vector<int> coeffs;

    bool operator==(const FieldElement& other) const { return coeffs == other.coeffs; }
    bool operator!=(const FieldElement& other) const { return !(*this == other); }
};

// GF(p^n) as GF(p)[x] modulo the lexicographically smallest irreducible monic
// polynomial of degree n (coefficient vectors compared constant-first).
// Immutable after construction; all element values are canonical.
class FiniteField {
public:
    long long p() const { return p_; }
    int n() const { return n_; }
    long long order() const { return order_; }

    // Length n+1, constant-first, monic.
    const std::vector<int>& modulus() const { return modulus_; }

    FieldElement zero() const { return FieldElement{std::vector<int>(static_cast<std::size_t>(n_), 0)}; }

    FieldElement one() const {
        auto e = zero();
        e.coeffs[0] = 1;
        return e;
    }

    bool is_valid(const FieldElement& x) const {
        if (static_cast<int>(x.coeffs.size()) != n_) return false;
        for (int c : x.coeffs)
            if (c < 0 || c >= p_) return false;
        return true;
    }

    // Canonical integer encoding sum(coeffs[i] * p^i); inverse of element_from_code.
    long long code(const FieldElement& x) const {
        check(x);
        long long v = 0;
        for (int i = n_ - 1; i >= 0; --i) v = v * p_ + x.coeffs[static_cast<std::size_t>(i)];
        return v;
    }

    FieldElement element_from_code(long long code) const {
        if (code < 0 || code >= order_) throw std::invalid_argument("field element code out of range");
        auto e = zero();
        for (int i = 0; i < n_; ++i) {
            e.coeffs[static_cast<std::size_t>(i)] = static_cast<int>(code % p_);
            code /= p_;
        }
        return e;
    }

    FieldElement add(const FieldElement& x, const FieldElement& y) const {
        check(x); check(y);
        auto r = x;
        for (int i = 0; i < n_; ++i) {
            r.coeffs[static_cast<std::size_t>(i)] =
                static_cast<int>((r.coeffs[static_cast<std::size_t>(i)] + y.coeffs[static_cast<std::size_t>(i)]) % p_);
        }
        return r;
    }

    FieldElement neg(const FieldElement& x) const {
        check(x);
        auto r = x;
        for (auto& c : r.coeffs) c = static_cast<int>((p_ - c) % p_);
        return r;
    }

    FieldElement sub(const FieldElement& x, const FieldElement& y) const { return add(x, neg(y)); }

    FieldElement mul(const FieldElement& x, const FieldElement& y) const {
        check(x); check(y);
        std::vector<long long> prod(static_cast<std::size_t>(2 * n_ - 1), 0);
        for (int i = 0; i < n_; ++i) {
            if (x.coeffs[static_cast<std::size_t>(i)] == 0) continue;
            for (int j = 0; j < n_; ++j)
                prod[static_cast<std::size_t>(i + j)] +=
                    static_cast<long long>(x.coeffs[static_cast<std::size_t>(i)]) * y.coeffs[static_cast<std::size_t>(j)];
        }
        for (auto& c : prod) c %= p_;
        reduce(prod);
        auto r = zero();
        for (int i = 0; i < n_; ++i) r.coeffs[static_cast<std::size_t>(i)] = static_cast<int>(prod[static_cast<std::size_t>(i)]);
        return r;
    }

    // Multiplicative inverse by extended Euclid on polynomials over GF(p).
    FieldElement inv(const FieldElement& x) const {
        check(x);
        if (x == zero()) throw std::domain_error("inversion of zero field element");
        // Invariants: a = s * x (mod modulus), b = t * x (mod modulus).
        std::vector<int> a(modulus_), b(x.coeffs), s(1, 0), t(1, 1);
        trim(b);
        while (poly_degree(b) > 0 || b[0] != 0) {
            if (poly_degree(b) == 0) break;
            auto [q, r] = poly_divmod(a, b);
            a = std::move(b);
            b = std::move(r);
            auto next = poly_sub(s, poly_mul(q, t));
            s = std::move(t);
            t = std::move(next);
        }
        // b is a nonzero constant: gcd = b[0]; scale t by its inverse mod p.
        long long c = inv_mod_p(b[0]);
        auto r = zero();
        for (std::size_t i = 0; i < t.size() && i < static_cast<std::size_t>(n_); ++i)
            r.coeffs[i] = static_cast<int>((static_cast<long long>(t[i]) * c) % p_);
        return r;
    }

    // x -> x^p, the Frobenius endomorphism (squaring when p = 2).
    FieldElement frobenius(const FieldElement& x) const {
        check(x);
        FieldElement acc = one(), base = x;
        long long e = p_;
        while (e > 0) {
            if (e & 1) acc = mul(acc, base);
            base = mul(base, base);
            e >>= 1;
        }
        return acc;
    }

    std::vector<FieldElement> elements() const {
        std::vector<FieldElement> all;
        all.reserve(static_cast<std::size_t>(order_));
        for (long long c = 0; c < order_; ++c) all.push_back(element_from_code(c));
        return all;
    }

    friend FiniteField construct_field(long long p, int n, long long cap);

private:
    FiniteField() = default;

    void check(const FieldElement& x) const {
        if (!is_valid(x)) throw std::invalid_argument("element does not belong to GF(" + std::to_string(order_) + ")");
    }

    static int poly_degree(const std::vector<int>& f) {
        int d = static_cast<int>(f.size()) - 1;
        while (d > 0 && f[static_cast<std::size_t>(d)] == 0) --d;
        return d;
    }

    static void trim(std::vector<int>& f) {
        while (f.size() > 1 && f.back() == 0) f.pop_back();
    }

    long long inv_mod_p(long long a) const {
        return static_cast<long long>(powmod_u64(static_cast<std::uint64_t>(a % p_),
                                                 static_cast<std::uint64_t>(p_ - 2),
                                                 static_cast<std::uint64_t>(p_)));
    }

    std::vector<int> poly_mul(const std::vector<int>& f, const std::vector<int>& g) const {
        std::vector<int> out(f.size() + g.size() - 1, 0);
        for (std::size_t i = 0; i < f.size(); ++i) {
            if (f[i] == 0) continue;
            for (std::size_t j = 0; j < g.size(); ++j)
                out[i + j] = static_cast<int>((out[i + j] + static_cast<long long>(f[i]) * g[j]) % p_);
        }
        trim(out);
        return out;
    }

    std::vector<int> poly_sub(const std::vector<int>& f, const std::vector<int>& g) const {
        std::vector<int> out(std::max(f.size(), g.size()), 0);
        for (std::size_t i = 0; i < out.size(); ++i) {
            long long a = i < f.size() ? f[i] : 0;
            long long b = i < g.size() ? g[i] : 0;
            out[i] = static_cast<int>(((a - b) % p_ + p_) % p_);
        }
        trim(out);
        return out;
    }

    std::pair<std::vector<int>, std::vector<int>> poly_divmod(std::vector<int> num, const std::vector<int>& den) const {
        trim(num);
        int dd = poly_degree(den);
        long long lead_inv = inv_mod_p(den[static_cast<std::size_t>(dd)]);
        std::vector<int> q(num.size(), 0);
        for (int k = poly_degree(num); k >= dd; --k) {
            long long c = (static_cast<long long>(num[static_cast<std::size_t>(k)]) * lead_inv) % p_;
            if (c == 0) continue;
            q[static_cast<std::size_t>(k - dd)] = static_cast<int>(c);
            for (int i = 0; i <= dd; ++i) {
                auto& tgt = num[static_cast<std::size_t>(k - dd + i)];
                tgt = static_cast<int>(((tgt - c * den[static_cast<std::size_t>(i)]) % p_ + p_) % p_);
            }
        }
        trim(q);
        trim(num);
        return {q, num};
    }

    // Reduce a (possibly long) coefficient vector modulo the field modulus.
    void reduce(std::vector<long long>& f) const {
        for (int k = static_cast<int>(f.size()) - 1; k >= n_; --k) {
            long long c = f[static_cast<std::size_t>(k)] % p_;
            if (c == 0) continue;
            f[static_cast<std::size_t>(k)] = 0;
            for (int i = 0; i < n_; ++i) {
                auto& tgt = f[static_cast<std::size_t>(k - n_ + i)];
                tgt = ((tgt - c * modulus_[static_cast<std::size_t>(i)]) % p_ + p_) % p_;
            }
        }
    }

    long long p_ = 0;
    int n_ = 0;
    long long order_ = 0;
    std::vector<int> modulus_;
};

namespace detail {

// Trial division by every monic polynomial of degree 1..deg/2 over GF(p).
inline bool is_irreducible_monic(const std::vector<int>& f, long long p) {
    int deg = static_cast<int>(f.size()) - 1;
    if (deg == 1) return true;
    for (int d = 1; 2 * d <= deg; ++d) {
        // enumerate monic divisor candidates of degree d
        std::vector<int> g(static_cast<std::size_t>(d) + 1, 0);
        g.back() = 1;
        long long count = 1;
        for (int i = 0; i < d; ++i) count *= p;
        for (long long c = 0; c < count; ++c) {
            long long v = c;
            for (int i = 0; i < d; ++i) {
                g[static_cast<std::size_t>(i)] = static_cast<int>(v % p);
                v /= p;
            }
            // remainder of f mod g
            std::vector<long long> rem(f.begin(), f.end());
            for (int k = deg; k >= d; --k) {
                long long lead = rem[static_cast<std::size_t>(k)] % p;
                if (lead == 0) continue;
                rem[static_cast<std::size_t>(k)] = 0;
                for (int i = 0; i < d; ++i) {
                    auto& tgt = rem[static_cast<std::size_t>(k - d + i)];
                    tgt = ((tgt - lead * g[static_cast<std::size_t>(i)]) % p + p) % p;
                }
            }
            bool zero = true;
            for (int i = 0; i < d; ++i)
                if (rem[static_cast<std::size_t>(i)] % p != 0) { zero = false; break; }
            if (zero) return false;
        }
    }
    return true;
}

} // namespace detail

inline FiniteField construct_field(long long p, int n, long long cap = kDefaultFieldCap) {
    if (!is_prime(p)) throw std::invalid_argument("field characteristic must be prime, got " + std::to_string(p));
    if (n < 1) throw std::invalid_argument("extension degree must be >= 1");
    auto order = checked_pow(p, n, cap);
    if (!order) throw CapExceededError("field order " + std::to_string(p) + "^" + std::to_string(n) + " exceeds cap", cap);

    FiniteField fld;
    fld.p_ = p;
    fld.n_ = n;
    fld.order_ = *order;

    // Scan monic degree-n polynomials in constant-first lexicographic order;
    // the first irreducible one is the canonical modulus.
    std::vector<int> f(static_cast<std::size_t>(n) + 1, 0);
    f.back() = 1;
    long long count = *order; // p^n low-coefficient combinations
    for (long long c = 0; c < count; ++c) {
        long long v = c;
        // constant-first lex order: the constant coefficient is most significant
        for (int i = 0; i < n; ++i) {
            long long digit_scale = 1;
            for (int j = i + 1; j < n; ++j) digit_scale *= p;
            f[static_cast<std::size_t>(i)] = static_cast<int>(v / digit_scale);
            v %= digit_scale;
        }
        if (detail::is_irreducible_monic(f, p)) {
            fld.modulus_ = f;
            return fld;
        }
    }
    throw std::logic_error("no irreducible polynomial found"); // unreachable
}

// Dense operation tables over element codes, for small fields feeding the
// matrix-group constructors.
struct FieldTables {
    long long order = 0;
    std::vector<std::uint16_t> mul_table; // order x order
    std::vector<std::uint16_t> add_table; // order x order
    std::vector<std::uint16_t> neg_table;
    std::vector<std::uint16_t> frob_table;

    std::uint16_t mul(long long a, long long b) const {
        return mul_table[static_cast<std::size_t>(a * order + b)];
    }
    std::uint16_t add(long long a, long long b) const {
        return add_table[static_cast<std::size_t>(a * order + b)];
    }
};

inline FieldTables make_field_tables(const FiniteField& fld) {
    if (fld.order() > 4096) throw CapExceededError("field tables limited to order 4096", 4096);
    FieldTables t;
    t.order = fld.order();
    auto elems = fld.elements();
    t.mul_table.resize(static_cast<std::size_t>(t.order * t.order));
    t.add_table.resize(static_cast<std::size_t>(t.order * t.order));
    t.neg_table.resize(static_cast<std::size_t>(t.order));
    t.frob_table.resize(static_cast<std::size_t>(t.order));
    for (long long a = 0; a < t.order; ++a) {
        t.neg_table[static_cast<std::size_t>(a)] =
            static_cast<std::uint16_t>(fld.code(fld.neg(elems[static_cast<std::size_t>(a)])));
        t.frob_table[static_cast<std::size_t>(a)] =
            static_cast<std::uint16_t>(fld.code(fld.frobenius(elems[static_cast<std::size_t>(a)])));
        for (long long b = 0; b < t.order; ++b) {
            t.mul_table[static_cast<std::size_t>(a * t.order + b)] = static_cast<std::uint16_t>(
                fld.code(fld.mul(elems[static_cast<std::size_t>(a)], elems[static_cast<std::size_t>(b)])));
            t.add_table[static_cast<std::size_t>(a * t.order + b)] = static_cast<std::uint16_t>(
                fld.code(fld.add(elems[static_cast<std::size_t>(a)], elems[static_cast<std::size_t>(b)])));
        }
    }
    return t;
}

} // namespace commspec
