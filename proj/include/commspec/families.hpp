#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "commspec/arith.hpp"
#include "commspec/errors.hpp"
#include "commspec/finite_field.hpp"
#include "commspec/group_table.hpp"

namespace commspec {

enum class Family {
    Cyclic,
    Dihedral,
    GenQuaternion,
    Quasidihedral,
    M16,
    Z4rtimesZ4,
    D8centralZ4,
    SG16_3,
    Alternating,
    Symmetric,
    SL2,
    GL2,
    PSL2,
    F20,
    HanakiA,
    HanakiB,
    SemidirectPQ,
    Product,
};

struct FamilySpec {
    Family family{};
    std::vector<long long> params;
    std::vector<FamilySpec> factors; // exactly 2 when family == Product

    std::string to_string() const {
        auto p = [&](std::size_t i) { return std::to_string(params.at(i)); };
        switch (family) {
            case Family::Cyclic: return "Z:" + p(0);
            case Family::Dihedral: return "D:" + p(0);
            case Family::GenQuaternion: return "Q:" + p(0);
            case Family::Quasidihedral: return "QD:" + p(0);
            case Family::M16: return "M16";
            case Family::Z4rtimesZ4: return "Z4sZ4";
            case Family::D8centralZ4: return "D8cZ4";
            case Family::SG16_3: return "SG16_3";
            case Family::Alternating: return "A:" + p(0);
            case Family::Symmetric: return "S:" + p(0);
            case Family::SL2: return "SL2:" + p(0);
            case Family::GL2: return "GL2:" + p(0);
            case Family::PSL2: return "PSL2:" + p(0);
            case Family::F20: return "F20";
            case Family::HanakiA: return "HA:" + p(0);
            case Family::HanakiB: return "HB:" + p(0) + ":" + p(1);
            case Family::SemidirectPQ: return "PQ:" + p(0) + ":" + p(1);
            case Family::Product: return factors.at(0).to_string() + " x " + factors.at(1).to_string();
        }
        return "?";
    }
};

namespace detail {

// Deterministic breadth-first closure from a canonical generator list.
// Returns elements in discovery order (identity first) together with the
// generator word that first reached each element.
template <class Elem, class MulFn, class KeyFn>
std::pair<std::vector<Elem>, std::vector<std::string>>
bfs_closure(const Elem& identity, const std::vector<Elem>& gens, const std::string& letters,
            MulFn&& mul, KeyFn&& key, long long expected_order) {
    std::vector<Elem> elems{identity};
    std::vector<std::string> raw_words{""};
    std::unordered_map<std::uint64_t, int> index;
    index.emplace(key(identity), 0);
    for (std::size_t head = 0; head < elems.size(); ++head) {
        Elem cur = elems[head];
        for (std::size_t gi = 0; gi < gens.size(); ++gi) {
            Elem next = mul(cur, gens[gi]);
            auto [it, fresh] = index.emplace(key(next), static_cast<int>(elems.size()));
            if (fresh) {
                elems.push_back(next);
                raw_words.push_back(raw_words[head] + letters[gi]);
                if (static_cast<long long>(elems.size()) > expected_order)
                    throw std::logic_error("group closure exceeded expected order " + std::to_string(expected_order));
            }
        }
    }
    if (static_cast<long long>(elems.size()) != expected_order)
        throw std::logic_error("group closure produced " + std::to_string(elems.size()) +
                               " elements, expected " + std::to_string(expected_order));
    return {std::move(elems), std::move(raw_words)};
}

// "aab" -> "a^2b"; the empty word is the identity "1".
inline std::string render_word(const std::string& raw) {
    if (raw.empty()) return "1";
    std::string out;
    std::size_t i = 0;
    while (i < raw.size()) {
        std::size_t j = i;
        while (j < raw.size() && raw[j] == raw[i]) ++j;
        out += raw[i];
        if (j - i > 1) out += "^" + std::to_string(j - i);
        i = j;
    }
    return out;
}

template <class Elem, class MulFn, class KeyFn>
GroupTable tabulate(const std::vector<Elem>& elems, MulFn&& mul, KeyFn&& key,
                    std::vector<std::string> labels, std::string family) {
    const int n = static_cast<int>(elems.size());
    std::unordered_map<std::uint64_t, int> index;
    index.reserve(static_cast<std::size_t>(n) * 2);
    for (int i = 0; i < n; ++i) index.emplace(key(elems[static_cast<std::size_t>(i)]), i);

    GroupTable g;
    g.order = n;
    g.family = std::move(family);
    g.labels = std::move(labels);
    g.mul.resize(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
    g.inv.assign(static_cast<std::size_t>(n), 0);
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            auto it = index.find(key(mul(elems[static_cast<std::size_t>(a)], elems[static_cast<std::size_t>(b)])));
            if (it == index.end()) throw std::logic_error("product escaped the element set");
            g.mul[static_cast<std::size_t>(a) * static_cast<std::size_t>(n) + static_cast<std::size_t>(b)] =
                static_cast<std::uint16_t>(it->second);
            if (it->second == 0) g.inv[static_cast<std::size_t>(a)] = static_cast<std::uint16_t>(b);
        }
    }
    return g;
}

// One-relator two-generator families all share the normal form a^i b^j with a
// twisted product on (i, j); this flattens such a model.
using Pair = std::pair<int, int>;

template <class MulFn>
GroupTable build_pair_model(MulFn&& mul, const std::vector<Pair>& gens, const std::string& letters,
                            long long expected_order, const std::string& family) {
    auto key = [](const Pair& e) {
        return (static_cast<std::uint64_t>(e.first) << 20) | static_cast<std::uint64_t>(e.second);
    };
    auto [elems, raw] = bfs_closure(Pair{0, 0}, gens, letters, mul, key, expected_order);
    std::vector<std::string> labels;
    labels.reserve(elems.size());
    for (const auto& w : raw) labels.push_back(render_word(w));
    return tabulate(elems, mul, key, std::move(labels), family);
}

using Perm = std::array<std::uint8_t, 6>;

inline Perm perm_identity() { return {0, 1, 2, 3, 4, 5}; }

// (a * b)(i) = b[a[i]]: apply a first, then b.
inline Perm perm_mul(const Perm& a, const Perm& b) {
    Perm r{};
    for (int i = 0; i < 6; ++i) r[static_cast<std::size_t>(i)] = b[a[static_cast<std::size_t>(i)]];
    return r;
}

inline std::uint64_t perm_key(const Perm& p) {
    std::uint64_t k = 0;
    for (int i = 5; i >= 0; --i) k = (k << 3) | p[static_cast<std::size_t>(i)];
    return k;
}

inline std::string cycle_label(const Perm& p, int degree) {
    std::string out;
    std::array<bool, 6> done{};
    for (int i = 0; i < degree; ++i) {
        if (done[static_cast<std::size_t>(i)] || p[static_cast<std::size_t>(i)] == i) continue;
        out += "(";
        int j = i;
        do {
            done[static_cast<std::size_t>(j)] = true;
            out += std::to_string(j + 1);
            j = p[static_cast<std::size_t>(j)];
        } while (j != i);
        out += ")";
    }
    return out.empty() ? "()" : out;
}

inline GroupTable build_permutation_group(const std::vector<Perm>& gens, const std::string& letters,
                                          long long expected_order, const std::string& family, int degree) {
    auto [elems, raw] = bfs_closure(perm_identity(), gens, letters, perm_mul, perm_key, expected_order);
    std::vector<std::string> labels;
    labels.reserve(elems.size());
    for (const auto& e : elems) labels.push_back(cycle_label(e, degree));
    return tabulate(elems, perm_mul, perm_key, std::move(labels), family);
}

using Mat2 = std::array<std::uint16_t, 4>;

inline std::uint64_t mat2_key(const Mat2& m) {
    return (static_cast<std::uint64_t>(m[0]) << 48) | (static_cast<std::uint64_t>(m[1]) << 32) |
           (static_cast<std::uint64_t>(m[2]) << 16) | static_cast<std::uint64_t>(m[3]);
}

inline std::string mat2_label(const Mat2& m) {
    return "[[" + std::to_string(m[0]) + "," + std::to_string(m[1]) + "],[" +
           std::to_string(m[2]) + "," + std::to_string(m[3]) + "]]";
}

// All 2x2 matrices over GF(q) whose determinant satisfies `keep`, identity
// hoisted to index 0, remainder in entry-tuple lexicographic order.
template <class KeepFn>
GroupTable build_matrix_group_2x2(const FieldTables& ft, KeepFn&& keep, const std::string& family) {
    const long long q = ft.order;
    std::vector<Mat2> elems;
    const Mat2 id{1, 0, 0, 1};
    elems.push_back(id);
    for (long long a = 0; a < q; ++a)
        for (long long b = 0; b < q; ++b)
            for (long long c = 0; c < q; ++c)
                for (long long d = 0; d < q; ++d) {
                    long long det = ft.add(ft.mul(a, d), ft.neg_table[static_cast<std::size_t>(ft.mul(b, c))]);
                    if (!keep(det)) continue;
                    Mat2 m{static_cast<std::uint16_t>(a), static_cast<std::uint16_t>(b),
                           static_cast<std::uint16_t>(c), static_cast<std::uint16_t>(d)};
                    if (m == id) continue;
                    elems.push_back(m);
                }
    auto mul = [&ft](const Mat2& x, const Mat2& y) {
        return Mat2{ft.add(ft.mul(x[0], y[0]), ft.mul(x[1], y[2])),
                    ft.add(ft.mul(x[0], y[1]), ft.mul(x[1], y[3])),
                    ft.add(ft.mul(x[2], y[0]), ft.mul(x[3], y[2])),
                    ft.add(ft.mul(x[2], y[1]), ft.mul(x[3], y[3]))};
    };
    std::vector<std::string> labels;
    labels.reserve(elems.size());
    for (const auto& m : elems) labels.push_back(mat2_label(m));
    return tabulate(elems, mul, mat2_key, std::move(labels), family);
}

inline void require_prime(long long p, const std::string& what) {
    if (!is_prime(p)) throw std::invalid_argument(what + " must be prime, got " + std::to_string(p));
}

inline void require_order_cap(long long order, long long cap) {
    if (order > cap) throw CapExceededError("group order " + std::to_string(order) + " exceeds cap", cap);
}

} // namespace detail

inline GroupTable build_group(const FamilySpec& spec, long long max_order = kDefaultMaxOrder);

namespace detail {

inline GroupTable build_cyclic(long long n, long long cap) {
    if (n < 1) throw std::invalid_argument("cyclic group order must be >= 1");
    require_order_cap(n, cap);
    auto mul = [n](int a, int b) { return static_cast<int>((a + b) % n); };
    auto key = [](int e) { return static_cast<std::uint64_t>(e); };
    std::vector<int> gens;
    if (n > 1) gens.push_back(1);
    auto [elems, raw] = bfs_closure(0, gens, "g", mul, key, n);
    std::vector<std::string> labels;
    for (const auto& w : raw) labels.push_back(render_word(w));
    return tabulate(elems, mul, key, std::move(labels), "Z:" + std::to_string(n));
}

inline GroupTable build_dihedral(long long order, long long cap) {
    if (order < 6 || order % 2 != 0)
        throw std::invalid_argument("dihedral parameter is the group order 2m with m > 2, got " + std::to_string(order));
    require_order_cap(order, cap);
    const int m = static_cast<int>(order / 2);
    auto mul = [m](const Pair& x, const Pair& y) {
        int i = (x.first + (x.second ? m - y.first : y.first)) % m;
        return Pair{i, x.second ^ y.second};
    };
    return build_pair_model(mul, {{1, 0}, {0, 1}}, "ab", order, "D:" + std::to_string(order));
}

inline GroupTable build_quaternion(long long order, long long cap) {
    if (order < 8 || order % 4 != 0)
        throw std::invalid_argument("generalized quaternion parameter is the group order 4n with n >= 2, got " +
                                    std::to_string(order));
    require_order_cap(order, cap);
    const int n = static_cast<int>(order / 4);
    const int two_n = 2 * n;
    // elements a^i b^j with a^{2n} = 1, b^2 = a^n, b a b^{-1} = a^{-1}
    auto mul = [n, two_n](const Pair& x, const Pair& y) {
        int i = (x.first + (x.second ? two_n - y.first : y.first) + ((x.second & y.second) ? n : 0)) % two_n;
        return Pair{i, x.second ^ y.second};
    };
    return build_pair_model(mul, {{1, 0}, {0, 1}}, "ab", order, "Q:" + std::to_string(order));
}

inline GroupTable build_quasidihedral(long long order, long long cap) {
    if (order < 16 || (order & (order - 1)) != 0)
        throw std::invalid_argument("quasidihedral parameter must be a power of two >= 16, got " + std::to_string(order));
    require_order_cap(order, cap);
    const int m = static_cast<int>(order / 2);
    const int r = m / 2 - 1; // b a b^{-1} = a^r
    auto mul = [m, r](const Pair& x, const Pair& y) {
        int i = static_cast<int>((x.first + (x.second ? static_cast<long long>(r) * y.first : y.first)) % m);
        return Pair{i, x.second ^ y.second};
    };
    return build_pair_model(mul, {{1, 0}, {0, 1}}, "ab", order, "QD:" + std::to_string(order));
}

inline GroupTable build_m16(long long cap) {
    require_order_cap(16, cap);
    // a^8 = b^2 = 1, b a b = a^5
    auto mul = [](const Pair& x, const Pair& y) {
        int i = (x.first + (x.second ? 5 * y.first : y.first)) % 8;
        return Pair{i, x.second ^ y.second};
    };
    return build_pair_model(mul, {{1, 0}, {0, 1}}, "ab", 16, "M16");
}

inline GroupTable build_z4_rtimes_z4(long long cap) {
    require_order_cap(16, cap);
    // a^4 = b^4 = 1, b a b^{-1} = a^{-1}
    auto mul = [](const Pair& x, const Pair& y) {
        int i = (x.first + ((x.second & 1) ? 4 - y.first : y.first)) % 4;
        return Pair{i, (x.second + y.second) % 4};
    };
    return build_pair_model(mul, {{1, 0}, {0, 1}}, "ab", 16, "Z4sZ4");
}

inline GroupTable build_sg16_3(long long cap) {
    require_order_cap(16, cap);
    // (Z2 x Z2) : Z4 with the order-4 generator swapping the two factors;
    // realizes a^4 = b^4 = 1, ab = b^-1 a^-1, ab^-1 = b a^-1.
    auto mul = [](const Pair& x, const Pair& y) {
        int w = y.first;
        if (x.second & 1) w = ((w >> 1) | (w << 1)) & 3;
        return Pair{x.first ^ w, (x.second + y.second) % 4};
    };
    return build_pair_model(mul, {{1, 1}, {0, 1}}, "ab", 16, "SG16_3");
}

inline GroupTable build_f20(long long cap) {
    require_order_cap(20, cap);
    // Z5 : Z4 with b^{-1} a b = a^2, i.e. b a b^{-1} = a^3
    static const int pw3[4] = {1, 3, 4, 2};
    auto mul = [](const Pair& x, const Pair& y) {
        int i = (x.first + pw3[x.second] * y.first) % 5;
        return Pair{i, (x.second + y.second) % 4};
    };
    return build_pair_model(mul, {{1, 0}, {0, 1}}, "ab", 20, "F20");
}

inline GroupTable build_semidirect_pq(long long p, long long q, long long cap) {
    require_prime(p, "parameter p");
    require_prime(q, "parameter q");
    if ((q - 1) % p != 0)
        throw std::invalid_argument("requires p | q-1, got p=" + std::to_string(p) + ", q=" + std::to_string(q));
    require_order_cap(p * q, cap);
    // smallest t > 1 of multiplicative order p modulo q
    long long t = 0;
    for (long long cand = 2; cand < q; ++cand) {
        long long v = cand % q;
        int ord = 1;
        while (v != 1) { v = (v * cand) % q; ++ord; }
        if (ord == p) { t = cand; break; }
    }
    std::vector<long long> pw(static_cast<std::size_t>(p));
    pw[0] = 1;
    for (std::size_t j = 1; j < pw.size(); ++j) pw[j] = (pw[j - 1] * t) % q;
    auto mul = [&pw, p, q](const Pair& x, const Pair& y) {
        int i = static_cast<int>((x.first + pw[static_cast<std::size_t>(x.second)] * y.first) % q);
        return Pair{i, static_cast<int>((x.second + y.second) % p)};
    };
    return build_pair_model(mul, {{1, 0}, {0, 1}}, "ab", p * q,
                            "PQ:" + std::to_string(p) + ":" + std::to_string(q));
}

inline GroupTable build_alternating(long long d, long long cap) {
    if (d < 1 || d > 6) throw std::invalid_argument("alternating degree must be in 1..6, got " + std::to_string(d));
    long long order = 1;
    for (long long i = 2; i <= d; ++i) order *= i;
    if (d >= 2) order /= 2;
    require_order_cap(order, cap);
    std::vector<Perm> gens;
    std::string letters;
    for (long long k = 2; k < d; ++k) {
        Perm g = perm_identity(); // 3-cycle (0 1 k)
        g[0] = 1;
        g[1] = static_cast<std::uint8_t>(k);
        g[static_cast<std::size_t>(k)] = 0;
        gens.push_back(g);
        letters += static_cast<char>('a' + letters.size());
    }
    return build_permutation_group(gens, letters, order, "A:" + std::to_string(d), static_cast<int>(d));
}

inline GroupTable build_symmetric(long long d, long long cap) {
    if (d < 1 || d > 5) throw std::invalid_argument("symmetric degree must be in 1..5, got " + std::to_string(d));
    long long order = 1;
    for (long long i = 2; i <= d; ++i) order *= i;
    require_order_cap(order, cap);
    std::vector<Perm> gens;
    std::string letters;
    if (d >= 2) {
        Perm t = perm_identity();
        t[0] = 1;
        t[1] = 0;
        gens.push_back(t);
        letters += 'a';
    }
    if (d >= 3) {
        Perm c = perm_identity();
        for (long long i = 0; i < d; ++i) c[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>((i + 1) % d);
        gens.push_back(c);
        letters += 'b';
    }
    return build_permutation_group(gens, letters, order, "S:" + std::to_string(d), static_cast<int>(d));
}

inline FieldTables tables_for(long long q, const std::string& what) {
    auto pp = prime_power_decompose(q);
    if (!pp) throw std::invalid_argument(what + " requires a prime power, got " + std::to_string(q));
    return make_field_tables(construct_field(pp->first, pp->second));
}

inline GroupTable build_gl2(long long q, long long cap) {
    if (q <= 2) throw std::invalid_argument("GL(2,q) requires q > 2");
    auto pp = prime_power_decompose(q);
    if (!pp) throw std::invalid_argument("GL(2,q) requires a prime power, got " + std::to_string(q));
    require_order_cap((q * q - 1) * (q * q - q), cap);
    auto ft = tables_for(q, "GL(2,q)");
    return build_matrix_group_2x2(ft, [](long long det) { return det != 0; }, "GL2:" + std::to_string(q));
}

inline GroupTable build_sl2(long long q, long long cap) {
    auto pp = prime_power_decompose(q);
    if (!pp) throw std::invalid_argument("SL(2,q) requires a prime power, got " + std::to_string(q));
    require_order_cap(q * (q * q - 1), cap);
    auto ft = tables_for(q, "SL(2,q)");
    return build_matrix_group_2x2(ft, [](long long det) { return det == 1; }, "SL2:" + std::to_string(q));
}

inline GroupTable build_psl2(long long q, long long cap) {
    auto pp = prime_power_decompose(q);
    if (!pp || pp->first != 2 || pp->second < 2)
        throw std::invalid_argument("PSL(2,q) is supported for q = 2^k with k >= 2, got " + std::to_string(q));
    require_order_cap(q * (q * q - 1), cap);
    // in characteristic 2 the centre of SL(2,q) is trivial, so PSL = SL
    auto ft = tables_for(q, "PSL(2,q)");
    return build_matrix_group_2x2(ft, [](long long det) { return det == 1; }, "PSL2:" + std::to_string(q));
}

inline GroupTable build_hanaki_a(long long n, long long cap) {
    if (n < 1) throw std::invalid_argument("A(n,theta) requires n >= 1");
    auto order = checked_pow(4, static_cast<int>(n), cap);
    if (!order) throw CapExceededError("A(n,theta) order 4^" + std::to_string(n) + " exceeds cap", cap);
    auto ft = make_field_tables(construct_field(2, static_cast<int>(n)));
    const long long q = ft.order;
    using E = std::array<std::uint16_t, 2>; // (a, b)
    std::vector<E> elems;
    elems.reserve(static_cast<std::size_t>(*order));
    for (long long a = 0; a < q; ++a)
        for (long long b = 0; b < q; ++b)
            elems.push_back({static_cast<std::uint16_t>(a), static_cast<std::uint16_t>(b)});
    auto mul = [&ft](const E& x, const E& y) {
        // U(a,b) U(a',b') = U(a + a', b + b' + a' * theta(a))
        std::uint16_t a = ft.add(x[0], y[0]);
        std::uint16_t b = ft.add(ft.add(x[1], y[1]), ft.mul(y[0], ft.frob_table[x[0]]));
        return E{a, b};
    };
    auto key = [](const E& e) {
        return (static_cast<std::uint64_t>(e[0]) << 16) | static_cast<std::uint64_t>(e[1]);
    };
    std::vector<std::string> labels;
    labels.reserve(elems.size());
    for (const auto& e : elems) labels.push_back("U(" + std::to_string(e[0]) + "," + std::to_string(e[1]) + ")");
    return tabulate(elems, mul, key, std::move(labels), "HA:" + std::to_string(n));
}

inline GroupTable build_hanaki_b(long long p, long long n, long long cap) {
    require_prime(p, "A(n,p) characteristic");
    if (n < 1) throw std::invalid_argument("A(n,p) requires n >= 1");
    auto order = checked_pow(p, static_cast<int>(3 * n), cap);
    if (!order) throw CapExceededError("A(n,p) order p^{3n} exceeds cap", cap);
    auto ft = make_field_tables(construct_field(p, static_cast<int>(n)));
    const long long q = ft.order;
    using E = std::array<std::uint16_t, 3>; // (a, b, c)
    std::vector<E> elems;
    elems.reserve(static_cast<std::size_t>(*order));
    for (long long a = 0; a < q; ++a)
        for (long long b = 0; b < q; ++b)
            for (long long c = 0; c < q; ++c)
                elems.push_back({static_cast<std::uint16_t>(a), static_cast<std::uint16_t>(b),
                                 static_cast<std::uint16_t>(c)});
    auto mul = [&ft](const E& x, const E& y) {
        // V(a,b,c) V(a',b',c') = V(a + a', b + b' + c a', c + c')
        std::uint16_t a = ft.add(x[0], y[0]);
        std::uint16_t b = ft.add(ft.add(x[1], y[1]), ft.mul(x[2], y[0]));
        std::uint16_t c = ft.add(x[2], y[2]);
        return E{a, b, c};
    };
    auto key = [](const E& e) {
        return (static_cast<std::uint64_t>(e[0]) << 32) | (static_cast<std::uint64_t>(e[1]) << 16) |
               static_cast<std::uint64_t>(e[2]);
    };
    std::vector<std::string> labels;
    labels.reserve(elems.size());
    for (const auto& e : elems)
        labels.push_back("V(" + std::to_string(e[0]) + "," + std::to_string(e[1]) + "," + std::to_string(e[2]) + ")");
    return tabulate(elems, mul, key, std::move(labels),
                    "HB:" + std::to_string(p) + ":" + std::to_string(n));
}

inline GroupTable build_d8_central_z4(long long cap) {
    require_order_cap(16, cap);
    // (D8 x Z4) / <(a^2, z^2)>: identify the central involution of D8 with
    // the square of the Z4 generator.
    GroupTable prod = direct_product(build_dihedral(8, 32), build_cyclic(4, 4), 32);
    ElementSet z_d8 = center(build_dihedral(8, 32));
    int central_involution = -1;
    for (int x : z_d8.members())
        if (x != 0) central_involution = x;
    ElementSet n(prod.order);
    n.set(0);
    n.set(central_involution * 4 + 2);
    GroupTable q = quotient_by_central(prod, n);
    q.family = "D8cZ4";
    return q;
}

} // namespace detail

inline GroupTable build_group(const FamilySpec& spec, long long max_order) {
    using namespace detail;
    auto param = [&](std::size_t i) {
        if (i >= spec.params.size()) throw std::invalid_argument("missing family parameter");
        return spec.params[i];
    };
    switch (spec.family) {
        case Family::Cyclic: return build_cyclic(param(0), max_order);
        case Family::Dihedral: return build_dihedral(param(0), max_order);
        case Family::GenQuaternion: return build_quaternion(param(0), max_order);
        case Family::Quasidihedral: return build_quasidihedral(param(0), max_order);
        case Family::M16: return build_m16(max_order);
        case Family::Z4rtimesZ4: return build_z4_rtimes_z4(max_order);
        case Family::D8centralZ4: return build_d8_central_z4(max_order);
        case Family::SG16_3: return build_sg16_3(max_order);
        case Family::Alternating: return build_alternating(param(0), max_order);
        case Family::Symmetric: return build_symmetric(param(0), max_order);
        case Family::SL2: return build_sl2(param(0), max_order);
        case Family::GL2: return build_gl2(param(0), max_order);
        case Family::PSL2: return build_psl2(param(0), max_order);
        case Family::F20: return build_f20(max_order);
        case Family::HanakiA: return build_hanaki_a(param(0), max_order);
        case Family::HanakiB: return build_hanaki_b(param(0), param(1), max_order);
        case Family::SemidirectPQ: return build_semidirect_pq(param(0), param(1), max_order);
        case Family::Product: {
            if (spec.factors.size() != 2) throw std::invalid_argument("product requires exactly two factors");
            GroupTable g = build_group(spec.factors[0], max_order);
            GroupTable h = build_group(spec.factors[1], max_order);
            return direct_product(g, h, max_order);
        }
    }
    throw std::invalid_argument("unknown family");
}

} // namespace commspec
