#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "commspec/errors.hpp"

namespace commspec {

inline constexpr long long kDefaultMaxOrder = 4096;

// A finite group as an explicit Cayley table. Element 0 is always the
// identity. Tables are immutable after construction and safe to share
// across threads.
struct GroupTable {
    int order = 0;
    std::vector<std::uint16_t> mul; // order x order, row-major
    int identity = 0;
    std::vector<std::uint16_t> inv;
    std::vector<std::string> labels;
    std::string family; // canonical group-spec string this table was built from

    int at(int a, int b) const {
        return mul[static_cast<std::size_t>(a) * static_cast<std::size_t>(order) + static_cast<std::size_t>(b)];
    }

    bool commutes(int a, int b) const { return at(a, b) == at(b, a); }
};

// Subset of the elements of a fixed parent table, bit-packed.
class ElementSet {
public:
    ElementSet() = default;

    explicit ElementSet(int universe)
        : universe_(universe), bits_(static_cast<std::size_t>((universe + 63) / 64), 0) {}

    int universe() const { return universe_; }
    int size() const { return size_; }

    bool test(int i) const {
        return (bits_[static_cast<std::size_t>(i >> 6)] >> (i & 63)) & 1;
    }

    void set(int i) {
        auto& w = bits_[static_cast<std::size_t>(i >> 6)];
        std::uint64_t m = 1ULL << (i & 63);
        if (!(w & m)) {
            w |= m;
            ++size_;
        }
    }

    std::vector<int> members() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(size_));
        for (int i = 0; i < universe_; ++i)
            if (test(i)) out.push_back(i);
        return out;
    }

    ElementSet intersect(const ElementSet& other) const {
        if (universe_ != other.universe_) throw std::invalid_argument("element sets over different groups");
        ElementSet r(universe_);
        for (std::size_t w = 0; w < bits_.size(); ++w) {
            r.bits_[w] = bits_[w] & other.bits_[w];
            r.size_ += __builtin_popcountll(r.bits_[w]);
        }
        return r;
    }

    bool contains(const ElementSet& other) const {
        for (std::size_t w = 0; w < bits_.size(); ++w)
            if ((other.bits_[w] & ~bits_[w]) != 0) return false;
        return true;
    }

    bool operator==(const ElementSet& other) const {
        return universe_ == other.universe_ && bits_ == other.bits_;
    }
    bool operator!=(const ElementSet& other) const { return !(*this == other); }

    const std::vector<std::uint64_t>& words() const { return bits_; }

private:
    int universe_ = 0;
    std::vector<std::uint64_t> bits_;
    int size_ = 0;
};

inline ElementSet full_set(int universe) {
    ElementSet s(universe);
    for (int i = 0; i < universe; ++i) s.set(i);
    return s;
}

// Exact centre {x : xy = yx for all y}, by full scan.
inline ElementSet center(const GroupTable& g) {
    ElementSet z(g.order);
    for (int x = 0; x < g.order; ++x) {
        bool central = true;
        for (int y = 0; y < g.order; ++y) {
            if (g.at(x, y) != g.at(y, x)) { central = false; break; }
        }
        if (central) z.set(x);
    }
    return z;
}

inline bool is_abelian(const GroupTable& g) { return center(g).size() == g.order; }

// Exact centralizer {y : xy = yx}.
inline ElementSet centralizer(const GroupTable& g, int x) {
    if (x < 0 || x >= g.order) throw std::invalid_argument("element index out of range");
    ElementSet c(g.order);
    for (int y = 0; y < g.order; ++y)
        if (g.commutes(x, y)) c.set(y);
    return c;
}

// The distinct centralizers of non-central elements, ordered by least
// non-central witness index.
struct CentralizerFamily {
    int parent_order = 0;
    std::vector<ElementSet> members;
    std::vector<int> witnesses; // least non-central element with that centralizer

    std::vector<int> sizes() const {
        std::vector<int> s;
        s.reserve(members.size());
        for (const auto& m : members) s.push_back(m.size());
        std::sort(s.begin(), s.end());
        return s;
    }
};

inline CentralizerFamily centralizer_family(const GroupTable& g) {
    ElementSet z = center(g);
    if (z.size() == g.order) throw std::invalid_argument("centralizer family requires a non-abelian group");
    CentralizerFamily fam;
    fam.parent_order = g.order;
    std::map<std::vector<std::uint64_t>, int> seen;
    for (int x = 0; x < g.order; ++x) {
        if (z.test(x)) continue;
        ElementSet c = centralizer(g, x);
        if (seen.emplace(c.words(), static_cast<int>(fam.members.size())).second) {
            fam.members.push_back(std::move(c));
            fam.witnesses.push_back(x);
        }
    }
    return fam;
}

// True iff every centralizer of a non-central element is abelian.
inline bool is_ac_group(const GroupTable& g) {
    auto fam = centralizer_family(g); // rejects abelian input
    for (const auto& m : fam.members) {
        auto xs = m.members();
        for (std::size_t i = 0; i < xs.size(); ++i)
            for (std::size_t j = i + 1; j < xs.size(); ++j)
                if (!g.commutes(xs[i], xs[j])) return false;
    }
    return true;
}

// Throws std::logic_error on the first violated group axiom. Associativity
// is exhaustive up to order 256 and sampled on 10^6 seeded triples above.
inline void verify_axioms(const GroupTable& g) {
    const int n = g.order;
    if (n < 1) throw std::logic_error("empty group table");
    if (g.mul.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n))
        throw std::logic_error("multiplication table has wrong size");
    if (g.inv.size() != static_cast<std::size_t>(n) || g.labels.size() != static_cast<std::size_t>(n))
        throw std::logic_error("inverse or label list has wrong size");
    if (g.identity != 0) throw std::logic_error("identity must be element 0");

    std::vector<char> seen(static_cast<std::size_t>(n));
    for (int r = 0; r < n; ++r) {
        std::fill(seen.begin(), seen.end(), 0);
        for (int c = 0; c < n; ++c) {
            int v = g.at(r, c);
            if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)])
                throw std::logic_error("row " + std::to_string(r) + " is not a permutation");
            seen[static_cast<std::size_t>(v)] = 1;
        }
        std::fill(seen.begin(), seen.end(), 0);
        for (int c = 0; c < n; ++c) {
            int v = g.at(c, r);
            if (seen[static_cast<std::size_t>(v)])
                throw std::logic_error("column " + std::to_string(r) + " is not a permutation");
            seen[static_cast<std::size_t>(v)] = 1;
        }
    }
    for (int x = 0; x < n; ++x) {
        if (g.at(0, x) != x || g.at(x, 0) != x)
            throw std::logic_error("element 0 is not a two-sided identity");
        if (g.at(x, g.inv[static_cast<std::size_t>(x)]) != 0 || g.at(g.inv[static_cast<std::size_t>(x)], x) != 0)
            throw std::logic_error("wrong inverse for element " + std::to_string(x));
    }
    auto assoc = [&](int a, int b, int c) {
        if (g.at(g.at(a, b), c) != g.at(a, g.at(b, c)))
            throw std::logic_error("associativity fails at (" + std::to_string(a) + "," +
                                   std::to_string(b) + "," + std::to_string(c) + ")");
    };
    if (n <= 256) {
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                for (int c = 0; c < n; ++c) assoc(a, b, c);
    } else {
        std::mt19937_64 rng(0x9e3779b97f4a7c15ULL);
        std::uniform_int_distribution<int> pick(0, n - 1);
        for (int t = 0; t < 1000000; ++t) assoc(pick(rng), pick(rng), pick(rng));
    }
}

// Direct product; element (x, y) sits at index x*|h| + y.
inline GroupTable direct_product(const GroupTable& g, const GroupTable& h,
                                 long long max_order = kDefaultMaxOrder) {
    long long order = static_cast<long long>(g.order) * h.order;
    if (order > max_order)
        throw CapExceededError("product order " + std::to_string(order) + " exceeds cap", max_order);
    GroupTable p;
    p.order = static_cast<int>(order);
    p.family = g.family + " x " + h.family;
    p.mul.resize(static_cast<std::size_t>(order) * static_cast<std::size_t>(order));
    p.inv.resize(static_cast<std::size_t>(order));
    p.labels.resize(static_cast<std::size_t>(order));
    for (int x1 = 0; x1 < g.order; ++x1)
        for (int y1 = 0; y1 < h.order; ++y1) {
            int a = x1 * h.order + y1;
            p.inv[static_cast<std::size_t>(a)] = static_cast<std::uint16_t>(
                g.inv[static_cast<std::size_t>(x1)] * h.order + h.inv[static_cast<std::size_t>(y1)]);
            p.labels[static_cast<std::size_t>(a)] =
                "(" + g.labels[static_cast<std::size_t>(x1)] + "," + h.labels[static_cast<std::size_t>(y1)] + ")";
            for (int x2 = 0; x2 < g.order; ++x2)
                for (int y2 = 0; y2 < h.order; ++y2) {
                    int b = x2 * h.order + y2;
                    p.mul[static_cast<std::size_t>(a) * static_cast<std::size_t>(order) + static_cast<std::size_t>(b)] =
                        static_cast<std::uint16_t>(g.at(x1, x2) * h.order + h.at(y1, y2));
                }
        }
    return p;
}

// Quotient by a central subgroup; cosets are ordered by least member index,
// so the identity coset is element 0.
inline GroupTable quotient_by_central(const GroupTable& g, const ElementSet& n) {
    if (n.universe() != g.order) throw std::invalid_argument("subgroup set over a different group");
    if (!n.test(0)) throw std::invalid_argument("subgroup must contain the identity");
    auto ns = n.members();
    ElementSet z = center(g);
    for (int a : ns) {
        if (!z.test(a)) throw std::invalid_argument("subgroup is not central");
        for (int b : ns)
            if (!n.test(g.at(a, b))) throw std::invalid_argument("set is not closed under multiplication");
    }

    std::vector<int> coset_of(static_cast<std::size_t>(g.order), -1);
    std::vector<int> reps;
    for (int x = 0; x < g.order; ++x) {
        if (coset_of[static_cast<std::size_t>(x)] >= 0) continue;
        int id = static_cast<int>(reps.size());
        reps.push_back(x);
        for (int m : ns) coset_of[static_cast<std::size_t>(g.at(x, m))] = id;
    }

    GroupTable q;
    q.order = static_cast<int>(reps.size());
    q.family = "(" + g.family + ")/N" + std::to_string(n.size());
    q.mul.resize(static_cast<std::size_t>(q.order) * static_cast<std::size_t>(q.order));
    q.inv.resize(static_cast<std::size_t>(q.order));
    q.labels.resize(static_cast<std::size_t>(q.order));
    for (int i = 0; i < q.order; ++i) {
        q.labels[static_cast<std::size_t>(i)] = "[" + g.labels[static_cast<std::size_t>(reps[static_cast<std::size_t>(i)])] + "]";
        q.inv[static_cast<std::size_t>(i)] =
            static_cast<std::uint16_t>(coset_of[static_cast<std::size_t>(g.inv[static_cast<std::size_t>(reps[static_cast<std::size_t>(i)])])]);
        for (int j = 0; j < q.order; ++j)
            q.mul[static_cast<std::size_t>(i) * static_cast<std::size_t>(q.order) + static_cast<std::size_t>(j)] =
                static_cast<std::uint16_t>(coset_of[static_cast<std::size_t>(g.at(reps[static_cast<std::size_t>(i)], reps[static_cast<std::size_t>(j)]))]);
    }
    return q;
}

} // namespace commspec
