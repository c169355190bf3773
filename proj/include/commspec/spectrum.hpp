#pragma once

#include <algorithm>
#include <cstdlib>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "commspec/graph.hpp"
#include "commspec/int_polynomial.hpp"

namespace commspec {

struct EigenEntry {
    long long value = 0;
    long long multiplicity = 0;

    bool operator==(const EigenEntry& other) const {
        return value == other.value && multiplicity == other.multiplicity;
    }
};

// Integer eigenvalues with multiplicities, sorted by strictly decreasing
// value, plus the monic residual factor with no integer roots (constant 1
// when the spectrum is fully integral).
struct Spectrum {
    std::vector<EigenEntry> eigenvalues;
    IntPolynomial residual = IntPolynomial::one();
    bool is_integral = true;

    long long integer_multiplicity_total() const {
        long long t = 0;
        for (const auto& e : eigenvalues) t += e.multiplicity;
        return t;
    }

    // integer multiplicities plus the residual degree
    long long dimension() const { return integer_multiplicity_total() + (is_integral ? 0 : residual.degree()); }

    bool operator==(const Spectrum& other) const {
        return eigenvalues == other.eigenvalues && residual == other.residual && is_integral == other.is_integral;
    }
    bool operator!=(const Spectrum& other) const { return !(*this == other); }

    std::string to_string() const {
        std::ostringstream os;
        os << "{";
        bool first = true;
        for (const auto& e : eigenvalues) {
            if (!first) os << ", ";
            first = false;
            if (e.value < 0) os << "(" << e.value << ")";
            else os << e.value;
            os << "^" << e.multiplicity;
        }
        os << "}";
        if (!is_integral) os << " * (" << residual.to_string() << ")";
        return os.str();
    }
};

// Merge equal eigenvalues, drop zero multiplicities, order by decreasing value.
inline Spectrum make_spectrum(const std::vector<std::pair<long long, long long>>& entries,
                              IntPolynomial residual = IntPolynomial::one()) {
    std::map<long long, long long> merged;
    for (const auto& [value, mult] : entries) {
        if (mult == 0) continue;
        if (mult < 0) throw std::logic_error("negative eigenvalue multiplicity");
        merged[value] += mult;
    }
    Spectrum s;
    for (auto it = merged.rbegin(); it != merged.rend(); ++it)
        s.eigenvalues.push_back({it->first, it->second});
    s.residual = std::move(residual);
    s.is_integral = s.residual.is_one();
    return s;
}

// Peel integer roots of a monic polynomial by exact synthetic division.
// Candidate roots are 0 and the divisors of the constant term; divisor
// magnitudes are scanned up to the polynomial degree (which covers every
// adjacency characteristic polynomial, whose roots are bounded by the
// maximum vertex degree) and exhaustively when the constant term is small
// enough to factor outright.
inline Spectrum integer_spectrum(const IntPolynomial& poly) {
    if (!poly.is_monic()) throw std::invalid_argument("integer_spectrum requires a monic polynomial");
    IntPolynomial work = poly;
    std::vector<std::pair<long long, long long>> found;

    // multiplicity of the root 0 = number of trailing zero constants
    long long zero_mult = 0;
    while (work.degree() >= 1 && work[0] == 0) {
        std::vector<BigInt> shifted(work.coeffs().begin() + 1, work.coeffs().end());
        work = IntPolynomial(std::move(shifted));
        ++zero_mult;
    }
    if (zero_mult > 0) found.emplace_back(0, zero_mult);

    std::vector<long long> magnitudes;
    long long scan_limit = std::max(poly.degree() - 1, 1);
    BigInt c0 = work[0] < 0 ? BigInt(-work[0]) : work[0];
    if (c0 != 0) {
        for (long long d = 1; d <= scan_limit; ++d)
            if (c0 % d == 0) magnitudes.push_back(d);
        if (c0 <= 1000000000000LL) {
            long long v = static_cast<long long>(c0);
            for (long long d = 1; d * d <= v; ++d) {
                if (v % d != 0) continue;
                if (d > scan_limit) magnitudes.push_back(d);
                if (v / d > scan_limit && v / d != d) magnitudes.push_back(v / d);
            }
            std::sort(magnitudes.begin(), magnitudes.end());
        }
    }

    for (long long mag : magnitudes) {
        for (long long root : {mag, -mag}) {
            long long mult = 0;
            while (work.degree() >= 1) {
                if (work[0] % BigInt(root) != 0) break;
                auto q = work.divide_by_root(root);
                if (!q) break;
                work = std::move(*q);
                ++mult;
            }
            if (mult > 0) found.emplace_back(root, mult);
        }
    }
    return make_spectrum(found, std::move(work));
}

inline Spectrum clique_union_spectrum(const std::vector<int>& clique_sizes) {
    if (clique_sizes.empty()) throw std::invalid_argument("empty clique decomposition");
    std::vector<std::pair<long long, long long>> entries;
    long long neg_ones = 0;
    for (int m : clique_sizes) {
        if (m < 1) throw std::invalid_argument("clique sizes must be positive");
        entries.emplace_back(m - 1, 1);
        neg_ones += m - 1;
    }
    entries.emplace_back(-1, neg_ones);
    return make_spectrum(entries);
}

inline Spectrum clique_union_spectrum(const CliqueDecomposition& d) {
    return clique_union_spectrum(d.clique_sizes);
}

// prod (x - lambda)^mult * residual; reproduces the original characteristic
// polynomial of any spectrum produced by integer_spectrum.
inline IntPolynomial reassemble_char_poly(const Spectrum& s) {
    IntPolynomial acc = s.residual;
    for (const auto& e : s.eigenvalues) {
        IntPolynomial lin({-e.value, 1});
        for (long long i = 0; i < e.multiplicity; ++i) acc = acc * lin;
    }
    return acc;
}

} // namespace commspec
