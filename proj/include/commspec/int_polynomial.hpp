#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <initializer_list>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace commspec {

using BigInt = boost::multiprecision::cpp_int;

// Univariate polynomial with arbitrary-precision integer coefficients,
// stored constant-first. Trailing zero coefficients are normalized away;
// the zero polynomial is stored as the single coefficient 0.
class IntPolynomial {
public:
    IntPolynomial() : coeffs_{BigInt(0)} {}

    explicit IntPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {
        if (coeffs_.empty()) coeffs_.push_back(0);
        normalize();
    }

    IntPolynomial(std::initializer_list<long long> coeffs) {
        for (long long c : coeffs) coeffs_.emplace_back(c);
        if (coeffs_.empty()) coeffs_.push_back(0);
        normalize();
    }

    static IntPolynomial one() { return IntPolynomial({1}); }

    // x^k
    static IntPolynomial monomial(int k) {
        std::vector<BigInt> c(static_cast<std::size_t>(k) + 1, 0);
        c.back() = 1;
        return IntPolynomial(std::move(c));
    }

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.size() == 1 && coeffs_[0] == 0; }
    bool is_one() const { return coeffs_.size() == 1 && coeffs_[0] == 1; }
    bool is_monic() const { return coeffs_.back() == 1; }

    const BigInt& operator[](int k) const { return coeffs_.at(static_cast<std::size_t>(k)); }
    const std::vector<BigInt>& coeffs() const { return coeffs_; }

    bool operator==(const IntPolynomial& other) const { return coeffs_ == other.coeffs_; }
    bool operator!=(const IntPolynomial& other) const { return !(*this == other); }

    IntPolynomial operator*(const IntPolynomial& other) const {
        if (is_zero() || other.is_zero()) return IntPolynomial();
        std::vector<BigInt> out(coeffs_.size() + other.coeffs_.size() - 1, 0);
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            if (coeffs_[i] == 0) continue;
            for (std::size_t j = 0; j < other.coeffs_.size(); ++j)
                out[i + j] += coeffs_[i] * other.coeffs_[j];
        }
        return IntPolynomial(std::move(out));
    }

    IntPolynomial pow(int e) const {
        IntPolynomial r = one();
        for (int i = 0; i < e; ++i) r = r * (*this);
        return r;
    }

    BigInt evaluate(const BigInt& x) const {
        BigInt acc = 0;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    // Synthetic division by (x - root). Returns the quotient when the
    // remainder is exactly zero, nullopt otherwise.
    std::optional<IntPolynomial> divide_by_root(const BigInt& root) const {
        if (degree() < 1) return std::nullopt;
        std::vector<BigInt> q(coeffs_.size() - 1);
        BigInt carry = coeffs_.back();
        for (int k = degree() - 1; k >= 0; --k) {
            q[static_cast<std::size_t>(k)] = carry;
            carry = coeffs_[static_cast<std::size_t>(k)] + root * carry;
        }
        if (carry != 0) return std::nullopt;
        return IntPolynomial(std::move(q));
    }

    std::string to_string() const {
        std::ostringstream os;
        bool first = true;
        for (int k = degree(); k >= 0; --k) {
            const BigInt& c = coeffs_[static_cast<std::size_t>(k)];
            if (c == 0 && degree() > 0) continue;
            BigInt a = c < 0 ? BigInt(-c) : c;
            if (first) {
                if (c < 0) os << "-";
                first = false;
            } else {
                os << (c < 0 ? " - " : " + ");
            }
            if (k == 0 || a != 1) os << a.str();
            if (k > 0) {
                os << "x";
                if (k > 1) os << "^" << k;
            }
        }
        if (first) os << "0";
        return os.str();
    }

private:
    void normalize() {
        while (coeffs_.size() > 1 && coeffs_.back() == 0) coeffs_.pop_back();
    }

    std::vector<BigInt> coeffs_;
};

} // namespace commspec
