#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <vector>

namespace mahonian {

using BigInt = boost::multiprecision::cpp_int;

/*
 * Dense polynomial in one variable q with exact integer coefficients.
 * Coefficients are stored by exponent with no trailing zeros, so equality
 * of value and equality of representation coincide.  All arithmetic is
 * exact; there is no tolerance anywhere.
 */
class QPoly {
public:
    QPoly() = default;  // the zero polynomial

    explicit QPoly(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { normalize(); }

    static QPoly one() { return monomial(1, 0); }

    static QPoly monomial(BigInt coeff, int exponent) {
        if (exponent < 0) throw std::invalid_argument("negative exponent");
        if (coeff == 0) return {};
        std::vector<BigInt> c(static_cast<std::size_t>(exponent) + 1);
        c.back() = std::move(coeff);
        return QPoly(std::move(c));
    }

    bool is_zero() const noexcept { return c_.empty(); }

    // -1 for the zero polynomial
    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }

    BigInt coeff(int exponent) const {
        if (exponent < 0 || exponent >= static_cast<int>(c_.size())) return 0;
        return c_[static_cast<std::size_t>(exponent)];
    }

    const std::vector<BigInt>& coeffs() const noexcept { return c_; }

    BigInt eval_one() const {
        BigInt s = 0;
        for (const auto& c : c_) s += c;
        return s;
    }

    QPoly& operator+=(const QPoly& o) {
        if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        normalize();
        return *this;
    }

    QPoly& operator-=(const QPoly& o) {
        if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
        normalize();
        return *this;
    }

    friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
    friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }

    friend QPoly operator-(const QPoly& a) {
        std::vector<BigInt> c(a.c_);
        for (auto& x : c) x = -x;
        return QPoly(std::move(c));
    }

    friend QPoly operator*(const QPoly& a, const QPoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<BigInt> c(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                if (b.c_[j] != 0) c[i + j] += a.c_[i] * b.c_[j];
        }
        return QPoly(std::move(c));
    }

    QPoly& operator*=(const QPoly& o) { return *this = *this * o; }

    // q -> q^k
    QPoly dilated(int k) const {
        if (k < 1) throw std::invalid_argument("dilation factor must be positive");
        if (is_zero() || k == 1) return *this;
        std::vector<BigInt> c(static_cast<std::size_t>(degree()) * k + 1);
        for (std::size_t i = 0; i < c_.size(); ++i)
            c[i * static_cast<std::size_t>(k)] = c_[i];
        return QPoly(std::move(c));
    }

    bool operator==(const QPoly&) const = default;

private:
    void normalize() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    std::vector<BigInt> c_;
};

// [n]_q = 1 + q + ... + q^{n-1}, or its twist [n]_{-q} when sign = -1
inline QPoly q_int(int n, int sign = +1) {
    if (n < 0) throw std::invalid_argument("q_int of negative n");
    if (sign != 1 && sign != -1) throw std::invalid_argument("sign must be +1 or -1");
    std::vector<BigInt> c(static_cast<std::size_t>(n));
    for (int e = 0; e < n; ++e)
        c[static_cast<std::size_t>(e)] = (sign == -1 && e % 2 == 1) ? -1 : 1;
    return QPoly(std::move(c));
}

// p(q) -> p(-q): negate the odd-exponent coefficients
inline QPoly substitute_neg_q(const QPoly& p) {
    std::vector<BigInt> c(p.coeffs());
    for (std::size_t e = 1; e < c.size(); e += 2) c[e] = -c[e];
    return QPoly(std::move(c));
}

// [n]_q - [n]_{-q} = 2(q + q^3 + q^5 + ...), twice the odd-exponent part of
// [n]_q; the top term is 2q^{n-1} for even n and 2q^{n-2} for odd n >= 3.
inline QPoly q_int_difference(int n) { return q_int(n, +1) - q_int(n, -1); }

}  // namespace mahonian
