#pragma once

#include <utility>

#include "mahonian/window.hpp"

namespace mahonian {

/*
 * Statistics of signed permutations.
 *
 * Inversions always compare entries in the natural integer order.  Descents
 * and the major index take an explicit order convention: Natural is the
 * integer order, BOrder is the total order
 *
 *     -1 < -2 < ... < -n < 0 < 1 < 2 < ... < n
 *
 * realized by the strictly monotone key  k(v) = v for v > 0,
 * k(v) = -(n+1) - v for v < 0.  On windows without negative entries the two
 * conventions agree.
 *
 * The flag-major index couples BOrder descents with the number of negative
 * entries:  fmaj(w) = 2 maj(w) + N1(w).  Dmaj extends it to D-windows by
 * taking the absolute value of the last entry first, which matches fmaj on
 * Delta-windows and makes Dmaj constant on phi-fibers.
 */

enum class OrderConvention { Natural, BOrder };

// One-dimensional characters used to sign generating-function sums:
//   Trivial     : 1
//   SignLength  : (-1)^length, with the length function of the family
//                 (Delta-windows use the type-B length)
//   NegParity   : (-1)^N1
//   AbsSign     : (-1)^inv(|w|), the sign of the underlying permutation
enum class Character { Trivial, SignLength, NegParity, AbsSign };

enum class StatisticKind { Inv, Maj, Fmaj, Dmaj, LenS, LenB, LenD };

inline int border_key(int v, int n) noexcept { return v > 0 ? v : -(n + 1) - v; }

inline int inv(std::span<const int> w) noexcept {
    const int n = static_cast<int>(w.size());
    int c = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) c += w[i] > w[j];
    return c;
}

// inversions of the absolute-value word (|w_1|, ..., |w_n|)
inline int abs_inv(std::span<const int> w) noexcept {
    const int n = static_cast<int>(w.size());
    int c = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) c += std::abs(w[i]) > std::abs(w[j]);
    return c;
}

inline std::vector<int> descent_set(std::span<const int> w, OrderConvention ord) {
    const int n = static_cast<int>(w.size());
    std::vector<int> des;
    for (int i = 0; i + 1 < n; ++i) {
        const bool drop = ord == OrderConvention::Natural
                              ? w[i] > w[i + 1]
                              : border_key(w[i], n) > border_key(w[i + 1], n);
        if (drop) des.push_back(i + 1);
    }
    return des;
}

inline int maj(std::span<const int> w, OrderConvention ord) noexcept {
    const int n = static_cast<int>(w.size());
    int m = 0;
    if (ord == OrderConvention::Natural) {
        for (int i = 0; i + 1 < n; ++i)
            if (w[i] > w[i + 1]) m += i + 1;
    } else {
        for (int i = 0; i + 1 < n; ++i)
            if (border_key(w[i], n) > border_key(w[i + 1], n)) m += i + 1;
    }
    return m;
}

// N1 = #negative entries, N2 = #{i<j : w_i + w_j < 0}, neg = the positions
struct NegStats {
    std::vector<int> neg;
    int n1 = 0;
    int n2 = 0;
};

namespace detail {

inline std::pair<int, int> inv_and_n2(std::span<const int> w) noexcept {
    const int n = static_cast<int>(w.size());
    int iv = 0, n2 = 0;
    for (int j = 1; j < n; ++j) {
        const int wj = w[j];
        for (int i = 0; i < j; ++i) {
            iv += w[i] > wj;
            n2 += w[i] + wj < 0;
        }
    }
    return {iv, n2};
}

}  // namespace detail

inline NegStats neg_stats(std::span<const int> w) {
    NegStats s;
    const int n = static_cast<int>(w.size());
    for (int i = 0; i < n; ++i)
        if (w[i] < 0) s.neg.push_back(i + 1);
    s.n1 = static_cast<int>(s.neg.size());
    s.n2 = detail::inv_and_n2(w).second;
    return s;
}

// Coxeter length with respect to the standard generators of each group.
//   S : inv           B : inv + N1 + N2           D : inv + N2
// Delta is not a group and has no length function.
inline int length(std::span<const int> w, GroupFamily fam) {
    switch (fam) {
        case GroupFamily::S:
            if (!is_member(w, GroupFamily::S))
                throw std::domain_error("type-S length requires an unsigned window");
            return inv(w);
        case GroupFamily::B: {
            const auto [iv, n2] = detail::inv_and_n2(w);
            return iv + negative_count(w) + n2;
        }
        case GroupFamily::D: {
            if (negative_count(w) % 2 != 0)
                throw std::domain_error("type-D length requires an even number of negatives");
            const auto [iv, n2] = detail::inv_and_n2(w);
            return iv + n2;
        }
        case GroupFamily::Delta:
            throw std::invalid_argument("Delta has no length function");
    }
    return 0;
}

inline int fmaj(std::span<const int> w) noexcept {
    const int n = static_cast<int>(w.size());
    int m = 0, negs = 0;
    for (int i = 0; i + 1 < n; ++i)
        if (border_key(w[i], n) > border_key(w[i + 1], n)) m += i + 1;
    for (int i = 0; i < n; ++i) negs += w[i] < 0;
    return 2 * m + negs;
}

// fmaj of the window with the last entry replaced by its absolute value;
// defined on D-windows and Delta-windows (on the latter it equals fmaj).
inline int dmaj(std::span<const int> w) {
    const int n = static_cast<int>(w.size());
    if (n == 0) return 0;
    if (w[n - 1] < 0 && negative_count(w) % 2 != 0)
        throw std::domain_error("dmaj requires a D- or Delta-window");
    auto val = [&](int i) { return i == n - 1 ? std::abs(w[i]) : w[i]; };
    int m = 0, negs = 0;
    int prev = border_key(val(0), n);
    for (int i = 1; i < n; ++i) {
        const int cur = border_key(val(i), n);
        if (prev > cur) m += i;
        prev = cur;
    }
    for (int i = 0; i < n; ++i) negs += val(i) < 0;
    return 2 * m + negs;
}

inline int character_value(std::span<const int> w, Character chi, GroupFamily fam) {
    switch (chi) {
        case Character::Trivial:
            return 1;
        case Character::SignLength: {
            const GroupFamily lf = fam == GroupFamily::Delta ? GroupFamily::B : fam;
            return length(w, lf) % 2 == 0 ? 1 : -1;
        }
        case Character::NegParity:
            return negative_count(w) % 2 == 0 ? 1 : -1;
        case Character::AbsSign:
            return abs_inv(w) % 2 == 0 ? 1 : -1;
    }
    return 1;
}

// Window-typed conveniences
inline int inv(const Window& w) noexcept { return inv(w.entries()); }
inline int abs_inv(const Window& w) noexcept { return abs_inv(w.entries()); }
inline std::vector<int> descent_set(const Window& w, OrderConvention ord) {
    return descent_set(w.entries(), ord);
}
inline int maj(const Window& w, OrderConvention ord) noexcept { return maj(w.entries(), ord); }
inline NegStats neg_stats(const Window& w) { return neg_stats(w.entries()); }
inline int length(const Window& w, GroupFamily fam) { return length(w.entries(), fam); }
inline int fmaj(const Window& w) noexcept { return fmaj(w.entries()); }
inline int dmaj(const Window& w) { return dmaj(w.entries()); }
inline int character_value(const Window& w, Character chi, GroupFamily fam) {
    return character_value(w.entries(), chi, fam);
}

}  // namespace mahonian
