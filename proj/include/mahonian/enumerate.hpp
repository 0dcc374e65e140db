#pragma once

#include <cstdint>

#include "mahonian/window.hpp"

namespace mahonian {

// Enumeration is limited to ranks that fit the absolute-value bitmask; the
// practical ceiling is far lower (|B_9| is already ~1.9e8).
inline constexpr int kMaxEnumerationRank = 31;

inline std::uint64_t factorial(int n) {
    std::uint64_t f = 1;
    for (int k = 2; k <= n; ++k) f *= static_cast<std::uint64_t>(k);
    return f;
}

inline std::uint64_t family_cardinality(GroupFamily fam, int n) {
    if (n < 0) throw std::invalid_argument("negative rank");
    if (n == 0) return 1;
    switch (fam) {
        case GroupFamily::S: return factorial(n);
        case GroupFamily::B: return factorial(n) << n;
        case GroupFamily::D:
        case GroupFamily::Delta: return factorial(n) << (n - 1);
    }
    return 0;
}

namespace detail {

// Depth-first completion of buf[depth..n).  Candidates are tried in the
// natural integer order (-n, ..., -1, 1, ..., n), so windows stream in
// lexicographic order.  The family constraint binds only at the last
// position: Delta forbids a negative there, D forces the sign that leaves
// an even negative count.
template <typename Fn>
void complete_window(GroupFamily fam, int n, int* buf, int depth, std::uint32_t used, int negs,
                     Fn& fn) {
    if (depth == n) {
        fn(std::span<const int>(buf, static_cast<std::size_t>(n)));
        return;
    }
    const bool last = depth == n - 1;
    if (fam != GroupFamily::S && !(last && fam == GroupFamily::Delta) &&
        !(last && fam == GroupFamily::D && negs % 2 == 0)) {
        for (int a = n; a >= 1; --a) {
            if (used >> a & 1u) continue;
            buf[depth] = -a;
            complete_window(fam, n, buf, depth + 1, used | (1u << a), negs + 1, fn);
        }
    }
    if (!(last && fam == GroupFamily::D && negs % 2 == 1)) {
        for (int a = 1; a <= n; ++a) {
            if (used >> a & 1u) continue;
            buf[depth] = a;
            complete_window(fam, n, buf, depth + 1, used | (1u << a), negs, fn);
        }
    }
}

inline void check_enumeration_rank(int n) {
    if (n < 0 || n > kMaxEnumerationRank)
        throw std::invalid_argument("rank outside enumerable range");
}

}  // namespace detail

// Visit every window of the family in lexicographic order.  The span passed
// to fn is only valid during the call.
template <typename Fn>
void for_each_window(GroupFamily fam, int n, Fn&& fn) {
    detail::check_enumeration_rank(n);
    std::vector<int> buf(static_cast<std::size_t>(n));
    detail::complete_window(fam, n, buf.data(), 0, 0u, 0, fn);
}

// The first entries that occur among members of the family, ascending.
inline std::vector<int> first_entries(GroupFamily fam, int n) {
    detail::check_enumeration_rank(n);
    std::vector<int> firsts;
    if (n == 0) return firsts;
    if (n == 1) {
        // the single entry is also the last, so membership constrains it
        if (fam == GroupFamily::B) firsts.push_back(-1);
        firsts.push_back(1);
        return firsts;
    }
    if (fam != GroupFamily::S)
        for (int a = n; a >= 1; --a) firsts.push_back(-a);
    for (int a = 1; a <= n; ++a) firsts.push_back(a);
    return firsts;
}

// Visit the members whose window starts with the given entry, in order.
// Partitioning on the first entry gives disjoint slices of the family,
// which is how the parallel accumulation splits its work.
template <typename Fn>
void for_each_window_with_first(GroupFamily fam, int n, int first, Fn&& fn) {
    detail::check_enumeration_rank(n);
    if (n == 0) return;
    std::vector<int> buf(static_cast<std::size_t>(n));
    buf[0] = first;
    detail::complete_window(fam, n, buf.data(), 1, 1u << std::abs(first), first < 0 ? 1 : 0, fn);
}

inline std::vector<Window> elements(GroupFamily fam, int n) {
    std::vector<Window> out;
    out.reserve(family_cardinality(fam, n));
    for_each_window(fam, n, [&](std::span<const int> w) {
        out.push_back(make_window(std::vector<int>(w.begin(), w.end())));
    });
    return out;
}

}  // namespace mahonian
