#pragma once

#include <array>

#include "mahonian/statistics.hpp"

namespace mahonian {

/*
 * The pairing map on B_n that cancels terms of signed flag-major sums.
 *
 * For i in [floor(n/2)] call the value pair {2i-1, 2i} good in w when the
 * two letters of those absolute values stand in adjacent window positions
 * (in either order) and carry the same sign.  The image of w is
 * swap_values(w, 2i-1) for the smallest bad i, and w itself when every
 * pair is good.  The map is an involution; on non-fixed points it flips
 * the parity of the type-B length while preserving the BOrder descent
 * set, N1, and hence fmaj.
 *
 * A fixed point of even rank 2m tiles its window with blocks at positions
 * (1,2), (3,4), ..., each block holding a pair {2i-1, 2i} with a common
 * sign.  Reading the blocks as single letters compresses the fixed point
 * to a "barred" window of rank m: a block (+-(2i-1), +-2i) becomes the
 * entry +-i, and the reversed block (+-2i, +-(2i-1)) becomes +-i with a
 * bar.  There are 4^m m! barred windows of rank m.
 */

namespace detail {

// 0 when every pair is good, else the smallest bad pair index
inline int smallest_bad_pair(std::span<const int> w) {
    const int n = static_cast<int>(w.size());
    std::array<int, 65> where{};  // position (0-based) of each absolute value
    std::vector<int> where_big;
    int* pos = where.data();
    if (n > 64) {
        where_big.assign(static_cast<std::size_t>(n) + 1, 0);
        pos = where_big.data();
    }
    for (int i = 0; i < n; ++i) pos[std::abs(w[i])] = i;
    for (int i = 1; 2 * i <= n; ++i) {
        const int p = pos[2 * i - 1], q = pos[2 * i];
        const bool adjacent = p - q == 1 || q - p == 1;
        if (!adjacent || (w[p] < 0) != (w[q] < 0)) return i;
    }
    return 0;
}

}  // namespace detail

inline bool iota_is_fixed(std::span<const int> w) { return detail::smallest_bad_pair(w) == 0; }

inline bool iota_is_fixed(const Window& w) { return iota_is_fixed(w.entries()); }

inline Window iota(const Window& w) {
    const int bad = detail::smallest_bad_pair(w.entries());
    return bad == 0 ? w : swap_values(w, 2 * bad - 1);
}

// A window of rank m with a set of barred positions; text form "-2,1,-3~"
// marks barred entries with a trailing '~'.
struct BarredWindow {
    Window window;
    std::vector<int> bars;  // strictly increasing positions in [m]

    bool operator==(const BarredWindow&) const = default;
};

inline BarredWindow make_barred(Window w, std::vector<int> bars) {
    const int m = w.rank();
    int prev = 0;
    for (int b : bars) {
        if (b <= prev || b > m) throw std::invalid_argument("bad bar positions");
        prev = b;
    }
    return BarredWindow{std::move(w), std::move(bars)};
}

inline bool is_barred(const BarredWindow& b, int position) {
    return std::find(b.bars.begin(), b.bars.end(), position) != b.bars.end();
}

// Expand a barred window of rank m to the fixed point of rank 2m it encodes.
inline Window from_barred(const BarredWindow& b) {
    const int m = b.window.rank();
    std::vector<int> e(static_cast<std::size_t>(2 * m));
    for (int k = 1; k <= m; ++k) {
        const int v = b.window.entry(k);
        const int i = std::abs(v);
        const int sign = v < 0 ? -1 : 1;
        int lo = sign * (2 * i - 1), hi = sign * 2 * i;
        if (is_barred(b, k)) std::swap(lo, hi);
        e[static_cast<std::size_t>(2 * k - 2)] = lo;
        e[static_cast<std::size_t>(2 * k - 1)] = hi;
    }
    return make_window(std::move(e));
}

// Compress an even-rank fixed point; rejects anything else.
inline BarredWindow to_barred(const Window& w) {
    const int n = w.rank();
    if (n % 2 != 0) throw std::domain_error("to_barred requires even rank");
    if (!iota_is_fixed(w)) throw std::domain_error("to_barred requires a fixed point");
    // fixedness forces the pair blocks to tile positions (1,2), (3,4), ...
    const int m = n / 2;
    std::vector<int> e(static_cast<std::size_t>(m));
    std::vector<int> bars;
    for (int k = 0; k < m; ++k) {
        const int x = w.entry(2 * k + 1);
        const int ax = std::abs(x);
        const int sign = x < 0 ? -1 : 1;
        if (ax % 2 == 1) {
            e[static_cast<std::size_t>(k)] = sign * (ax + 1) / 2;
        } else {
            e[static_cast<std::size_t>(k)] = sign * ax / 2;
            bars.push_back(k + 1);
        }
    }
    return make_barred(make_window(std::move(e)), std::move(bars));
}

// Statistics of the barred window itself: maj and Des of the underlying
// window in BOrder, inv in the natural order, N1, and the bar positions
// split by the sign of their entry.
struct BarredStats {
    int maj = 0;
    std::vector<int> des;
    int inv = 0;
    int n1 = 0;
    std::vector<int> bars;
    std::vector<int> bars_plus;
    std::vector<int> bars_minus;
};

inline BarredStats barred_stats(const BarredWindow& b) {
    BarredStats s;
    s.maj = maj(b.window, OrderConvention::BOrder);
    s.des = descent_set(b.window, OrderConvention::BOrder);
    s.inv = inv(b.window);
    s.n1 = negative_count(b.window.entries());
    s.bars = b.bars;
    for (int p : b.bars)
        (b.window.entry(p) > 0 ? s.bars_plus : s.bars_minus).push_back(p);
    return s;
}

inline std::string format_barred(const BarredWindow& b) {
    std::string out;
    for (int k = 1; k <= b.window.rank(); ++k) {
        if (k > 1) out += ',';
        out += std::to_string(b.window.entry(k));
        if (is_barred(b, k)) out += '~';
    }
    return out;
}

// Accepts "-2,1,-3~": entries comma-separated, '~' suffix marks a bar.
inline BarredWindow parse_barred(std::string_view text) {
    std::string_view body = detail::trim(text);
    std::vector<int> entries;
    std::vector<int> bars;
    if (!body.empty()) {
        std::size_t start = 0;
        while (true) {
            const std::size_t comma = body.find(',', start);
            auto tok = detail::trim(body.substr(
                start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
            if (!tok.empty() && tok.back() == '~') {
                bars.push_back(static_cast<int>(entries.size()) + 1);
                tok.remove_suffix(1);
            }
            entries.push_back(detail::parse_int(tok));
            if (comma == std::string_view::npos) break;
            start = comma + 1;
        }
    }
    return make_barred(make_window(std::move(entries)), std::move(bars));
}

}  // namespace mahonian
