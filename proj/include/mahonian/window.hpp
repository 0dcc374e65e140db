#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <cstdlib>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace mahonian {

// Families of (signed) permutations handled by this library.
//   S     : ordinary permutations of [n] (every window entry positive)
//   B     : all signed permutations (hyperoctahedral group)
//   D     : signed permutations with an even number of negative entries
//   Delta : signed permutations whose last window entry is positive
// S and Delta sit inside B as subsets; S and D are subgroups.
enum class GroupFamily { S, B, D, Delta };

// Restriction of a family to the elements where a designated statistic is
// even / odd.
enum class ParityClass { All, StatEven, StatOdd };

/*
 * A signed permutation w of rank n in window notation [w(1),...,w(n)].
 * Here w is a bijection of {-n,...,-1,1,...,n} satisfying w(-i) = -w(i),
 * so the window determines w completely.  Immutable value type; rank 0
 * is the identity of the trivial group and belongs to every family.
 */
class Window {
public:
    Window() = default;

    static Window identity(int n) {
        std::vector<int> e(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) e[static_cast<std::size_t>(i)] = i + 1;
        return Window(std::move(e));
    }

    int rank() const noexcept { return static_cast<int>(entries_.size()); }

    // 1-based window entry w(i), i in [1, n]
    int entry(int i) const { return entries_[static_cast<std::size_t>(i - 1)]; }

    // signed evaluation, extended by w(-i) = -w(i)
    int operator()(int i) const { return i > 0 ? entry(i) : -entry(-i); }

    std::span<const int> entries() const noexcept { return entries_; }

    bool operator==(const Window&) const = default;
    auto operator<=>(const Window&) const = default;

    friend Window make_window(std::vector<int> entries);

private:
    explicit Window(std::vector<int> e) : entries_(std::move(e)) {}
    std::vector<int> entries_;
};

// Validating factory: entries must be nonzero and their absolute values a
// permutation of [n].  Throws std::invalid_argument otherwise.
inline Window make_window(std::vector<int> entries) {
    const int n = static_cast<int>(entries.size());
    std::uint64_t seen = 0;
    std::vector<char> seen_big;                 // ranks beyond the bitmask
    if (n > 64) seen_big.assign(static_cast<std::size_t>(n) + 1, 0);
    for (int v : entries) {
        if (v == 0) throw std::invalid_argument("window entries must be nonzero");
        const int a = std::abs(v);
        if (a > n)
            throw std::invalid_argument("entry " + std::to_string(v) +
                                        " out of range for rank " + std::to_string(n));
        bool dup;
        if (n <= 64) {
            dup = (seen >> a) & 1u;
            seen |= std::uint64_t{1} << a;
        } else {
            dup = seen_big[static_cast<std::size_t>(a)] != 0;
            seen_big[static_cast<std::size_t>(a)] = 1;
        }
        if (dup)
            throw std::invalid_argument("absolute value " + std::to_string(a) +
                                        " repeated in window");
    }
    return Window(std::move(entries));
}

inline int negative_count(std::span<const int> w) noexcept {
    int c = 0;
    for (int v : w) c += v < 0;
    return c;
}

inline bool is_member(std::span<const int> w, GroupFamily fam) {
    switch (fam) {
        case GroupFamily::S:
            return std::all_of(w.begin(), w.end(), [](int v) { return v > 0; });
        case GroupFamily::B:
            return true;
        case GroupFamily::D:
            return negative_count(w) % 2 == 0;
        case GroupFamily::Delta:
            return w.empty() || w.back() > 0;
    }
    return false;
}

inline bool is_member(const Window& w, GroupFamily fam) { return is_member(w.entries(), fam); }

// (a . b)(i) = a(b(i)); ranks must agree.
inline Window compose(const Window& a, const Window& b) {
    if (a.rank() != b.rank()) throw std::invalid_argument("rank mismatch in compose");
    const int n = a.rank();
    std::vector<int> e(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) e[static_cast<std::size_t>(i - 1)] = a(b.entry(i));
    return make_window(std::move(e));
}

inline Window inverse(const Window& w) {
    const int n = w.rank();
    std::vector<int> e(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) {
        const int v = w.entry(i);
        if (v > 0)
            e[static_cast<std::size_t>(v - 1)] = i;
        else
            e[static_cast<std::size_t>(-v - 1)] = -i;
    }
    return make_window(std::move(e));
}

// -w, the entrywise sign flip (left multiplication by the longest sign change)
inline Window negate(const Window& w) {
    std::vector<int> e(w.entries().begin(), w.entries().end());
    for (int& v : e) v = -v;
    return make_window(std::move(e));
}

// phi : D_n -> Delta_n replaces the last entry by its absolute value.  It is
// a bijection; the inverse flips the sign of the last entry exactly when the
// number of negative entries is odd, restoring an even count.
inline Window phi(const Window& w) {
    if (!is_member(w, GroupFamily::D)) throw std::domain_error("phi requires a D-window");
    if (w.rank() == 0 || w.entry(w.rank()) > 0) return w;
    std::vector<int> e(w.entries().begin(), w.entries().end());
    e.back() = -e.back();
    return make_window(std::move(e));
}

inline Window phi_inverse(const Window& w) {
    if (!is_member(w, GroupFamily::Delta))
        throw std::domain_error("phi_inverse requires a Delta-window");
    if (w.rank() == 0 || negative_count(w.entries()) % 2 == 0) return w;
    std::vector<int> e(w.entries().begin(), w.entries().end());
    e.back() = -e.back();
    return make_window(std::move(e));
}

// Exchange of the letters i and i+1 as *values* (right-multiplication
// analogue of an adjacent transposition acting on values): every entry of
// absolute value i becomes +-(i+1) with its sign kept, and vice versa.
inline Window swap_values(const Window& w, int i) {
    if (i < 1 || i >= w.rank()) throw std::out_of_range("swap_values index out of range");
    std::vector<int> e(w.entries().begin(), w.entries().end());
    for (int& v : e) {
        const int a = std::abs(v);
        if (a == i)
            v = v > 0 ? i + 1 : -(i + 1);
        else if (a == i + 1)
            v = v > 0 ? i : -i;
    }
    return make_window(std::move(e));
}

inline std::string format_window(std::span<const int> w) {
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(w[i]);
    }
    return out;
}

inline std::string format_window(const Window& w) { return format_window(w.entries()); }

namespace detail {

inline std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

inline int parse_int(std::string_view tok) {
    tok = trim(tok);
    if (tok.empty()) throw std::invalid_argument("empty entry in window text");
    std::size_t pos = 0;
    bool neg = false;
    if (tok[0] == '-' || tok[0] == '+') {
        neg = tok[0] == '-';
        pos = 1;
    }
    if (pos == tok.size()) throw std::invalid_argument("malformed window entry");
    long long value = 0;
    for (; pos < tok.size(); ++pos) {
        const char c = tok[pos];
        if (c < '0' || c > '9') throw std::invalid_argument("malformed window entry");
        value = value * 10 + (c - '0');
        if (value > 1'000'000) throw std::invalid_argument("window entry too large");
    }
    return static_cast<int>(neg ? -value : value);
}

}  // namespace detail

// Accepts "2,-5,-3,-1,4" with optional surrounding brackets and whitespace.
inline Window parse_window(std::string_view text) {
    std::string_view body = detail::trim(text);
    if (!body.empty() && body.front() == '[') {
        if (body.back() != ']') throw std::invalid_argument("unbalanced brackets in window text");
        body.remove_prefix(1);
        body.remove_suffix(1);
        body = detail::trim(body);
    }
    std::vector<int> entries;
    if (!body.empty()) {
        std::size_t start = 0;
        while (true) {
            const std::size_t comma = body.find(',', start);
            const auto tok = body.substr(start, comma == std::string_view::npos
                                                    ? std::string_view::npos
                                                    : comma - start);
            entries.push_back(detail::parse_int(tok));
            if (comma == std::string_view::npos) break;
            start = comma + 1;
        }
    }
    return make_window(std::move(entries));
}

}  // namespace mahonian
