#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "mahonian/qpoly.hpp"
#include "mahonian/statistics.hpp"
#include "mahonian/window.hpp"

namespace mahonian {

/*
 * Canonical text form of a polynomial: terms by ascending exponent, unit
 * coefficients suppressed, exponent 1 written plainly, e.g.
 *
 *     1 - q^2 + 3q^5
 *
 * The zero polynomial prints as "0".  The LaTeX form differs only in
 * bracing exponents.
 */
namespace detail {

inline std::string poly_string(const QPoly& p, bool latex) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (int e = 0; e <= p.degree(); ++e) {
        const BigInt c = p.coeff(e);
        if (c == 0) continue;
        const bool neg = c < 0;
        const BigInt mag = neg ? BigInt(-c) : c;
        if (first) {
            if (neg) out += '-';
            first = false;
        } else {
            out += neg ? " - " : " + ";
        }
        if (e == 0) {
            out += mag.str();
        } else {
            if (mag != 1) out += mag.str();
            out += 'q';
            if (e > 1) out += latex ? "^{" + std::to_string(e) + "}" : "^" + std::to_string(e);
        }
    }
    return out;
}

}  // namespace detail

inline std::string to_text(const QPoly& p) { return detail::poly_string(p, false); }
inline std::string to_latex(const QPoly& p) { return detail::poly_string(p, true); }

// dense coefficient list "[1,0,-1]"; the zero polynomial gives "[]"
inline std::string coeffs_json(const QPoly& p) {
    std::string out = "[";
    for (int e = 0; e <= p.degree(); ++e) {
        if (e) out += ',';
        out += p.coeff(e).str();
    }
    out += ']';
    return out;
}

inline std::string int_list_json(std::span<const int> xs) {
    std::string out = "[";
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(xs[i]);
    }
    out += ']';
    return out;
}

// ---- token maps shared by the CLI and the machine-readable output ----

inline const char* group_token(GroupFamily f) {
    switch (f) {
        case GroupFamily::S: return "s";
        case GroupFamily::B: return "b";
        case GroupFamily::D: return "d";
        case GroupFamily::Delta: return "delta";
    }
    return "";
}

inline std::optional<GroupFamily> parse_group(std::string_view tok) {
    if (tok == "s") return GroupFamily::S;
    if (tok == "b") return GroupFamily::B;
    if (tok == "d") return GroupFamily::D;
    if (tok == "delta") return GroupFamily::Delta;
    return std::nullopt;
}

inline const char* stat_token(StatisticKind k) {
    switch (k) {
        case StatisticKind::Inv: return "inv";
        case StatisticKind::Maj: return "maj";
        case StatisticKind::Fmaj: return "fmaj";
        case StatisticKind::Dmaj: return "dmaj";
        case StatisticKind::LenS: return "len-s";
        case StatisticKind::LenB: return "len-b";
        case StatisticKind::LenD: return "len-d";
    }
    return "";
}

inline std::optional<StatisticKind> parse_stat(std::string_view tok) {
    if (tok == "inv") return StatisticKind::Inv;
    if (tok == "maj") return StatisticKind::Maj;
    if (tok == "fmaj") return StatisticKind::Fmaj;
    if (tok == "dmaj") return StatisticKind::Dmaj;
    if (tok == "len-s") return StatisticKind::LenS;
    if (tok == "len-b") return StatisticKind::LenB;
    if (tok == "len-d") return StatisticKind::LenD;
    return std::nullopt;
}

inline const char* character_token(Character c) {
    switch (c) {
        case Character::Trivial: return "trivial";
        case Character::SignLength: return "sign";
        case Character::NegParity: return "negparity";
        case Character::AbsSign: return "abssign";
    }
    return "";
}

inline std::optional<Character> parse_character(std::string_view tok) {
    if (tok == "trivial") return Character::Trivial;
    if (tok == "sign") return Character::SignLength;
    if (tok == "negparity") return Character::NegParity;
    if (tok == "abssign") return Character::AbsSign;
    return std::nullopt;
}

inline const char* parity_token(ParityClass p) {
    switch (p) {
        case ParityClass::All: return "all";
        case ParityClass::StatEven: return "even";
        case ParityClass::StatOdd: return "odd";
    }
    return "";
}

inline std::optional<ParityClass> parse_parity(std::string_view tok) {
    if (tok == "all") return ParityClass::All;
    if (tok == "even") return ParityClass::StatEven;
    if (tok == "odd") return ParityClass::StatOdd;
    return std::nullopt;
}

}  // namespace mahonian
