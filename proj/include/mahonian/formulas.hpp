#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "mahonian/qpoly.hpp"

namespace mahonian {

/*
 * Closed-form product expressions for Mahonian and signed Mahonian sums.
 * Each formula is a finite product of q-integer factors [m]_{+-q} (possibly
 * evaluated at q^2) and factors of the shape (1 - q^e); the empty product
 * is 1.  The id names the generating-function identity whose right-hand
 * side the product is:
 *
 *   poincare-s          [1]_q [2]_q ... [n]_q
 *   gessel-simion       [1]_q [2]_{-q} [3]_q ... [n]_{(-1)^{n-1} q}
 *   poincare-b          [2]_q [4]_q ... [2n]_q
 *   agr                 [2]_{-q} [4]_q ... [2n]_{(-1)^n q}
 *   b-negparity         [2]_{-q} [4]_{-q} ... [2n]_{-q}
 *   b-abssign           [2]_q [4]_{-q} ... [2n]_{(-1)^{n-1} q}
 *   poincare-d          [2]_q [4]_q ... [2n-2]_q [n]_q
 *   signed-mahonian-d   [2]_{-q} [4]_q ... [2n-2]_{(-1)^{n-1} q} [n]_q
 *   delta-even          the same product as signed-mahonian-d (used at even n)
 *   delta-odd           its odd-n companion with final factor [n]_{-q}
 *   b2n-product         [2]_{-q} [4]_q ... [4n]_q          (rank 2n, n factors doubled)
 *   b2n-recursion-rhs   (1-q^2)(1-q^6)...(1-q^{4n-2}) . [2]_{q^2} [4]_{q^2} ... [2n]_{q^2}
 */
enum class FormulaId {
    PoincareS,
    GesselSimion,
    PoincareB,
    Agr,
    BNegParity,
    BAbsSign,
    PoincareD,
    SignedMahonianD,
    DeltaEven,
    DeltaOdd,
    B2nProduct,
    B2nRecursionRhs,
};

// [m] evaluated at sign*q, then q -> q^dilation
struct QIntFactor {
    int m;
    int sign;
    int dilation = 1;
};

// 1 - q^exponent
struct OneMinusPowFactor {
    int exponent;
};

using FormulaFactor = std::variant<QIntFactor, OneMinusPowFactor>;

inline const char* formula_token(FormulaId id) {
    switch (id) {
        case FormulaId::PoincareS: return "poincare-s";
        case FormulaId::GesselSimion: return "gessel-simion";
        case FormulaId::PoincareB: return "poincare-b";
        case FormulaId::Agr: return "agr";
        case FormulaId::BNegParity: return "b-negparity";
        case FormulaId::BAbsSign: return "b-abssign";
        case FormulaId::PoincareD: return "poincare-d";
        case FormulaId::SignedMahonianD: return "signed-mahonian-d";
        case FormulaId::DeltaEven: return "delta-even";
        case FormulaId::DeltaOdd: return "delta-odd";
        case FormulaId::B2nProduct: return "b2n-product";
        case FormulaId::B2nRecursionRhs: return "b2n-recursion-rhs";
    }
    return "";
}

inline std::optional<FormulaId> parse_formula_id(std::string_view tok) {
    for (FormulaId id : {FormulaId::PoincareS, FormulaId::GesselSimion, FormulaId::PoincareB,
                         FormulaId::Agr, FormulaId::BNegParity, FormulaId::BAbsSign,
                         FormulaId::PoincareD, FormulaId::SignedMahonianD, FormulaId::DeltaEven,
                         FormulaId::DeltaOdd, FormulaId::B2nProduct, FormulaId::B2nRecursionRhs})
        if (tok == formula_token(id)) return id;
    return std::nullopt;
}

inline std::vector<FormulaFactor> formula_factors(FormulaId id, int n) {
    if (n < 0) throw std::invalid_argument("formula rank must be nonnegative");
    std::vector<FormulaFactor> f;
    auto alt = [](int k, int odd_sign) { return k % 2 == 1 ? odd_sign : -odd_sign; };
    switch (id) {
        case FormulaId::PoincareS:
            for (int k = 1; k <= n; ++k) f.push_back(QIntFactor{k, +1});
            break;
        case FormulaId::GesselSimion:
            for (int k = 1; k <= n; ++k) f.push_back(QIntFactor{k, alt(k, +1)});
            break;
        case FormulaId::PoincareB:
            for (int k = 1; k <= n; ++k) f.push_back(QIntFactor{2 * k, +1});
            break;
        case FormulaId::Agr:
            for (int k = 1; k <= n; ++k) f.push_back(QIntFactor{2 * k, alt(k, -1)});
            break;
        case FormulaId::BNegParity:
            for (int k = 1; k <= n; ++k) f.push_back(QIntFactor{2 * k, -1});
            break;
        case FormulaId::BAbsSign:
            for (int k = 1; k <= n; ++k) f.push_back(QIntFactor{2 * k, alt(k, +1)});
            break;
        case FormulaId::PoincareD:
            for (int k = 1; k < n; ++k) f.push_back(QIntFactor{2 * k, +1});
            if (n >= 1) f.push_back(QIntFactor{n, +1});
            break;
        case FormulaId::SignedMahonianD:
        case FormulaId::DeltaEven:
            for (int k = 1; k < n; ++k) f.push_back(QIntFactor{2 * k, alt(k, -1)});
            if (n >= 1) f.push_back(QIntFactor{n, +1});
            break;
        case FormulaId::DeltaOdd:
            for (int k = 1; k < n; ++k) f.push_back(QIntFactor{2 * k, alt(k, -1)});
            if (n >= 1) f.push_back(QIntFactor{n, -1});
            break;
        case FormulaId::B2nProduct:
            for (int k = 1; k <= 2 * n; ++k) f.push_back(QIntFactor{2 * k, alt(k, -1)});
            break;
        case FormulaId::B2nRecursionRhs:
            for (int i = 1; i <= n; ++i) f.push_back(OneMinusPowFactor{4 * i - 2});
            for (int k = 1; k <= n; ++k) f.push_back(QIntFactor{2 * k, +1, 2});
            break;
    }
    return f;
}

inline QPoly formula(FormulaId id, int n) {
    QPoly p = QPoly::one();
    for (const auto& factor : formula_factors(id, n)) {
        if (const auto* qi = std::get_if<QIntFactor>(&factor))
            p *= q_int(qi->m, qi->sign).dilated(qi->dilation);
        else
            p *= QPoly::one() - QPoly::monomial(1, std::get<OneMinusPowFactor>(factor).exponent);
    }
    return p;
}

inline std::string formula_latex(FormulaId id, int n) {
    const auto factors = formula_factors(id, n);
    if (factors.empty()) return "1";
    std::string out;
    for (const auto& factor : factors) {
        if (const auto* qi = std::get_if<QIntFactor>(&factor)) {
            out += "[" + std::to_string(qi->m) + "]_{";
            if (qi->sign < 0) out += "-";
            out += "q";
            if (qi->dilation != 1) out += "^{" + std::to_string(qi->dilation) + "}";
            out += "}";
        } else {
            out += "(1-q^{" +
                   std::to_string(std::get<OneMinusPowFactor>(factor).exponent) + "})";
        }
    }
    return out;
}

}  // namespace mahonian
