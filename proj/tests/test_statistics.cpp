#include <catch2/catch_amalgamated.hpp>

#include "mahonian/enumerate.hpp"
#include "mahonian/statistics.hpp"
#include "oracle.hpp"

using namespace mahonian;

static Window W(std::vector<int> e) { return make_window(std::move(e)); }

// the two windows exercised throughout: A is a Delta-member with three
// negatives, B is a D-member of rank 6
static const Window A = W({2, -5, -3, -1, 4});
static const Window B6 = W({-3, -4, 1, 2, -6, -5});

TEST_CASE("inversions use the natural order") {
    CHECK(inv(A) == 3);
    CHECK(inv(B6) == 9);
    CHECK(inv(Window::identity(4)) == 0);
    CHECK(inv(W({})) == 0);
}

TEST_CASE("descents under both order conventions") {
    CHECK(descent_set(A, OrderConvention::Natural) == std::vector<int>{1});
    CHECK(descent_set(A, OrderConvention::BOrder) == std::vector<int>{1, 2, 3});
    CHECK(descent_set(B6, OrderConvention::BOrder) == std::vector<int>{4, 5});
    CHECK(descent_set(Window::identity(5), OrderConvention::BOrder).empty());

    // on unsigned windows the conventions coincide
    for (const auto& w : elements(GroupFamily::S, 4))
        CHECK(descent_set(w, OrderConvention::Natural) ==
              descent_set(w, OrderConvention::BOrder));
}

TEST_CASE("major index") {
    CHECK(maj(A, OrderConvention::BOrder) == 6);
    CHECK(maj(A, OrderConvention::Natural) == 1);
    CHECK(maj(B6, OrderConvention::BOrder) == 9);
    CHECK(maj(W({2, 1}), OrderConvention::Natural) == 1);
    CHECK(maj(W({}), OrderConvention::BOrder) == 0);
}

TEST_CASE("negative-entry statistics") {
    const NegStats sa = neg_stats(A);
    CHECK(sa.neg == std::vector<int>{2, 3, 4});
    CHECK(sa.n1 == 3);
    CHECK(sa.n2 == 6);

    const NegStats sb = neg_stats(B6);
    CHECK(sb.n1 == 4);
    CHECK(sb.n2 == 14);

    const NegStats se = neg_stats(W({}));
    CHECK(se.neg.empty());
    CHECK((se.n1 == 0 && se.n2 == 0));
}

TEST_CASE("N1 + N2 equals minus the sum over negative positions") {
    for (int n = 1; n <= 5; ++n)
        for (const auto& w : elements(GroupFamily::B, n)) {
            const NegStats s = neg_stats(w);
            int rhs = 0;
            for (int i : s.neg) rhs -= w.entry(i);
            CHECK(s.n1 + s.n2 == rhs);
        }
}

TEST_CASE("lengths") {
    CHECK(length(A, GroupFamily::B) == 12);
    CHECK(length(Window::identity(5), GroupFamily::B) == 0);
    CHECK(length(W({2, 1}), GroupFamily::S) == 1);
    CHECK(length(W({-2, -1}), GroupFamily::D) == 1);
    CHECK_THROWS_AS(length(W({-1, 2}), GroupFamily::S), std::domain_error);
    CHECK_THROWS_AS(length(W({-1, 2}), GroupFamily::D), std::domain_error);
    CHECK_THROWS_AS(length(A, GroupFamily::Delta), std::invalid_argument);

    // len_D = len_B - N1 on D-windows
    for (int n = 1; n <= 5; ++n)
        for (const auto& w : elements(GroupFamily::D, n))
            CHECK(length(w, GroupFamily::D) ==
                  length(w, GroupFamily::B) - neg_stats(w).n1);
}

TEST_CASE("flag-major index") {
    CHECK(fmaj(A) == 15);  // 2*6 + 3
    CHECK(fmaj(B6) == 22);
    CHECK(fmaj(Window::identity(6)) == 0);
    for (int n = 1; n <= 5; ++n)
        for (const auto& w : elements(GroupFamily::B, n))
            CHECK(fmaj(w) == 2 * maj(w, OrderConvention::BOrder) + neg_stats(w).n1);
}

TEST_CASE("Dmaj agrees with fmaj through phi") {
    CHECK(dmaj(A) == 15);                       // Delta-window: dmaj = fmaj
    CHECK(dmaj(W({2, -5, -3, -1, -4})) == 15);  // its phi-preimage
    CHECK(dmaj(Window::identity(3)) == 0);
    CHECK(dmaj(W({-1, 2})) == 1);  // ends positive, so it lies in Delta_2
    CHECK_THROWS_AS(dmaj(W({2, -1})), std::domain_error);

    for (int n = 1; n <= 5; ++n)
        for (const auto& w : elements(GroupFamily::D, n))
            CHECK(dmaj(w) == fmaj(phi(w)));
}

TEST_CASE("character values") {
    CHECK(character_value(A, Character::Trivial, GroupFamily::B) == 1);
    CHECK(character_value(A, Character::SignLength, GroupFamily::B) == 1);    // len 12
    CHECK(character_value(A, Character::NegParity, GroupFamily::B) == -1);   // N1 = 3
    CHECK(character_value(A, Character::AbsSign, GroupFamily::B) == -1);     // inv|w| = 5
    CHECK(character_value(W({-1, 2}), Character::NegParity, GroupFamily::B) == -1);
    // Delta-windows take the type-B length
    CHECK(character_value(W({-2, 1}), Character::SignLength, GroupFamily::Delta) == 1);
    CHECK(character_value(W({-1, 2}), Character::SignLength, GroupFamily::Delta) == -1);
}

TEST_CASE("characters are multiplicative") {
    const auto b3 = elements(GroupFamily::B, 3);
    for (const auto& u : b3)
        for (const auto& v : b3) {
            const Window uv = compose(u, v);
            for (Character chi :
                 {Character::SignLength, Character::NegParity, Character::AbsSign})
                CHECK(character_value(uv, chi, GroupFamily::B) ==
                      character_value(u, chi, GroupFamily::B) *
                          character_value(v, chi, GroupFamily::B));
        }
    // type-D sign character on the subgroup D_4
    const auto d4 = elements(GroupFamily::D, 4);
    for (std::size_t i = 0; i < d4.size(); i += 5)
        for (std::size_t j = 0; j < d4.size(); j += 7) {
            const Window uv = compose(d4[i], d4[j]);
            CHECK(character_value(uv, Character::SignLength, GroupFamily::D) ==
                  character_value(d4[i], Character::SignLength, GroupFamily::D) *
                      character_value(d4[j], Character::SignLength, GroupFamily::D));
        }
}

TEST_CASE("negation shifts the basic statistics") {
    for (int n = 1; n <= 5; ++n) {
        const int choose2 = n * (n - 1) / 2;
        for (const auto& w : elements(GroupFamily::B, n)) {
            const Window m = negate(w);
            CHECK(inv(m) == choose2 - inv(w));
            CHECK(neg_stats(m).n1 == n - neg_stats(w).n1);
            CHECK(neg_stats(m).n2 == choose2 - neg_stats(w).n2);
        }
    }
}

TEST_CASE("negation shifts fmaj on Delta by the rank") {
    for (int n = 1; n <= 5; ++n)
        for (const auto& w : elements(GroupFamily::Delta, n)) {
            const Window m = negate(w);  // lands outside Delta
            CHECK(fmaj(m) == fmaj(w) + n);
        }
}

TEST_CASE("statistics match the brute-force oracle") {
    for (int n = 0; n <= 4; ++n)
        for (const auto& ow : oracle::all_b(n)) {
            const Window w = make_window(ow);
            CHECK(inv(w) == oracle::inv(ow));
            CHECK(abs_inv(w) == oracle::abs_inv(ow));
            CHECK(descent_set(w, OrderConvention::Natural) == oracle::des_natural(ow));
            CHECK(descent_set(w, OrderConvention::BOrder) == oracle::des_border(ow));
            CHECK(maj(w, OrderConvention::Natural) == oracle::maj_natural(ow));
            CHECK(maj(w, OrderConvention::BOrder) == oracle::maj_border(ow));
            CHECK(neg_stats(w).n1 == oracle::n1(ow));
            CHECK(neg_stats(w).n2 == oracle::n2(ow));
            CHECK(fmaj(w) == oracle::fmaj(ow));
            CHECK(length(w, GroupFamily::B) == oracle::len_b(ow));
            if (oracle::in_family(ow, 'd')) CHECK(length(w, GroupFamily::D) == oracle::len_d(ow));
            if (oracle::in_family(ow, 'd') || oracle::in_family(ow, 'x'))
                CHECK(dmaj(w) == oracle::dmaj(ow));
        }
}
