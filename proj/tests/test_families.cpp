#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "rmc/families.hpp"
#include "rmc/moore.hpp"

using namespace rmc;

TEST_CASE("Gabidulin constructor") {
    auto tw = make_tower(2, 1, 4, 1);
    auto g = gabidulin(tw, 2, 1);
    CHECK(g.code.k() == 2);
    CHECK(g.code.basis()[0] == LinPoly::monomial(tw, Lv::QN, 0));
    CHECK(g.code.basis()[1] == LinPoly::monomial(tw, Lv::QN, 1));
    CHECK(g.all_verifiable_hold());

    auto bad = gabidulin(tw, 2, 2);  // gcd(2, 4) = 2: constructed, flagged
    CHECK_FALSE(bad.all_verifiable_hold());

    CHECK_THROWS_AS(gabidulin(tw, 3, 2), invalid_error);  // exponent collision 0,2,0

    // MRD whenever the gcd condition holds, across all (k, s) cells here
    for (u64 k = 2; k <= 3; ++k)
        for (u64 s = 1; s < 4; ++s) {
            if (std::gcd(s, u64{4}) != 1) continue;
            CHECK(is_mrd(gabidulin(tw, k, s).code).verdict);
        }
}

TEST_CASE("twisted Gabidulin at q=3, n=4") {
    auto tw = make_tower(3, 1, 4, 1);
    const FieldCtx& F = tw->ctx(Lv::QN);
    u64 g = F.generator();

    // N(g) = g^40 = -1 != (-1)^8 = 1: valid and MRD
    auto t1 = twisted_gabidulin(tw, 2, 1, g);
    CHECK(t1.all_verifiable_hold());
    CHECK(is_mrd(t1.code).verdict);

    // N(g^2) = g^80 = 1 = (-1)^8: condition fails
    auto t2 = twisted_gabidulin(tw, 2, 1, F.mul(g, g));
    CHECK_FALSE(t2.all_verifiable_hold());

    CHECK_THROWS_AS(twisted_gabidulin(tw, 2, 1, 0), invalid_error);
}

TEST_CASE("twisted condition is vacuous at q=2") {
    auto tw = make_tower(2, 1, 4, 1);
    for (u64 d = 1; d < 6; ++d) {
        auto t = twisted_gabidulin(tw, 2, 1, d);
        CHECK_FALSE(t.all_verifiable_hold());  // N = 1 = (-1)^{nk} always
    }
}

TEST_CASE("pseudoregulus polynomials and the scattered test") {
    auto t25 = make_tower(2, 1, 5, 1);
    auto ps = pseudoregulus(t25, 1);
    CHECK(ps.index_t == 0);
    CHECK(ps.poly == LinPoly::monomial(t25, Lv::QN, 1));
    // C_{f,0} = <x, x^q> MRD
    MoorePolySet sheekey({LinPoly::monomial(t25, Lv::QN, 0), ps.poly});
    CHECK(is_moore(sheekey).verdict);

    // pseudoregulus(2) at n = 4 is not scattered (GF(4) interference)
    auto t24 = make_tower(2, 1, 4, 1);
    auto ps2 = pseudoregulus(t24, 2);
    CHECK_FALSE(ps2.validity[0].holds);
    MoorePolySet bad({LinPoly::monomial(t24, Lv::QN, 0), ps2.poly});
    CHECK_FALSE(is_moore(bad).verdict);
}

TEST_CASE("LP polynomials") {
    auto tw = make_tower(3, 1, 4, 1);
    const FieldCtx& F = tw->ctx(Lv::QN);
    auto d = find_delta(tw, Lv::QN, [&](u64 x) { return tw->norm_rel(x) != 1; });
    REQUIRE(d.has_value());
    auto lp = lp_poly(tw, 1, *d);
    CHECK(lp.index_t == 1);
    for (const auto& c : lp.validity) CHECK(c.holds);
    // scattered of index s: <x^{q^s}, f> is MRD
    MoorePolySet sheekey({LinPoly::monomial(tw, Lv::QN, 1), lp.poly});
    CHECK(is_moore(sheekey).verdict);

    CHECK_THROWS_AS(lp_poly(tw, 2, *d), invalid_error);  // 2s = 4 = 0 mod n
    CHECK_THROWS_AS(lp_poly(tw, 1, 0), invalid_error);
    (void)F;
}

TEST_CASE("delta search helpers are deterministic minima") {
    auto tw = make_tower(3, 1, 6, 1);
    auto d = find_delta_rel_norm_minus1(tw);
    REQUIRE(d.has_value());
    const FieldCtx& F = tw->ctx(Lv::QN);
    CHECK(F.pow(*d, 27 + 1) == F.neg(1));
    for (u64 x = 1; x < *d; ++x) CHECK(F.pow(x, 28) != F.neg(1));
}

TEST_CASE("table row 3 shape and conditions") {
    auto tw = make_tower(3, 1, 6, 1);  // q = 3, t = 3
    auto d = find_delta_rel_norm_minus1(tw);
    REQUIRE(d.has_value());
    auto row = table1_row(3, tw, 1, *d);
    CHECK(row.code.k() == 2);
    CHECK(row.all_verifiable_hold());
    CHECK(row.code.basis()[0] == LinPoly::monomial(tw, Lv::QN, 0));
    // f_2 carries exponents q^1, q^2, q^4, q^5
    const auto& c2 = row.code.basis()[1].coeffs();
    CHECK(c2[0] == 0);
    CHECK(c2[1] == 1);
    CHECK(c2[2] == 1);
    CHECK(c2[3] == 0);
    const FieldCtx& F = tw->ctx(Lv::QN);
    CHECK(c2[4] == F.pow(*d, 28));
    CHECK(c2[4] == F.neg(1));  // the norm condition makes this -1

    CHECK_THROWS_AS(table1_row(3, make_tower(3, 1, 4, 1), 1, 1), invalid_error);  // t = 2
}

TEST_CASE("row 4 is the dual shape of row 3") {
    auto tw = make_tower(3, 1, 6, 1);
    auto d = find_delta_rel_norm_minus1(tw);
    REQUIRE(d.has_value());
    auto primal = table1_row(3, tw, 1, *d);
    auto dualrow = table1_row(4, tw, 1, *d);
    CHECK(dualrow.code.k() == 4);

    auto D = delsarte_dual(primal.code);
    REQUIRE(D.has_value());
    CHECK(D->k() == 4);
    // span equality by mutual membership
    bool equal = true;
    for (const auto& f : dualrow.code.basis())
        if (!D->represent(f)) equal = false;
    CHECK(equal);
}

TEST_CASE("monomial rows") {
    auto t37 = make_tower(3, 1, 7, 1);
    auto r9 = table1_row(9, t37, 1, 0);
    CHECK(r9.code.k() == 3);
    CHECK(r9.all_verifiable_hold());
    auto r10 = table1_row(10, t37, 1, 0);
    CHECK(r10.code.k() == 4);

    auto t38 = make_tower(3, 1, 8, 1);
    auto r11 = table1_row(11, t38, 1, 0);
    CHECK_FALSE(r11.all_verifiable_hold());  // 3 != 1 mod 3

    CHECK_THROWS_AS(table1_row(9, t38, 1, 0), invalid_error);  // wrong n
}

TEST_CASE("rows with quadratic delta conditions") {
    auto t36 = make_tower(3, 1, 6, 1);
    const FieldCtx& F6 = t36->ctx(Lv::QN);
    auto d7 = find_delta(t36, Lv::QN, [&](u64 x) { return F6.add(F6.mul(x, x), x) == 1; });
    REQUIRE(d7.has_value());
    auto r7 = table1_row(7, t36, 1, *d7);
    CHECK(r7.all_verifiable_hold());
    auto r8 = table1_row(8, t36, 1, *d7);
    CHECK(r8.code.k() == 4);
    CHECK(r8.all_verifiable_hold());

    auto t38 = make_tower(3, 1, 8, 1);
    const FieldCtx& F8 = t38->ctx(Lv::QN);
    auto d13 = find_delta(t38, Lv::QN, [&](u64 x) { return F8.mul(x, x) == F8.neg(1); });
    REQUIRE(d13.has_value());
    auto r13 = table1_row(13, t38, 1, *d13);
    CHECK(r13.all_verifiable_hold());
    auto r14 = table1_row(14, t38, 1, *d13);
    CHECK(r14.code.k() == 6);
    CHECK(r14.all_verifiable_hold());
}

TEST_CASE("rows 5 and 6 carry an unverifiable tag") {
    auto tw = make_tower(5, 1, 6, 1);
    auto r5 = table1_row(5, tw, 1, 1);
    bool tagged = false;
    for (const auto& c : r5.validity)
        if (!c.verifiable) tagged = true;
    CHECK(tagged);
    CHECK(r5.code.k() == 2);
    auto r6 = table1_row(6, tw, 1, 1);
    CHECK(r6.code.k() == 4);
}

TEST_CASE("unknown rows are rejected") {
    auto tw = make_tower(3, 1, 6, 1);
    CHECK_THROWS_AS(table1_row(2, tw, 1, 1), invalid_error);
    CHECK_THROWS_AS(table1_row(15, tw, 1, 1), invalid_error);
}
