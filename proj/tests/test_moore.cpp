#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "rmc/families.hpp"
#include "rmc/moore.hpp"

using namespace rmc;

namespace {

MoorePolySet monomials(const TowerRef& tw, std::vector<u64> exps) {
    std::vector<LinPoly> polys;
    for (u64 e : exps) polys.push_back(LinPoly::monomial(tw, Lv::QN, e));
    return MoorePolySet(std::move(polys));
}

}  // namespace

TEST_CASE("moore matrix entries") {
    auto tw = make_tower(2, 1, 4, 1);
    const FieldCtx& F = tw->ctx(Lv::QN);
    u64 g = F.generator();
    MoorePolySet f = monomials(tw, {0, 1});
    Mat M = moore_matrix(f, std::vector<u64>{1, g});
    CHECK(M.at(0, 0) == 1);
    CHECK(M.at(0, 1) == 1);
    CHECK(M.at(1, 0) == g);
    CHECK(M.at(1, 1) == F.mul(g, g));

    // alpha_1 = 0 gives a zero first row
    Mat Z = moore_matrix(f, std::vector<u64>{0, g});
    CHECK(Z.at(0, 0) == 0);
    CHECK(Z.at(0, 1) == 0);

    CHECK_THROWS_AS(moore_matrix(f, std::vector<u64>{1}), invalid_error);
}

TEST_CASE("the counterexample pair (x, x^{q^2}) at q=2, n=4") {
    auto tw = make_tower(2, 1, 4, 1);
    const FieldCtx& F = tw->ctx(Lv::QN);
    MoorePolySet f = monomials(tw, {0, 2});

    // omega in GF(4) \ GF(2): order-3 element g^5; encoding frozen from the
    // power table of GF(16) with defining polynomial x^4 + x + 1
    u64 omega = F.pow(F.generator(), 5);
    CHECK(omega == 6);
    CHECK(det(moore_matrix(f, std::vector<u64>{1, omega})) == 0);
    CHECK(tw->fq_rank(Lv::QN, std::vector<u64>{1, omega}) == 2);

    auto rep = is_moore_oracle(f);
    CHECK_FALSE(rep.verdict);
    REQUIRE(rep.witness.has_value());
    CHECK(*rep.witness == std::vector<u64>{1, 6});  // lexicographically first
    CHECK(verify_moore_witness(f, *rep.witness));

    auto rep2 = is_moore(f);
    CHECK_FALSE(rep2.verdict);
    REQUIRE(rep2.witness.has_value());
    CHECK(verify_moore_witness(f, *rep2.witness));
}

TEST_CASE("dependent tuples always give singular Moore matrices") {
    auto tw = make_tower(2, 1, 4, 1);
    const FieldCtx& F = tw->ctx(Lv::QN);
    MoorePolySet f = monomials(tw, {0, 1});
    for (u64 a = 0; a < F.size(); ++a)
        for (u64 b = 0; b < F.size(); ++b) {
            std::vector<u64> A{a, b};
            if (tw->fq_rank(Lv::QN, A) < 2) CHECK(det(moore_matrix(f, A)) == 0);
        }
}

TEST_CASE("oracle and MRD test agree") {
    auto tw = make_tower(2, 1, 4, 1);
    for (u64 i = 0; i < 4; ++i)
        for (u64 j = i + 1; j < 4; ++j) {
            MoorePolySet f = monomials(tw, {i, j});
            CHECK(is_moore_oracle(f).verdict == is_moore(f).verdict);
        }
    for (u64 seed = 1; seed <= 10; ++seed) {
        RankMetricCode C = random_code(tw, Lv::QN, 2, seed);
        MoorePolySet f(C.basis());
        CHECK(is_moore_oracle(f).verdict == is_moore(f).verdict);
    }
}

TEST_CASE("Gabidulin triples are Moore polynomial sets") {
    auto tw = make_tower(2, 1, 4, 1);
    CHECK(is_moore(monomials(tw, {0, 1, 2})).verdict);
}

TEST_CASE("AP monomial tuples at small parameters") {
    // exponent APs with difference coprime to n give Moore sets (q = 2,3; n <= 5)
    for (u64 p : {2u, 3u}) {
        for (u64 n : {4u, 5u}) {
            auto tw = make_tower(p, 1, n, 1);
            for (u64 d = 1; d < n; ++d) {
                if (std::gcd(d, n) != 1) continue;
                MoorePolySet f = monomials(tw, {0, d % n});
                CHECK(is_moore(f).verdict);
            }
        }
    }
}

TEST_CASE("index computation") {
    auto tw = make_tower(3, 1, 4, 1);
    auto gab = gabidulin(tw, 2, 1);
    CHECK(index_of(gab.code) == 0);

    // twisted <x^q, x + delta x^{q^2}>: index 1
    const FieldCtx& F = tw->ctx(Lv::QN);
    u64 delta = F.generator();
    std::vector<u64> c{0, 0, delta, 0};
    c[0] = 1;
    RankMetricCode tw2({LinPoly::monomial(tw, Lv::QN, 1), LinPoly(tw, Lv::QN, c)});
    CHECK(index_of(tw2) == 1);

    // <x + x^q> contains no monomial
    RankMetricCode bin({LinPoly(tw, Lv::QN, {1, 1, 0, 0})});
    CHECK_THROWS_AS(index_of(bin), no_monomial_error);

    // basis-change invariance
    std::vector<LinPoly> mixed{gab.code.basis()[0].add(gab.code.basis()[1]),
                               gab.code.basis()[1].scale(delta)};
    CHECK(index_of(RankMetricCode(mixed)) == 0);
}

TEST_CASE("normalization") {
    auto tw = make_tower(2, 1, 4, 1);

    // <x, x + x^q> reduces to <x, x^q> up to echelon form
    RankMetricCode C({LinPoly(tw, Lv::QN, {1, 0, 0, 0}), LinPoly(tw, Lv::QN, {1, 1, 0, 0})});
    MoorePolySet f = normalize(C);
    for (const auto& fp : f.polys) CHECK(C.represent(fp).has_value());
    CHECK(f.assumption_flags[0]);
    CHECK(f.assumption_flags[1]);
    CHECK(f.assumption_flags[2]);
    CHECK(f.assumption_flags[3]);
    CHECK(f.assumption_flags[4]);
    REQUIRE(f.index_t.has_value());
    CHECK(*f.index_t == 0);

    // already normalized Gabidulin basis: all flags true
    auto gab = gabidulin(tw, 2, 1);
    MoorePolySet g = normalize(gab.code);
    for (int i = 0; i < 5; ++i) CHECK(g.assumption_flags[i]);

    // <x^q, x^q + x^{q^2}>: no separable element, condition (3) unmet
    RankMetricCode D({LinPoly(tw, Lv::QN, {0, 1, 0, 0}), LinPoly(tw, Lv::QN, {0, 1, 1, 0})});
    MoorePolySet h = normalize(D);
    CHECK_FALSE(h.assumption_flags[2]);
    for (const auto& fp : h.polys) CHECK(D.represent(fp).has_value());
}

TEST_CASE("arithmetic progression predicate") {
    CHECK(is_ap({0, 2, 4}, false));
    CHECK_FALSE(is_ap({0, 1, 3}, false));
    CHECK(is_ap({4, 0, 2}, true));
    CHECK_FALSE(is_ap({4, 0, 2}, false));
    CHECK(is_ap({5}, false));
    CHECK(is_ap({7, 3}, false));  // length <= 2 vacuously true
    CHECK_THROWS_AS(is_ap({1, 1, 2}, false), invalid_error);
    CHECK_THROWS_AS(is_ap({}, false), invalid_error);
}

TEST_CASE("exceptionality probe on Moore sets") {
    auto tw = make_tower(2, 1, 4, 1);

    auto probe = exceptional_moore_probe(monomials(tw, {0, 1}), 3);
    REQUIRE(probe.entries.size() == 3);
    for (const auto& e : probe.entries) {
        CHECK_FALSE(e.skipped);
        CHECK(e.report.verdict);
    }

    // (x, x^{q^3}): Moore at m = 1 but not at m = 3 (gcd(3, 12) != 1)
    auto probe2 = exceptional_moore_probe(monomials(tw, {0, 3}), 3);
    REQUIRE(probe2.entries.size() == 3);
    CHECK(probe2.entries[0].report.verdict);
    CHECK_FALSE(probe2.entries[2].report.verdict);

    // consistency with the code-level probe
    auto cp = exceptional_probe(monomials(tw, {0, 3}).span(), 3);
    for (u64 i = 0; i < 3; ++i)
        CHECK(probe2.entries[i].report.verdict == cp.entries[i].report.verdict);
}
