#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rmc/gf.hpp"
#include "rmc/linalg.hpp"

using namespace rmc;

TEST_CASE("primality") {
    CHECK(is_prime(2));
    CHECK(is_prime(3));
    CHECK(is_prime(7));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(9));
    CHECK_FALSE(is_prime(91));
}

TEST_CASE("deterministic defining polynomials") {
    // frozen: lexicographically least monic irreducibles over GF(p)
    CHECK(field(2, 4)->defining() == std::vector<u32>{1, 1, 0, 0, 1});  // x^4+x+1
    CHECK(field(3, 4)->defining() == std::vector<u32>{2, 1, 0, 0, 1});  // x^4+x+2
    CHECK(field(2, 1)->defining() == std::vector<u32>{0, 1});           // x
    CHECK(field(2, 6)->defining() == std::vector<u32>{1, 1, 0, 0, 0, 0, 1});
    CHECK(field(3, 6)->defining() == std::vector<u32>{2, 1, 0, 0, 0, 0, 1});
}

TEST_CASE("GF(81) norm landmark") {
    // g = residue class of x; g^40 must be the unique element of order 2
    auto F = field(3, 4);
    u64 g = F->generator();
    CHECK(g == 3);
    CHECK(F->pow(g, 40) == F->neg(1));
    CHECK(F->pow(g, 80) == 1);
}

static void field_axioms(const CtxRef& F, u64 trials) {
    Rng rng(42);
    u64 S = F->size();
    for (u64 t = 0; t < trials; ++t) {
        u64 a = rng.below(S), b = rng.below(S), c = rng.below(S);
        CHECK(F->add(a, b) == F->add(b, a));
        CHECK(F->mul(a, b) == F->mul(b, a));
        CHECK(F->add(F->add(a, b), c) == F->add(a, F->add(b, c)));
        CHECK(F->mul(F->mul(a, b), c) == F->mul(a, F->mul(b, c)));
        CHECK(F->mul(a, F->add(b, c)) == F->add(F->mul(a, b), F->mul(a, c)));
        CHECK(F->add(a, F->neg(a)) == 0);
        CHECK(F->sub(a, b) == F->add(a, F->neg(b)));
        if (a) CHECK(F->mul(a, F->inv(a)) == 1);
        CHECK(F->frob_p(a) == F->pow(a, F->p()));
        CHECK(F->frob_p(F->add(a, b)) == F->add(F->frob_p(a), F->frob_p(b)));
        CHECK(F->from_digits(F->digits(a)) == a);
    }
}

TEST_CASE("field axioms") {
    field_axioms(field(2, 4), 200);
    field_axioms(field(3, 4), 200);
    field_axioms(field(2, 1), 50);
    field_axioms(field(5, 3), 200);
    field_axioms(field(7, 2), 200);
}

TEST_CASE("primitive element generates") {
    for (auto F : {field(2, 4), field(3, 3), field(5, 2)}) {
        u64 g = F->primitive_element();
        std::vector<bool> seen(F->size(), false);
        u64 x = 1;
        for (u64 i = 0; i + 1 < F->size(); ++i) {
            CHECK_FALSE(seen[x]);
            seen[x] = true;
            x = F->mul(x, g);
        }
        CHECK(x == 1);
    }
}

TEST_CASE("tower embeddings round-trip") {
    for (auto tw : {make_tower(2, 1, 4, 2), make_tower(3, 1, 4, 1), make_tower(2, 2, 2, 1)}) {
        const FieldCtx& Fq = tw->ctx(Lv::Q);
        Rng rng(7);
        for (u64 t = 0; t < 50; ++t) {
            u64 a = rng.below(Fq.size()), b = rng.below(Fq.size());
            u64 ea = tw->embed(Lv::Q, Lv::QN, a), eb = tw->embed(Lv::Q, Lv::QN, b);
            // ring homomorphism
            CHECK(tw->embed(Lv::Q, Lv::QN, Fq.add(a, b)) == tw->ctx(Lv::QN).add(ea, eb));
            CHECK(tw->embed(Lv::Q, Lv::QN, Fq.mul(a, b)) == tw->ctx(Lv::QN).mul(ea, eb));
            CHECK(tw->retract(Lv::QN, Lv::Q, ea) == a);
        }
        // non-subfield elements do not retract
        if (tw->n() > 1) {
            u64 count = 0;
            for (u64 x = 0; x < tw->ctx(Lv::QN).size(); ++x)
                if (tw->retract(Lv::QN, Lv::Q, x)) ++count;
            CHECK(count == Fq.size());
        }
    }
}

TEST_CASE("frobenius by q") {
    auto tw = make_tower(2, 2, 3, 1);  // q = 4, GF(64)
    const FieldCtx& F = tw->ctx(Lv::QN);
    for (u64 x = 0; x < F.size(); ++x) {
        CHECK(tw->frob_q(Lv::QN, x, 1) == F.pow(x, 4));
        CHECK(tw->frob_q(Lv::QN, tw->frob_q(Lv::QN, x, 1), -1) == x);
        CHECK(tw->frob_q(Lv::QN, x, 3) == x);  // q^n = identity
    }
}

TEST_CASE("trace and norm against brute force") {
    auto tw = make_tower(3, 1, 4, 1);
    const FieldCtx& F = tw->ctx(Lv::QN);
    const FieldCtx& Fq = tw->ctx(Lv::Q);
    for (u64 x = 0; x < F.size(); ++x) {
        // independent oracle: sum / product of conjugates via pow
        u64 tr = 0, nm = 1, qi = 1;
        for (u64 i = 0; i < 4; ++i) {
            u64 c = F.pow(x, qi);
            tr = F.add(tr, c);
            nm = F.mul(nm, c);
            qi *= 3;
        }
        CHECK(tw->embed(Lv::Q, Lv::QN, tw->trace_rel(x)) == tr);
        CHECK(tw->embed(Lv::Q, Lv::QN, tw->norm_rel(x)) == nm);
    }
    // additivity / multiplicativity
    Rng rng(11);
    for (u64 t = 0; t < 100; ++t) {
        u64 a = rng.below(F.size()), b = rng.below(F.size());
        CHECK(tw->trace_rel(F.add(a, b)) == Fq.add(tw->trace_rel(a), tw->trace_rel(b)));
        CHECK(tw->norm_rel(F.mul(a, b)) == Fq.mul(tw->norm_rel(a), tw->norm_rel(b)));
    }
}

TEST_CASE("coordinates round-trip") {
    for (auto tw : {make_tower(2, 1, 4, 1), make_tower(2, 2, 2, 1), make_tower(3, 1, 4, 1)}) {
        const FieldCtx& F = tw->ctx(Lv::QN);
        for (u64 x = 0; x < F.size(); ++x) {
            auto c = tw->coords_q(Lv::QN, x);
            CHECK(c.size() == tw->n());
            CHECK(tw->from_coords_q(Lv::QN, c) == x);
        }
    }
}

TEST_CASE("fq_rank small oracle") {
    auto tw = make_tower(2, 1, 4, 1);
    const FieldCtx& F = tw->ctx(Lv::QN);
    // brute-force span size over GF(2): rank r iff span has 2^r elements
    auto oracle_rank = [&](const std::vector<u64>& v) {
        std::vector<u64> span{0};
        for (u64 e : v) {
            std::vector<u64> next = span;
            for (u64 s : span) {
                u64 x = F.add(s, e);
                bool fresh = true;
                for (u64 y : next)
                    if (y == x) fresh = false;
                if (fresh) next.push_back(x);
            }
            span = next;
        }
        u64 r = 0, sz = span.size();
        while (sz > 1) {
            sz /= 2;
            ++r;
        }
        return r;
    };
    Rng rng(3);
    for (u64 t = 0; t < 40; ++t) {
        std::vector<u64> v(1 + rng.below(4));
        for (auto& e : v) e = rng.below(F.size());
        CHECK(tw->fq_rank(Lv::QN, v) == oracle_rank(v));
    }
}

TEST_CASE("linear algebra basics") {
    auto F = field(3, 1);
    Mat M(*F, 3, 3);
    // singular: row3 = row1 + row2
    u64 vals[3][3] = {{1, 2, 0}, {0, 1, 1}, {1, 0, 1}};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) M.at(i, j) = vals[i][j];
    CHECK(det(M) == 0);
    CHECK(rank(M) == 2);
    auto ker = kernel_basis(M);
    REQUIRE(ker.size() == 1);
    // check M * ker[0] = 0
    for (int i = 0; i < 3; ++i) {
        u64 acc = 0;
        for (int j = 0; j < 3; ++j) acc = F->add(acc, F->mul(M.at(i, j), ker[0][j]));
        CHECK(acc == 0);
    }

    Mat A(*F, 2, 2);
    A.at(0, 0) = 1;
    A.at(0, 1) = 2;
    A.at(1, 0) = 2;
    A.at(1, 1) = 2;
    CHECK(det(A) == 1);  // 1*2 - 2*2 = -2 = 1 mod 3
    auto x = solve(A, {1, 0});
    REQUIRE(x.size() == 2);
    CHECK(F->add(F->mul(A.at(0, 0), x[0]), F->mul(A.at(0, 1), x[1])) == 1);
    CHECK(F->add(F->mul(A.at(1, 0), x[0]), F->mul(A.at(1, 1), x[1])) == 0);
}

TEST_CASE("rng determinism") {
    Rng a(123), b(123);
    for (int i = 0; i < 10; ++i) CHECK(a.next() == b.next());
}
