#include "rmc/suite.hpp"

#include "rmc/families.hpp"
#include "rmc/moore.hpp"
#include "rmc/variety.hpp"

namespace rmc::suite {

using serial::json;

namespace {

struct Case {
    json& cases;
    bool& pass;
    void record(const std::string& name, bool ok, json detail = nullptr) {
        json c{{"case", name}, {"ok", ok}};
        if (!detail.is_null()) c["detail"] = std::move(detail);
        cases.push_back(std::move(c));
        if (!ok) pass = false;
    }
};

json suite_paper_smoke(const Guard& g) {
    json cases = json::array();
    bool pass = true;
    Case rec{cases, pass};

    TowerRef t24 = make_tower(2, 1, 4, 1);

    // the (x, x^{q^2}) counterexample at q = 2, n = 4
    MoorePolySet bad({LinPoly::monomial(t24, Lv::QN, 0), LinPoly::monomial(t24, Lv::QN, 2)});
    auto oracle = is_moore_oracle(bad, g);
    rec.record("counterexample-oracle-false", !oracle.verdict && oracle.witness.has_value(),
               serial::moore_report_to_json(oracle));
    rec.record("counterexample-witness-valid",
               oracle.witness && verify_moore_witness(bad, *oracle.witness));

    // Gabidulin at q = 2, n = 4, k = 2 is MRD
    auto gab = gabidulin(t24, 2, 1);
    auto mrd = is_mrd(gab.code, g);
    rec.record("gabidulin-q2n4k2-mrd", mrd.verdict && mrd.min_distance == 3,
               serial::mrd_report_to_json(mrd));

    // W identity for (x, x^{q^2}) at q = 2
    MvPoly W = build_W(bad, g);
    MvPoly expect(t24->ctx_ref(Lv::QN), 2);
    expect.add_term({2, 0}, 1);
    expect.add_term({1, 1}, 1);
    expect.add_term({0, 2}, 1);
    rec.record("quotient-identity-q2", W == expect, serial::mvpoly_to_json(W));

    // twisted Gabidulin at q = 3, n = 4 with N(delta) = -1
    TowerRef t34 = make_tower(3, 1, 4, 1);
    const FieldCtx& F81 = t34->ctx(Lv::QN);
    u64 delta = F81.generator();
    auto tg = twisted_gabidulin(t34, 2, 1, delta);
    rec.record("twisted-q3n4-valid", tg.all_verifiable_hold(), serial::validity_to_json(tg.validity));
    rec.record("twisted-q3n4-mrd", is_mrd(tg.code, g).verdict);

    return json{{"suite", "paper-smoke"}, {"pass", pass}, {"cases", cases}};
}

json suite_oracle_equivalence(const Guard& g) {
    json cases = json::array();
    bool pass = true;
    Case rec{cases, pass};

    TowerRef tw = make_tower(2, 1, 4, 1);
    auto check = [&](const std::string& name, const MoorePolySet& f) {
        auto o = is_moore_oracle(f, g);
        auto m = is_moore(f, g);
        MvPoly W = build_W(f, g);
        bool variety_true = points_off_V(W, f, g).empty();
        rec.record(name, o.verdict == m.verdict && m.verdict == variety_true,
                   json{{"oracle", o.verdict}, {"mrd", m.verdict}, {"variety", variety_true}});
    };

    for (u64 i = 0; i < 4; ++i)
        for (u64 j = i + 1; j < 4; ++j)
            check("monomials-" + std::to_string(i) + "-" + std::to_string(j),
                  MoorePolySet({LinPoly::monomial(tw, Lv::QN, i), LinPoly::monomial(tw, Lv::QN, j)}));

    for (u64 seed = 1; seed <= 10; ++seed) {
        RankMetricCode C = random_code(tw, Lv::QN, 2, seed);
        check("random-seed-" + std::to_string(seed), MoorePolySet(C.basis()));
    }

    return json{{"suite", "oracle-equivalence"}, {"pass", pass}, {"cases", cases}};
}

json suite_table1(const Guard& g) {
    json cases = json::array();
    bool pass = true;
    Case rec{cases, pass};

    struct RowSpec {
        u64 row;
        u64 p, n, s;
        bool needs_delta;
        u64 delta_kind;  // 0: none, 1: d^{q+1} = -1, 2: d^2+d=1, 3: d^2=-1, 4: search
    };
    const std::vector<RowSpec> rows{
        {3, 3, 6, 1, true, 1},  {4, 3, 6, 1, true, 1},  {5, 5, 6, 1, true, 4},
        {6, 5, 6, 1, true, 4},  {7, 3, 6, 1, true, 2},  {8, 3, 6, 1, true, 2},
        {9, 3, 7, 1, false, 0}, {10, 3, 7, 1, false, 0}, {11, 7, 8, 1, false, 0},
        {12, 7, 8, 1, false, 0}, {13, 3, 8, 1, true, 3}, {14, 3, 8, 1, true, 3},
    };

    for (const auto& r : rows) {
        std::string name = "row-" + std::to_string(r.row);
        try {
            TowerRef tw = make_tower(r.p, 1, r.n, 1);
            const FieldCtx& F = tw->ctx(Lv::QN);
            u64 delta = 0;
            if (r.needs_delta) {
                std::optional<u64> d;
                switch (r.delta_kind) {
                    case 1:
                        // delta in GF(q^2) with delta^{q+1} = -1; for odd t this
                        // implies delta^{q^t+1} = -1 and yields a scattered row
                        d = find_delta(tw, Lv::QN,
                                       [&](u64 x) { return F.pow(x, r.p + 1) == F.neg(1); });
                        break;
                    case 2:
                        d = find_delta(tw, Lv::QN,
                                       [&](u64 x) { return F.add(F.mul(x, x), x) == 1; });
                        break;
                    case 3:
                        d = find_delta(tw, Lv::QN,
                                       [&](u64 x) { return F.mul(x, x) == F.neg(1); });
                        break;
                    default:
                        // "certain choices of delta": exhibit one by search
                        d = find_delta(tw, Lv::QN, [&](u64 x) {
                            try {
                                return is_mrd(table1_row(r.row, tw, r.s, x).code, g).verdict;
                            } catch (const guard_error&) {
                                return false;
                            }
                        });
                        break;
                }
                if (!d) {
                    rec.record(name, false, "no delta satisfies the row condition");
                    continue;
                }
                delta = *d;
            }
            auto fam = table1_row(r.row, tw, r.s, delta);
            json detail{{"validity", serial::validity_to_json(fam.validity)}, {"delta", delta}};
            try {
                auto mrd = is_mrd(fam.code, g);
                detail["mrd"] = serial::mrd_report_to_json(mrd);
                // when every verifiable condition holds the row must be MRD
                rec.record(name, !fam.all_verifiable_hold() || mrd.verdict, detail);
            } catch (const guard_error& e) {
                detail["mrd"] = "skipped (guard)";
                rec.record(name, true, detail);
            }
        } catch (const std::exception& e) {
            rec.record(name, false, e.what());
        }
    }

    return json{{"suite", "table1"}, {"pass", pass}, {"cases", cases}};
}

json suite_duality(const Guard& g) {
    json cases = json::array();
    bool pass = true;
    Case rec{cases, pass};

    TowerRef tw = make_tower(2, 1, 4, 1);
    for (u64 seed = 1; seed <= 10; ++seed) {
        u64 k = seed % 3 + 1;
        RankMetricCode C = random_code(tw, Lv::QN, k, 1000 + seed);
        auto D = delsarte_dual(C);
        bool ok = true;
        std::string why = "ok";
        if (D) {
            auto DD = delsarte_dual(*D);
            if (!DD || DD->k() != C.k()) {
                ok = false;
                why = "double dual dimension mismatch";
            } else {
                for (const auto& f : C.basis())
                    if (!DD->represent(f)) {
                        ok = false;
                        why = "double dual span mismatch";
                    }
            }
            auto mrd = is_mrd(C, g);
            if (ok && mrd.verdict && mrd.min_distance > 1) {
                auto dm = is_mrd(*D, g);
                if (!dm.verdict) {
                    ok = false;
                    why = "dual of MRD not MRD";
                }
            }
        } else if (C.k() != C.n_rel()) {
            ok = false;
            why = "unexpected zero dual";
        }
        rec.record("seed-" + std::to_string(1000 + seed) + "-k" + std::to_string(k), ok, why);
    }

    return json{{"suite", "duality"}, {"pass", pass}, {"cases", cases}};
}

}  // namespace

std::vector<std::string> suite_names() {
    return {"paper-smoke", "oracle-equivalence", "table1", "duality"};
}

serial::json run_suite(const std::string& name, const Guard& g) {
    if (name == "paper-smoke") return suite_paper_smoke(g);
    if (name == "oracle-equivalence") return suite_oracle_equivalence(g);
    if (name == "table1") return suite_table1(g);
    if (name == "duality") return suite_duality(g);
    throw invalid_error("unknown suite: " + name);
}

}  // namespace rmc::suite
