#include "rmc/families.hpp"

#include <numeric>
#include <set>

namespace rmc {

namespace {

// sum of (exponent mod n, coefficient) monomials as a LinPoly
LinPoly from_terms(const TowerRef& tw, std::vector<std::pair<u64, u64>> terms) {
    u64 N = tw->rel_deg(Lv::QN);
    const FieldCtx& F = tw->ctx(Lv::QN);
    std::vector<u64> c(N, 0);
    for (auto [e, a] : terms) c[e % N] = F.add(c[e % N], a);
    return LinPoly(tw, Lv::QN, std::move(c));
}

Condition gcd_cond(u64 s, u64 n) {
    return {"gcd(s,n)=1", std::gcd(s, n) == 1};
}

Condition q_odd_cond(u64 q) { return {"q odd", q % 2 == 1}; }

// delta^e in the big field, with e possibly given as 1 - q^j via the
// multiplicative order
u64 delta_pow(const FieldCtx& F, u64 delta, u64 num, u64 sub) {
    u64 ord = F.size() - 1;
    u64 e = (num % ord + ord - sub % ord) % ord;
    return F.pow(delta, e);
}

void require_n(const TowerRef& tw, u64 n, const char* row) {
    if (tw->n() != n) throw invalid_error(std::string(row) + ": tower degree n mismatch");
}

}  // namespace

FamilyCode gabidulin(const TowerRef& tw, u64 k, u64 s) {
    u64 n = tw->n();
    if (k < 1 || k > n) throw invalid_error("gabidulin: need 1 <= k <= n");
    std::set<u64> seen;
    std::vector<LinPoly> basis;
    for (u64 i = 0; i < k; ++i) {
        u64 e = s * i % n;
        if (!seen.insert(e).second) throw invalid_error("gabidulin: repeated exponent s*i mod n");
        basis.push_back(LinPoly::monomial(tw, Lv::QN, e));
    }
    return {RankMetricCode(std::move(basis)), {gcd_cond(s, n)}};
}

FamilyCode twisted_gabidulin(const TowerRef& tw, u64 k, u64 s, u64 delta) {
    u64 n = tw->n();
    const FieldCtx& F = tw->ctx(Lv::QN);
    if (delta == 0) throw invalid_error("twisted_gabidulin: delta must be nonzero");
    if (k < 1 || k > n) throw invalid_error("twisted_gabidulin: need 1 <= k <= n");
    std::set<u64> seen;
    std::vector<LinPoly> basis;
    for (u64 i = 1; i < k; ++i) {
        u64 e = s * i % n;
        if (!seen.insert(e).second) throw invalid_error("twisted_gabidulin: repeated exponent");
        basis.push_back(LinPoly::monomial(tw, Lv::QN, e));
    }
    u64 ek = s * k % n;
    if (ek == 0) throw invalid_error("twisted_gabidulin: twist exponent collapses to 0");
    basis.push_back(from_terms(tw, {{0, 1}, {ek, delta}}));

    const FieldCtx& Fq = tw->ctx(Lv::Q);
    u64 norm = tw->norm_rel(delta);
    u64 sign = (n * k) % 2 == 0 ? 1 : Fq.neg(1);
    std::vector<Condition> conds{gcd_cond(s, n),
                                 {"N_{q^n/q}(delta) != (-1)^{nk}", norm != sign}};
    (void)F;
    return {RankMetricCode(std::move(basis)), std::move(conds)};
}

FamilyPoly pseudoregulus(const TowerRef& tw, u64 s) {
    u64 n = tw->n();
    if (s >= n) throw invalid_error("pseudoregulus: s out of range");
    return {LinPoly::monomial(tw, Lv::QN, s), 0, {gcd_cond(s, n)}};
}

FamilyPoly lp_poly(const TowerRef& tw, u64 s, u64 delta) {
    u64 n = tw->n();
    if (s == 0 || s >= n) throw invalid_error("lp_poly: s out of range");
    if (delta == 0) throw invalid_error("lp_poly: delta must be nonzero");
    if (2 * s % n == 0) throw invalid_error("lp_poly: exponent 2s collapses to 0");
    LinPoly f = from_terms(tw, {{0, 1}, {2 * s, delta}});
    u64 norm = tw->norm_rel(delta);
    return {std::move(f), s, {gcd_cond(s, n), {"N_{q^n/q}(delta) != 1", norm != 1}}};
}

FamilyCode table1_row(u64 row_id, const TowerRef& tw, u64 s, u64 delta) {
    u64 n = tw->n(), q = tw->q();
    const FieldCtx& F = tw->ctx(Lv::QN);
    auto mono = [&](u64 e) { return LinPoly::monomial(tw, Lv::QN, e % n); };
    u64 neg1 = F.neg(1);

    switch (row_id) {
        case 3:
        case 4: {
            if (n % 2 != 0) throw invalid_error("table1_row: rows 3-4 need n = 2t");
            u64 t = n / 2;
            if (t < 3) throw invalid_error("table1_row: rows 3-4 need t >= 3 (distinct exponents)");
            if (delta == 0) throw invalid_error("table1_row: delta must be nonzero");
            u64 qt = 1;
            for (u64 i = 0; i < t; ++i) qt *= q;
            u64 c1 = F.pow(delta, qt + 1);                       // delta^{q^t+1}
            u64 c2 = delta_pow(F, delta, 1, qt * qt / q);        // delta^{1-q^{2t-1}}
            std::vector<Condition> conds{q_odd_cond(q),
                                         {"N_{q^{2t}/q^t}(delta) = -1", c1 == neg1},
                                         gcd_cond(s, n)};
            if (row_id == 3) {
                std::vector<LinPoly> basis{
                    mono(0),
                    from_terms(tw, {{s, 1}, {s * (t - 1), 1}, {s * (t + 1), c1}, {s * (2 * t - 1), c2}})};
                return {RankMetricCode(std::move(basis)), std::move(conds)};
            }
            std::set<u64> excl{0, 1, t - 1, t + 1, 2 * t - 1};
            std::vector<LinPoly> basis;
            for (u64 i = 0; i < 2 * t; ++i)
                if (!excl.count(i)) basis.push_back(mono(s * i));
            basis.push_back(from_terms(tw, {{s, 1}, {s * (t - 1), neg1}}));
            basis.push_back(from_terms(tw, {{s, c1}, {s * (t + 1), neg1}}));
            basis.push_back(from_terms(tw, {{s, c2}, {s * (2 * t - 1), neg1}}));
            return {RankMetricCode(std::move(basis)), std::move(conds)};
        }
        case 5: {
            require_n(tw, 6, "row 5");
            if (delta == 0) throw invalid_error("table1_row: delta must be nonzero");
            std::vector<LinPoly> basis{mono(0), from_terms(tw, {{1, 1}, {4, delta}})};
            return {RankMetricCode(std::move(basis)),
                    {{"q > 4", q > 4}, {"certain choices of delta", true, false}}};
        }
        case 6: {
            require_n(tw, 6, "row 6");
            if (delta == 0) throw invalid_error("table1_row: delta must be nonzero");
            u64 q5 = 1;
            for (u64 i = 0; i < 5; ++i) q5 *= q;
            u64 c = F.neg(F.pow(delta, q5));  // -delta^{q^5}
            std::vector<LinPoly> basis{mono(1), mono(2), mono(4), from_terms(tw, {{0, 1}, {3, c}})};
            return {RankMetricCode(std::move(basis)),
                    {{"q > 4", q > 4}, {"certain choices of delta", true, false}}};
        }
        case 7: {
            require_n(tw, 6, "row 7");
            std::vector<LinPoly> basis{mono(0), from_terms(tw, {{1, 1}, {3, 1}, {5, delta}})};
            return {RankMetricCode(std::move(basis)),
                    {q_odd_cond(q), {"delta^2 + delta = 1", F.add(F.mul(delta, delta), delta) == 1}}};
        }
        case 8: {
            require_n(tw, 6, "row 8");
            std::vector<LinPoly> basis{mono(1), mono(3), from_terms(tw, {{0, 1}, {2, neg1}}),
                                       from_terms(tw, {{4, 1}, {0, F.neg(delta)}})};
            return {RankMetricCode(std::move(basis)),
                    {q_odd_cond(q), {"delta^2 + delta = 1", F.add(F.mul(delta, delta), delta) == 1}}};
        }
        case 9: {
            require_n(tw, 7, "row 9");
            std::vector<LinPoly> basis{mono(0), mono(s), mono(3 * s)};
            return {RankMetricCode(std::move(basis)), {q_odd_cond(q), gcd_cond(s, 7)}};
        }
        case 10: {
            require_n(tw, 7, "row 10");
            std::vector<LinPoly> basis{mono(0), mono(2 * s), mono(3 * s), mono(4 * s)};
            return {RankMetricCode(std::move(basis)), {q_odd_cond(q), gcd_cond(s, 7)}};
        }
        case 11: {
            require_n(tw, 8, "row 11");
            std::vector<LinPoly> basis{mono(0), mono(s), mono(3 * s)};
            return {RankMetricCode(std::move(basis)),
                    {{"q = 1 mod 3", q % 3 == 1}, gcd_cond(s, 8)}};
        }
        case 12: {
            require_n(tw, 8, "row 12");
            std::vector<LinPoly> basis{mono(0), mono(2 * s), mono(3 * s), mono(4 * s), mono(5 * s)};
            return {RankMetricCode(std::move(basis)),
                    {{"q = 1 mod 3", q % 3 == 1}, gcd_cond(s, 8)}};
        }
        case 13: {
            require_n(tw, 8, "row 13");
            std::vector<LinPoly> basis{mono(0), from_terms(tw, {{1, 1}, {5, delta}})};
            return {RankMetricCode(std::move(basis)),
                    {q_odd_cond(q), {"delta^2 = -1", F.mul(delta, delta) == neg1}}};
        }
        case 14: {
            require_n(tw, 8, "row 14");
            std::vector<LinPoly> basis{mono(1), mono(2), mono(3), mono(5), mono(6),
                                       from_terms(tw, {{0, 1}, {4, F.neg(delta)}})};
            return {RankMetricCode(std::move(basis)),
                    {q_odd_cond(q), {"delta^2 = -1", F.mul(delta, delta) == neg1}}};
        }
        default:
            throw invalid_error("table1_row: row id must be in 3..14");
    }
}

std::optional<u64> find_delta(const TowerRef& tw, Lv lv, const std::function<bool(u64)>& pred) {
    u64 S = tw->ctx(lv).size();
    for (u64 d = 1; d < S; ++d)
        if (pred(d)) return d;
    return std::nullopt;
}

std::optional<u64> find_delta_rel_norm_minus1(const TowerRef& tw) {
    if (tw->n() % 2 != 0) throw invalid_error("find_delta_rel_norm_minus1: n must be even");
    const FieldCtx& F = tw->ctx(Lv::QN);
    u64 qt = 1;
    for (u64 i = 0; i < tw->n() / 2; ++i) qt *= tw->q();
    u64 neg1 = F.neg(1);
    return find_delta(tw, Lv::QN, [&](u64 d) { return F.pow(d, qt + 1) == neg1; });
}

}  // namespace rmc
