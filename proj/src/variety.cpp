#include "rmc/variety.hpp"

#include <map>

namespace rmc {

namespace {

u64 sat_mul(u64 a, u64 b) {
    if (a == 0 || b == 0) return 0;
    return a > UINT64_MAX / b ? UINT64_MAX : a * b;
}

u64 upow(u64 b, u64 e) {
    u64 r = 1;
    while (e--) r = sat_mul(r, b);
    return r;
}

// Determinant of the symbolic Moore matrix by Laplace expansion along rows,
// memoized over the active column mask.
MvPoly det_minors(const std::vector<std::vector<MvPoly>>& E, u64 k, u64 mask,
                  std::map<u64, MvPoly>& memo, const CtxRef& ctx) {
    auto it = memo.find(mask);
    if (it != memo.end()) return it->second;
    u64 r = k - static_cast<u64>(__builtin_popcountll(mask));
    MvPoly acc(ctx, k);
    u64 sign_flip = 0;
    for (u64 c = 0; c < k; ++c) {
        if (!(mask >> c & 1)) continue;
        MvPoly sub = (r + 1 == k) ? MvPoly::constant(ctx, k, 1)
                                  : det_minors(E, k, mask & ~(1ull << c), memo, ctx);
        MvPoly term = E[r][c].mul(sub);
        acc = (sign_flip & 1) ? acc.sub(term) : acc.add(term);
        ++sign_flip;
    }
    memo.emplace(mask, acc);
    return acc;
}

}  // namespace

MvPoly build_F(const MoorePolySet& f, const Guard& g) {
    const TowerRef& tw = f.tower();
    Lv lv = f.level();
    const CtxRef& ctx = tw->ctx_ref(lv);
    u64 k = f.k(), N = tw->rel_deg(lv), q = tw->q();

    u64 max_terms = 0;
    for (const auto& fp : f.polys) {
        u64 t = 0;
        for (u64 c : fp.coeffs())
            if (c) ++t;
        max_terms = std::max(max_terms, t);
    }
    u64 est = 1;
    for (u64 i = 1; i <= k; ++i) est = sat_mul(est, i * max_terms);
    g.require(est, "build_F");

    std::vector<std::vector<MvPoly>> E(k, std::vector<MvPoly>(k, MvPoly(ctx, k)));
    for (u64 i = 0; i < k; ++i)
        for (u64 j = 0; j < k; ++j)
            for (u64 l = 0; l < N; ++l) {
                u64 a = f.polys[j].coeffs()[l];
                if (!a) continue;
                std::vector<u64> e(k, 0);
                e[i] = upow(q, l);
                E[i][j].add_term(std::move(e), a);
            }
    std::map<u64, MvPoly> memo;
    return det_minors(E, k, (1ull << k) - 1, memo, ctx);
}

std::vector<std::vector<u64>> projective_points_fq(const TowerRef& tw, u64 k) {
    u64 q = tw->q();
    std::vector<std::vector<u64>> pts;
    for (u64 j = 0; j < k; ++j) {  // last nonzero coordinate = position j, value 1
        u64 block = upow(q, j);
        for (u64 idx = 0; idx < block; ++idx) {
            std::vector<u64> a(k, 0);
            u64 t = idx;
            for (u64 pos = 0; pos < j; ++pos) {
                a[pos] = t % q;
                t /= q;
            }
            a[j] = 1;
            pts.push_back(std::move(a));
        }
    }
    return pts;
}

MvPoly build_V(const TowerRef& tw, Lv lv, u64 k, const Guard& g) {
    u64 q = tw->q();
    u64 count = 0;
    for (u64 j = 0; j < k; ++j) count += upow(q, j);
    g.require(count, "build_V");
    const CtxRef& ctx = tw->ctx_ref(lv);
    MvPoly V = MvPoly::constant(ctx, k, 1);
    for (const auto& a : projective_points_fq(tw, k)) {
        MvPoly L(ctx, k);
        for (u64 j = 0; j < k; ++j) {
            if (!a[j]) continue;
            std::vector<u64> e(k, 0);
            e[j] = 1;
            L.add_term(std::move(e), tw->embed(Lv::Q, lv, a[j]));
        }
        V = V.mul(L);
    }
    return V;
}

MvPoly build_W(const MoorePolySet& f, const Guard& g) {
    const TowerRef& tw = f.tower();
    Lv lv = f.level();
    u64 k = f.k();
    MvPoly W = build_F(f, g);
    for (const auto& a : projective_points_fq(tw, k)) {
        std::vector<u64> coeffs(k);
        for (u64 j = 0; j < k; ++j) coeffs[j] = tw->embed(Lv::Q, lv, a[j]);
        W = divide_by_linear_form(W, coeffs);
    }
    return W;
}

std::vector<std::vector<u64>> points_off_V(const MvPoly& W, const MoorePolySet& f, const Guard& g) {
    const TowerRef& tw = f.tower();
    Lv lv = f.level();
    u64 k = f.k(), S = tw->ctx(lv).size();
    u64 count = 1;
    for (u64 i = 0; i < k; ++i) count = sat_mul(count, S);
    g.require(count, "points_off_V");
    if (W.arity() != k) throw invalid_error("points_off_V: arity mismatch");

    std::vector<std::vector<u64>> out;
    std::vector<u64> P(k);
    for (u64 idx = 0; idx < count; ++idx) {
        u64 t = idx;
        for (u64 pos = k; pos-- > 0;) {
            P[pos] = t % S;
            t /= S;
        }
        if (W.evaluate(P) == 0 && tw->fq_rank(lv, P) == k) out.push_back(P);
    }
    return out;
}

MvPoly homogenize_f(const LinPoly& f) {
    if (f.is_zero()) throw invalid_error("homogenize_f: zero polynomial");
    const TowerRef& tw = f.tower();
    u64 q = tw->q();
    auto [lo, M] = f.qdeg_bounds();
    (void)lo;
    MvPoly h(tw->ctx_ref(f.level()), 2);
    u64 qM = upow(q, M);
    for (u64 j = 0; j < f.coeffs().size(); ++j) {
        u64 a = f.coeffs()[j];
        if (!a) continue;
        u64 qj = upow(q, j);
        h.add_term({qj, qM - qj}, a);
    }
    return h;
}

MvPoly specialize_curve(const MoorePolySet& f, std::span<const u64> lambdas, const Guard& g) {
    u64 k = f.k();
    if (k < 2) throw invalid_error("specialize_curve: needs k >= 2");
    if (lambdas.size() != k - 2) throw invalid_error("specialize_curve: expected k-2 lambdas");
    if (k > 2 && f.tower()->fq_rank(f.level(), lambdas) != k - 2)
        throw invalid_error("specialize_curve: lambdas are F_q-linearly dependent");
    MvPoly H = build_F(f, g);
    for (u64 i = k; i-- > 2;) H = H.substitute(i, lambdas[i - 2]);
    return H;
}

LowestFormReport translate_lowest_form(const MvPoly& H, u64 alpha, u64 beta) {
    if (H.is_zero()) throw invalid_error("translate_lowest_form: zero polynomial");
    if (H.arity() != 2) throw invalid_error("translate_lowest_form: expected a bivariate polynomial");
    std::vector<u64> shift{alpha, beta};
    MvPoly T = H.translate(shift);
    u64 m = T.lowest_degree();
    return {m, T.homogeneous_part(m), T.homogeneous_part(m + 1)};
}

std::vector<std::pair<u64, u64>> points_at_infinity(const MvPoly& H) {
    if (H.is_zero()) throw invalid_error("points_at_infinity: zero polynomial");
    if (H.arity() != 2) throw invalid_error("points_at_infinity: expected a bivariate polynomial");
    MvPoly top = H.homogeneous_part(H.degree());
    const FieldCtx& F = H.fld();
    std::vector<std::pair<u64, u64>> out;
    std::vector<u64> P{0, 1};
    if (top.evaluate(P) == 0) out.emplace_back(0, 1);
    for (u64 gamma = 0; gamma < F.size(); ++gamma) {
        P[0] = 1;
        P[1] = gamma;
        if (top.evaluate(P) == 0) out.emplace_back(1, gamma);
    }
    return out;
}

std::vector<std::pair<u64, u64>> singular_points_affine(const MvPoly& H, const Guard& g) {
    if (H.arity() != 2) throw invalid_error("singular_points_affine: expected a bivariate polynomial");
    const FieldCtx& F = H.fld();
    u64 S = F.size();
    g.require(sat_mul(S, S), "singular_points_affine");
    MvPoly Hx = H.derivative(0), Hy = H.derivative(1);
    std::vector<std::pair<u64, u64>> out;
    std::vector<u64> P(2);
    for (u64 x = 0; x < S; ++x)
        for (u64 y = 0; y < S; ++y) {
            P[0] = x;
            P[1] = y;
            if (H.evaluate(P) == 0 && Hx.evaluate(P) == 0 && Hy.evaluate(P) == 0) out.emplace_back(x, y);
        }
    return out;
}

}  // namespace rmc
