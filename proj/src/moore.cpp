#include "rmc/moore.hpp"

#include <algorithm>
#include <set>

namespace rmc {

namespace {

u64 sat_mul(u64 a, u64 b) {
    if (a == 0 || b == 0) return 0;
    return a > UINT64_MAX / b ? UINT64_MAX : a * b;
}

std::optional<u64> monomial_exponent(const LinPoly& f) {
    std::optional<u64> e;
    for (u64 i = 0; i < f.coeffs().size(); ++i)
        if (f.coeffs()[i]) {
            if (e) return std::nullopt;
            if (f.coeffs()[i] != 1) return std::nullopt;
            e = i;
        }
    return e;  // nullopt also for the zero polynomial
}

}  // namespace

MoorePolySet::MoorePolySet(std::vector<LinPoly> fs) : polys(std::move(fs)) {
    if (polys.empty()) throw invalid_error("MoorePolySet: empty tuple");
    RankMetricCode check(polys);  // validates contexts and independence

    const u64 N = tower()->rel_deg(level());
    u64 kk = polys.size();
    std::vector<u64> M(kk), m(kk);
    bool monic = true;
    for (u64 i = 0; i < kk; ++i) {
        auto [lo, hi] = polys[i].qdeg_bounds();
        m[i] = lo;
        M[i] = hi;
        if (polys[i].coeffs()[hi] != 1) monic = false;
    }
    assumption_flags[0] = monic;
    assumption_flags[1] = std::set<u64>(M.begin(), M.end()).size() == kk;
    assumption_flags[2] = std::set<u64>(m.begin(), m.end()).size() == kk &&
                          std::any_of(m.begin(), m.end(), [](u64 x) { return x == 0; });
    auto e1 = monomial_exponent(polys[0]);
    if (e1) {
        index_t = *e1;
        assumption_flags[3] = true;
    }
    bool mono_ok = true;
    for (u64 i = 0; i < kk; ++i)
        if (auto e = monomial_exponent(polys[i])) {
            if (!index_t || *e < *index_t) mono_ok = false;
        }
    assumption_flags[4] = mono_ok;
    (void)N;
}

Mat moore_matrix(const MoorePolySet& f, std::span<const u64> A) {
    u64 kk = f.k();
    if (A.size() != kk) throw invalid_error("moore_matrix: wrong tuple arity");
    const FieldCtx& F = f.polys[0].fld();
    for (u64 a : A)
        if (a >= F.size()) throw invalid_error("moore_matrix: element out of range");
    Mat M(F, kk, kk);
    for (u64 i = 0; i < kk; ++i)
        for (u64 j = 0; j < kk; ++j) M.at(i, j) = f.polys[j].evaluate(A[i]);
    return M;
}

bool verify_moore_witness(const MoorePolySet& f, std::span<const u64> A) {
    if (det(moore_matrix(f, A)) != 0) return false;
    return f.tower()->fq_rank(f.level(), A) == f.k();
}

MooreReport is_moore_oracle(const MoorePolySet& f, const Guard& g) {
    const FieldCtx& F = f.polys[0].fld();
    u64 kk = f.k(), S = F.size();
    u64 count = 1;
    for (u64 i = 0; i < kk; ++i) count = sat_mul(count, S - 1);
    g.require(count, "is_moore_oracle");

    MooreReport rep;
    rep.method = MooreReport::Method::Oracle;
    std::vector<u64> A(kk);
    for (u64 idx = 0; idx < count; ++idx) {
        u64 t = idx;
        for (u64 pos = kk; pos-- > 0;) {  // alpha_1 most significant: lex order
            A[pos] = t % (S - 1) + 1;
            t /= (S - 1);
        }
        if (det(moore_matrix(f, A)) == 0 && f.tower()->fq_rank(f.level(), A) == kk) {
            rep.verdict = false;
            rep.witness = A;
            return rep;
        }
    }
    rep.verdict = true;
    return rep;
}

MooreReport is_moore(const MoorePolySet& f, const Guard& g) {
    RankMetricCode C = f.span();
    MrdReport mr = is_mrd(C, g);
    MooreReport rep;
    rep.method = MooreReport::Method::Mrd;
    rep.verdict = mr.verdict;
    if (!mr.verdict) {
        // kernel of the violating codeword has dim >= k; its first k basis
        // vectors give an F_q-independent singular evaluation tuple
        LinPoly w = C.codeword(*mr.witness);
        auto ker = kernel_basis(w.as_matrix());
        if (ker.size() < f.k()) throw internal_error("is_moore: witness kernel too small");
        std::vector<u64> A(f.k());
        for (u64 i = 0; i < f.k(); ++i) A[i] = f.tower()->from_coords_q(f.level(), ker[i]);
        if (!verify_moore_witness(f, A)) throw internal_error("is_moore: converted witness fails re-check");
        rep.witness = std::move(A);
    }
    return rep;
}

u64 index_of(const RankMetricCode& C) {
    u64 N = C.n_rel();
    for (u64 t = 0; t < N; ++t)
        if (C.represent(LinPoly::monomial(C.tower(), C.level(), t))) return t;
    throw no_monomial_error();
}

MoorePolySet normalize(const RankMetricCode& C) {
    const FieldCtx& F = C.fld();
    u64 N = C.n_rel(), kk = C.k();

    std::vector<std::vector<u64>> rows(kk);
    for (u64 i = 0; i < kk; ++i) rows[i] = C.basis()[i].coeffs();

    // reduced echelon form pivoting from the highest q-degree down: rows end up
    // monic with distinct, reduced top degrees
    u64 r = 0;
    std::vector<u64> pivot_col;
    for (u64 col = N; col-- > 0 && r < kk;) {
        u64 pr = r;
        while (pr < kk && rows[pr][col] == 0) ++pr;
        if (pr == kk) continue;
        std::swap(rows[pr], rows[r]);
        u64 d = F.inv(rows[r][col]);
        for (u64 j = 0; j < N; ++j) rows[r][j] = F.mul(d, rows[r][j]);
        for (u64 i = 0; i < kk; ++i) {
            if (i == r || rows[i][col] == 0) continue;
            u64 c = rows[i][col];
            for (u64 j = 0; j < N; ++j) rows[i][j] = F.sub(rows[i][j], F.mul(c, rows[r][j]));
        }
        pivot_col.push_back(col);
        ++r;
    }
    if (r != kk) throw internal_error("normalize: rank drop on an independent basis");

    auto mindeg = [&](const std::vector<u64>& v) {
        for (u64 j = 0; j < N; ++j)
            if (v[j]) return j;
        return N;
    };
    auto topdeg = [&](const std::vector<u64>& v) {
        for (u64 j = N; j-- > 0;)
            if (v[j]) return j;
        return N;
    };

    // eliminate min-degree collisions by modifying the larger-top-degree row;
    // the sum of min-degrees strictly increases, so this terminates
    for (;;) {
        bool changed = false;
        for (u64 i = 0; i < kk && !changed; ++i)
            for (u64 j = 0; j < kk && !changed; ++j) {
                if (i == j) continue;
                u64 mi = mindeg(rows[i]), mj = mindeg(rows[j]);
                if (mi != mj) continue;
                u64 a = i, b = j;  // modify the larger-M row a using b
                if (topdeg(rows[a]) < topdeg(rows[b])) std::swap(a, b);
                u64 c = F.mul(rows[a][mi], F.inv(rows[b][mi]));
                for (u64 l = 0; l < N; ++l) rows[a][l] = F.sub(rows[a][l], F.mul(c, rows[b][l]));
                changed = true;
            }
        if (!changed) break;
    }

    // when the index exists, the echelon basis necessarily contains x^{q^t};
    // move it to the front
    std::optional<u64> t;
    try {
        t = index_of(C);
    } catch (const no_monomial_error&) {
    }
    if (t) {
        std::vector<u64> mono(N, 0);
        mono[*t] = 1;
        auto it = std::find(rows.begin(), rows.end(), mono);
        if (it != rows.end()) std::rotate(rows.begin(), it, it + 1);
    }

    std::vector<LinPoly> polys;
    polys.reserve(kk);
    for (auto& v : rows) polys.emplace_back(C.tower(), C.level(), std::move(v));
    MoorePolySet out(std::move(polys));

    // span must be unchanged: every output poly is a combination of the input
    for (const auto& fpoly : out.polys)
        if (!C.represent(fpoly)) throw internal_error("normalize: span changed");
    return out;
}

bool is_ap(std::vector<std::int64_t> exponents, bool allow_permutation) {
    if (exponents.empty()) throw invalid_error("is_ap: empty list");
    std::set<std::int64_t> uniq(exponents.begin(), exponents.end());
    if (uniq.size() != exponents.size()) throw invalid_error("is_ap: duplicate exponents");
    if (exponents.size() <= 2) return true;
    if (allow_permutation) std::sort(exponents.begin(), exponents.end());
    std::int64_t d = exponents[1] - exponents[0];
    for (std::size_t i = 2; i < exponents.size(); ++i)
        if (exponents[i] - exponents[i - 1] != d) return false;
    return true;
}

MooreProbeResult exceptional_moore_probe(const MoorePolySet& f, u64 m_max, const Guard& g) {
    MooreProbeResult res;
    for (u64 m = 1; m <= m_max; ++m) {
        MooreProbeEntry entry;
        entry.m = m;
        try {
            std::vector<LinPoly> lifted;
            lifted.reserve(f.k());
            for (const auto& fp : f.polys) lifted.push_back(lift(fp, m));
            entry.report = is_moore(MoorePolySet(std::move(lifted)), g);
        } catch (const guard_error&) {
            entry.skipped = true;
            res.truncated = true;
        }
        res.entries.push_back(std::move(entry));
    }
    return res;
}

}  // namespace rmc
