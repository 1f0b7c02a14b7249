#include "rmc/code.hpp"

#include <algorithm>

#include "rmc/parallel.hpp"

namespace rmc {

unsigned& sweep_threads() {
    static unsigned t = 1;
    return t;
}

namespace {

u64 sat_add(u64 a, u64 b) { return a > UINT64_MAX - b ? UINT64_MAX : a + b; }
u64 sat_mul(u64 a, u64 b) {
    if (a == 0 || b == 0) return 0;
    return a > UINT64_MAX / b ? UINT64_MAX : a * b;
}

// Number of k-dimensional GF(q)-subspaces of GF(q)^n, saturating.
u64 gaussian_binomial(u64 n, u64 k, u64 q) {
    if (k > n) return 0;
    std::vector<u64> prev(k + 1, 0), cur(k + 1, 0);
    prev[0] = 1;
    for (u64 nn = 1; nn <= n; ++nn) {
        cur[0] = 1;
        for (u64 kk = 1; kk <= std::min(nn, k); ++kk) {
            u64 qk = 1;
            for (u64 i = 0; i < kk; ++i) qk = sat_mul(qk, q);
            cur[kk] = sat_add(prev[kk - 1], sat_mul(qk, kk <= nn - 1 ? prev[kk] : 0));
        }
        for (u64 kk = std::min(nn, k) + 1; kk <= k; ++kk) cur[kk] = 0;
        std::swap(prev, cur);
    }
    return prev[k];
}

// Per-codeword rank evaluation against precomputed basis images.
struct RankSweeper {
    const RankMetricCode* C;
    const FieldCtx* F;        // big field
    const FieldCtx* Fq;       // GF(q)
    const FieldTower* tw;
    Lv lv;
    u64 N, k, q_;
    bool bitpack;                        // p == 2, h == 1, N <= 63
    std::vector<std::vector<u64>> img;   // img[j][l] = f_j(G^l)
    // scratch
    std::vector<u64> rows_bits;
    std::vector<std::vector<u64>> rows_gen;
    std::vector<u64> v;

    explicit RankSweeper(const RankMetricCode& code)
        : C(&code),
          F(&code.fld()),
          Fq(&code.tower()->ctx(Lv::Q)),
          tw(code.tower().get()),
          lv(code.level()),
          N(code.n_rel()),
          k(code.k()),
          q_(code.tower()->q()) {
        bitpack = (tw->p() == 2 && tw->h() == 1 && N <= 63);
        img.resize(k, std::vector<u64>(N));
        u64 G = F->generator();
        for (u64 j = 0; j < k; ++j) {
            u64 b = 1;
            for (u64 l = 0; l < N; ++l) {
                img[j][l] = C->basis()[j].evaluate(b);
                b = F->mul(b, G);
            }
        }
        rows_bits.resize(N);
        rows_gen.assign(N, std::vector<u64>(N));
        v.resize(N);
    }

    u64 rank_of(std::span<const u64> b) {
        for (u64 l = 0; l < N; ++l) {
            u64 acc = 0;
            for (u64 j = 0; j < k; ++j)
                if (b[j]) acc = F->add(acc, F->mul(b[j], img[j][l]));
            v[l] = acc;
        }
        if (bitpack) {
            // element encodings over GF(2) are the coordinate bitmasks
            u64 r = 0;
            std::copy(v.begin(), v.end(), rows_bits.begin());
            for (u64 i = 0; i < N; ++i) {
                u64 row = rows_bits[i];
                if (!row) continue;
                u64 lead = 63 - static_cast<u64>(__builtin_clzll(row));
                for (u64 j = i + 1; j < N; ++j)
                    if (rows_bits[j] >> lead & 1) rows_bits[j] ^= row;
                ++r;
            }
            return r;
        }
        if (tw->h() == 1) {
            // prime q: GF(q)-coordinates are the base-p digits of the encoding
            for (u64 l = 0; l < N; ++l) {
                u64 x = v[l];
                for (u64 j = 0; j < N; ++j) {
                    rows_gen[l][j] = x % q_;
                    x /= q_;
                }
            }
        } else {
            for (u64 l = 0; l < N; ++l) {
                auto c = tw->coords_q(lv, v[l]);
                std::copy(c.begin(), c.end(), rows_gen[l].begin());
            }
        }
        // in-place row elimination over GF(q)
        u64 r = 0;
        for (u64 col = 0; col < N && r < N; ++col) {
            u64 piv = r;
            while (piv < N && rows_gen[piv][col] == 0) ++piv;
            if (piv == N) continue;
            std::swap(rows_gen[piv], rows_gen[r]);
            u64 d = Fq->inv(rows_gen[r][col]);
            for (u64 j = col; j < N; ++j) rows_gen[r][j] = Fq->mul(d, rows_gen[r][j]);
            for (u64 i = r + 1; i < N; ++i) {
                u64 f = rows_gen[i][col];
                if (!f) continue;
                for (u64 j = col; j < N; ++j)
                    rows_gen[i][j] = Fq->sub(rows_gen[i][j], Fq->mul(f, rows_gen[r][j]));
            }
            ++r;
        }
        return r;
    }
};

}  // namespace

// ---------------------------------------------------------------------------
// RankMetricCode

RankMetricCode::RankMetricCode(std::vector<LinPoly> basis) : basis_(std::move(basis)) {
    if (basis_.empty()) throw invalid_error("RankMetricCode: empty basis");
    tw_ = basis_[0].tower();
    lv_ = basis_[0].level();
    for (const auto& f : basis_) require_same_field(basis_[0], f);
    u64 N = tw_->rel_deg(lv_);
    if (basis_.size() > N) throw invalid_error("RankMetricCode: k exceeds n");
    Mat M(fld(), basis_.size(), N);
    for (std::size_t i = 0; i < basis_.size(); ++i)
        for (u64 j = 0; j < N; ++j) M.at(i, j) = basis_[i].coeffs()[j];
    if (rank(std::move(M)) != basis_.size())
        throw invalid_error("RankMetricCode: basis is F_{q^n}-linearly dependent");
}

LinPoly RankMetricCode::codeword(std::span<const u64> b) const {
    if (b.size() != k()) throw invalid_error("codeword: wrong tuple arity");
    LinPoly f = LinPoly::zero(tw_, lv_);
    for (std::size_t j = 0; j < basis_.size(); ++j)
        if (b[j]) f = f.add(basis_[j].scale(b[j]));
    return f;
}

std::optional<std::vector<u64>> RankMetricCode::represent(const LinPoly& f) const {
    require_same_field(basis_[0], f);
    u64 N = n_rel();
    Mat M(fld(), N, k());
    for (u64 j = 0; j < k(); ++j)
        for (u64 i = 0; i < N; ++i) M.at(i, j) = basis_[j].coeffs()[i];
    std::vector<u64> rhs(f.coeffs().begin(), f.coeffs().end());
    auto x = solve(std::move(M), std::move(rhs));
    if (x.empty() && !f.is_zero()) return std::nullopt;
    if (x.empty()) return std::vector<u64>(k(), 0);
    // solve() returns some solution; verify (kernel is trivial for independent basis)
    LinPoly chk = codeword(x);
    if (!(chk == f)) return std::nullopt;
    return x;
}

u64 RankMetricCode::projective_count() const {
    u64 Q = fld().size(), c = 0, qp = 1;
    for (u64 j = 0; j < k(); ++j) {
        c = sat_add(c, qp);
        qp = sat_mul(qp, Q);
    }
    return c;
}

std::vector<u64> RankMetricCode::projective_tuple(u64 index) const {
    u64 Q = fld().size(), kk = k();
    // blocks by leading position j = k-1 down to 0; block j has Q^{k-1-j} tuples
    for (u64 j = kk; j-- > 0;) {
        u64 block = 1;
        for (u64 t = 0; t < kk - 1 - j; ++t) block = sat_mul(block, Q);
        if (index >= block) {
            index -= block;
            continue;
        }
        std::vector<u64> b(kk, 0);
        b[j] = 1;
        // suffix digits, leftmost most significant (lexicographic order)
        for (u64 pos = kk; pos-- > j + 1;) {
            b[pos] = index % Q;
            index /= Q;
        }
        return b;
    }
    throw invalid_error("projective_tuple: index out of range");
}

u64 codeword_rank(const RankMetricCode& C, std::span<const u64> b) {
    RankSweeper sw(C);
    return sw.rank_of(b);
}

// ---------------------------------------------------------------------------
// Sweeps

u64 min_distance(const RankMetricCode& C, const Guard& g) {
    u64 count = C.projective_count();
    g.require(count, "min_distance");
    u64 N = C.n_rel();
    unsigned slots = std::max(1u, sweep_threads());
    std::vector<u64> local_min(slots, N + 1);
    parallel_ranges(count, [&](u64 b, u64 e, std::size_t slot) {
        RankSweeper sw(C);
        u64 best = N + 1;
        for (u64 i = b; i < e; ++i) {
            auto t = C.projective_tuple(i);
            best = std::min(best, sw.rank_of(t));
        }
        local_min[slot] = best;
    });
    u64 d = N + 1;
    for (u64 v : local_min) d = std::min(d, v);
    return d;
}

std::vector<u64> rank_weight_distribution(const RankMetricCode& C, const Guard& g) {
    u64 count = C.projective_count();
    g.require(count, "rank_weight_distribution");
    u64 N = C.n_rel();
    unsigned slots = std::max(1u, sweep_threads());
    std::vector<std::vector<u64>> local(slots, std::vector<u64>(N + 1, 0));
    parallel_ranges(count, [&](u64 b, u64 e, std::size_t slot) {
        RankSweeper sw(C);
        for (u64 i = b; i < e; ++i) {
            auto t = C.projective_tuple(i);
            ++local[slot][sw.rank_of(t)];
        }
    });
    std::vector<u64> dist(N + 1, 0);
    for (auto& l : local)
        for (u64 i = 0; i <= N; ++i) dist[i] += l[i];
    return dist;
}

namespace {

// Enumerates k x N RREF matrices over GF(q) (one representative per subspace)
// in a fixed order: pivot-column combinations ascending lexicographically,
// then free entries as a little-endian base-q counter over positions in
// row-major order.
struct SubspaceEnum {
    const FieldCtx* Fq;
    u64 N, k, q;
    std::vector<u64> pivots;       // current combination
    std::vector<std::pair<u64, u64>> free_pos;
    std::vector<u64> counter;
    bool done = false;

    SubspaceEnum(const FieldCtx& fq, u64 n, u64 kk) : Fq(&fq), N(n), k(kk), q(fq.size()) {
        pivots.resize(k);
        for (u64 i = 0; i < k; ++i) pivots[i] = i;
        reset_free();
    }

    void reset_free() {
        free_pos.clear();
        std::vector<bool> is_piv(N, false);
        for (u64 p : pivots) is_piv[p] = true;
        for (u64 i = 0; i < k; ++i)
            for (u64 j = pivots[i] + 1; j < N; ++j)
                if (!is_piv[j]) free_pos.emplace_back(i, j);
        counter.assign(free_pos.size(), 0);
    }

    void rows(std::vector<std::vector<u64>>& out) const {
        if (out.size() != k)
            out.assign(k, std::vector<u64>(N, 0));
        else
            for (auto& r : out) std::fill(r.begin(), r.end(), 0);
        for (u64 i = 0; i < k; ++i) out[i][pivots[i]] = 1;
        for (std::size_t t = 0; t < free_pos.size(); ++t)
            out[free_pos[t].first][free_pos[t].second] = counter[t];
    }

    void advance() {
        for (std::size_t t = 0; t < counter.size(); ++t) {
            if (++counter[t] < q) return;
            counter[t] = 0;
        }
        // next pivot combination
        std::int64_t i = static_cast<std::int64_t>(k) - 1;
        while (i >= 0 && pivots[i] == N - k + i) --i;
        if (i < 0) {
            done = true;
            return;
        }
        ++pivots[i];
        for (u64 j = i + 1; j < k; ++j) pivots[j] = pivots[j - 1] + 1;
        reset_free();
    }
};

MrdReport is_mrd_subspaces(const RankMetricCode& C) {
    const FieldCtx& F = C.fld();
    const FieldCtx& Fq = C.tower()->ctx(Lv::Q);
    const FieldTower& tw = *C.tower();
    Lv lv = C.level();
    u64 N = C.n_rel(), k = C.k(), q = tw.q();

    // f_j(G^l) images and the embedded GF(q) scalars
    std::vector<std::vector<u64>> img(k, std::vector<u64>(N));
    u64 G = F.generator();
    for (u64 j = 0; j < k; ++j) {
        u64 b = 1;
        for (u64 l = 0; l < N; ++l) {
            img[j][l] = C.basis()[j].evaluate(b);
            b = F.mul(b, G);
        }
    }
    std::vector<u64> embq(q);
    for (u64 c = 0; c < q; ++c) embq[c] = tw.embed(Lv::Q, lv, c);

    MrdReport rep;
    rep.method = MrdReport::Method::SubspaceSweep;
    std::vector<std::vector<u64>> rows;
    std::vector<u64> mbuf(k * k);
    // in-place determinant of the k x k buffer (destroys it)
    auto det_buf = [&]() -> u64 {
        u64 d = 1;
        for (u64 c = 0; c < k; ++c) {
            u64 piv = c;
            while (piv < k && mbuf[piv * k + c] == 0) ++piv;
            if (piv == k) return 0;
            if (piv != c) {
                for (u64 j = c; j < k; ++j) std::swap(mbuf[piv * k + j], mbuf[c * k + j]);
                d = F.neg(d);
            }
            u64 pv = mbuf[c * k + c];
            d = F.mul(d, pv);
            u64 ipv = F.inv(pv);
            for (u64 i = c + 1; i < k; ++i) {
                u64 fct = mbuf[i * k + c];
                if (!fct) continue;
                fct = F.mul(fct, ipv);
                for (u64 j = c; j < k; ++j)
                    mbuf[i * k + j] = F.sub(mbuf[i * k + j], F.mul(fct, mbuf[c * k + j]));
            }
        }
        return d;
    };
    SubspaceEnum en(Fq, N, k);
    while (!en.done) {
        en.rows(rows);
        for (u64 i = 0; i < k; ++i)
            for (u64 j = 0; j < k; ++j) {
                u64 acc = 0;
                for (u64 l = 0; l < N; ++l)
                    if (rows[i][l]) acc = F.add(acc, F.mul(embq[rows[i][l]], img[j][l]));
                mbuf[i * k + j] = acc;
            }
        if (det_buf() == 0) {
            Mat M(F, k, k);
            for (u64 i = 0; i < k; ++i)
                for (u64 j = 0; j < k; ++j) {
                    u64 acc = 0;
                    for (u64 l = 0; l < N; ++l)
                        if (rows[i][l]) acc = F.add(acc, F.mul(embq[rows[i][l]], img[j][l]));
                    M.at(i, j) = acc;
                }
            auto ker = kernel_basis(std::move(M));
            if (ker.empty()) throw internal_error("is_mrd: singular matrix with empty kernel");
            std::vector<u64> b = ker.front();
            // normalize first nonzero coefficient to 1
            for (u64 j = 0; j < k; ++j)
                if (b[j]) {
                    u64 d = F.inv(b[j]);
                    for (u64 t = 0; t < k; ++t) b[t] = F.mul(d, b[t]);
                    break;
                }
            LinPoly w = C.codeword(b);
            u64 kd = w.kernel_dim();
            if (kd < k) throw internal_error("is_mrd: witness re-check failed");
            rep.verdict = false;
            rep.min_distance = N - kd;
            rep.witness = std::move(b);
            return rep;
        }
        en.advance();
    }
    rep.verdict = true;
    rep.min_distance = N - k + 1;
    return rep;
}

}  // namespace

MrdReport is_mrd(const RankMetricCode& C, const Guard& g) {
    u64 N = C.n_rel(), k = C.k();
    u64 cw_count = C.projective_count();
    u64 sub_count = gaussian_binomial(N, k, C.tower()->q());
    if (cw_count > g.max_steps && sub_count > g.max_steps)
        g.require(std::min(cw_count, sub_count), "is_mrd");
    if (sub_count < cw_count && cw_count > g.max_steps) return is_mrd_subspaces(C);

    // Codeword sweep with early exit; the witness is the lexicographically
    // least violating tuple regardless of the worker partition.
    unsigned slots = std::max(1u, sweep_threads());
    std::vector<u64> hit(slots, UINT64_MAX), hit_rank(slots, 0);
    EarlyExit ee;
    parallel_ranges(cw_count, [&](u64 b, u64 e, std::size_t slot) {
        RankSweeper sw(C);
        for (u64 i = b; i < e; ++i) {
            if ((i & 0xfff) == 0 && ee.can_skip(i)) return;
            auto t = C.projective_tuple(i);
            u64 r = sw.rank_of(t);
            if (r + k <= N) {  // kernel_dim >= k
                hit[slot] = i;
                hit_rank[slot] = r;
                ee.report(i);
                return;
            }
        }
    });
    MrdReport rep;
    rep.method = MrdReport::Method::CodewordSweep;
    u64 best = UINT64_MAX, best_rank = 0;
    for (unsigned s = 0; s < slots; ++s)
        if (hit[s] < best) {
            best = hit[s];
            best_rank = hit_rank[s];
        }
    if (best == UINT64_MAX) {
        rep.verdict = true;
        rep.min_distance = N - k + 1;
    } else {
        rep.verdict = false;
        rep.min_distance = best_rank;
        rep.witness = C.projective_tuple(best);
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Duality

std::optional<RankMetricCode> delsarte_dual(const RankMetricCode& C) {
    const FieldCtx& F = C.fld();
    const FieldTower& tw = *C.tower();
    Lv lv = C.level();
    if (lv == Lv::Top && tw.m() > 1)
        throw invalid_error("delsarte_dual: implemented at the GF(q^n) level");
    u64 N = C.n_rel(), k = C.k();
    if (k == N) return std::nullopt;

    const FieldCtx& Fq = tw.ctx(Lv::Q);
    u64 G = F.generator();
    std::vector<u64> Gp(N);
    Gp[0] = 1;
    for (u64 i = 1; i < N; ++i) Gp[i] = F.mul(Gp[i - 1], G);

    auto tr = [&](u64 x) { return tw.trace_rel(x); };

    // unknowns c_{i,s}: coefficient b_i = sum_s c_{i,s} G^s
    Mat M(Fq, k * N, N * N);
    for (u64 j = 0; j < k; ++j) {
        const auto& a = C.basis()[j].coeffs();
        for (u64 l = 0; l < N; ++l) {
            u64 row = j * N + l;
            for (u64 i = 0; i < N; ++i) {
                if (a[i] == 0) continue;
                u64 base = F.mul(Gp[l], a[i]);
                for (u64 s = 0; s < N; ++s)
                    M.at(row, i * N + s) = Fq.add(M.at(row, i * N + s), tr(F.mul(base, Gp[s])));
            }
        }
    }
    auto ker = kernel_basis(std::move(M));
    if (ker.size() != N * (N - k)) throw internal_error("delsarte_dual: unexpected solution dimension");

    // greedily extract an F_{q^N}-independent subset of size N - k
    std::vector<LinPoly> duals;
    Mat span(F, 0, N);
    std::vector<std::vector<u64>> chosen;
    for (const auto& v : ker) {
        std::vector<u64> coeffs(N);
        for (u64 i = 0; i < N; ++i) {
            std::vector<u64> cs(v.begin() + i * N, v.begin() + (i + 1) * N);
            coeffs[i] = tw.from_coords_q(lv, cs);
        }
        // independent over F_{q^N}?
        Mat T(F, chosen.size() + 1, N);
        for (std::size_t r = 0; r < chosen.size(); ++r)
            for (u64 c = 0; c < N; ++c) T.at(r, c) = chosen[r][c];
        for (u64 c = 0; c < N; ++c) T.at(chosen.size(), c) = coeffs[c];
        if (rank(std::move(T)) == chosen.size() + 1) {
            chosen.push_back(coeffs);
            duals.emplace_back(C.tower(), lv, coeffs);
            if (duals.size() == N - k) break;
        }
    }
    if (duals.size() != N - k) throw internal_error("delsarte_dual: failed to extract an F_{q^n}-basis");
    return RankMetricCode(std::move(duals));
}

// ---------------------------------------------------------------------------
// Idealisers

namespace {

IdealiserReport idealiser_impl(const RankMetricCode& C, bool left) {
    const FieldCtx& F = C.fld();
    const FieldTower& tw = *C.tower();
    const FieldCtx& Fq = tw.ctx(Lv::Q);
    Lv lv = C.level();
    u64 N = C.n_rel(), k = C.k();
    u64 G = F.generator();
    std::vector<u64> Gp(N);
    Gp[0] = 1;
    for (u64 i = 1; i < N; ++i) Gp[i] = F.mul(Gp[i - 1], G);

    auto flatten = [&](const LinPoly& f) {
        std::vector<u64> v(N * N);
        for (u64 i = 0; i < N; ++i) {
            auto c = tw.coords_q(lv, f.coeffs()[i]);
            for (u64 s = 0; s < N; ++s) v[i * N + s] = c[s];
        }
        return v;
    };

    // RREF of the F_q-span of C, for membership residuals
    Mat S(Fq, k * N, N * N);
    for (u64 j = 0; j < k; ++j)
        for (u64 l = 0; l < N; ++l) {
            auto v = flatten(C.basis()[j].scale(Gp[l]));
            for (u64 c = 0; c < N * N; ++c) S.at(j * N + l, c) = v[c];
        }
    std::vector<std::size_t> piv;
    std::size_t srank = rref(S, &piv);

    auto residual = [&](std::vector<u64> v) {
        for (std::size_t r = 0; r < srank; ++r) {
            u64 f = v[piv[r]];
            if (!f) continue;
            for (u64 c = 0; c < N * N; ++c) v[c] = Fq.sub(v[c], Fq.mul(f, S.at(r, c)));
        }
        return v;
    };

    // candidate basis G^s x^{q^i} of L_{N,q} over GF(q)
    Mat A(Fq, k * N * N, N * N);
    for (u64 i = 0; i < N; ++i)
        for (u64 s = 0; s < N; ++s) {
            LinPoly phi = LinPoly::monomial(C.tower(), lv, i, Gp[s]);
            for (u64 j = 0; j < k; ++j) {
                LinPoly comp = left ? phi.compose(C.basis()[j]) : C.basis()[j].compose(phi);
                auto res = residual(flatten(comp));
                for (u64 c = 0; c < N * N; ++c) A.at(j * N * N + c, i * N + s) = res[c];
            }
        }
    auto ker = kernel_basis(std::move(A));
    IdealiserReport rep;
    rep.dim_fq = ker.size();
    for (const auto& v : ker) {
        std::vector<u64> coeffs(N, 0);
        for (u64 i = 0; i < N; ++i)
            for (u64 s = 0; s < N; ++s)
                if (v[i * N + s]) coeffs[i] = F.add(coeffs[i], F.mul(tw.embed(Lv::Q, lv, v[i * N + s]), Gp[s]));
        rep.basis.emplace_back(C.tower(), lv, std::move(coeffs));
    }
    return rep;
}

}  // namespace

IdealiserReport left_idealiser(const RankMetricCode& C) { return idealiser_impl(C, true); }
IdealiserReport right_idealiser(const RankMetricCode& C) { return idealiser_impl(C, false); }

// ---------------------------------------------------------------------------
// Transforms, lifts, probes

RankMetricCode transform(const RankMetricCode& C, const LinPoly& g, const LinPoly& h, u64 rho_exp) {
    if (g.kernel_dim() != 0 || h.kernel_dim() != 0)
        throw invalid_error("transform: g and h must be invertible");
    std::vector<LinPoly> basis;
    basis.reserve(C.k());
    for (const auto& f : C.basis()) basis.push_back(g.compose(f.coeff_power(rho_exp)).compose(h));
    return RankMetricCode(std::move(basis));
}

RankMetricCode lift_code(const RankMetricCode& C, u64 m) {
    std::vector<LinPoly> basis;
    basis.reserve(C.k());
    for (const auto& f : C.basis()) basis.push_back(lift(f, m));
    return RankMetricCode(std::move(basis));
}

ProbeResult exceptional_probe(const RankMetricCode& C, u64 m_max, const Guard& g) {
    ProbeResult res;
    for (u64 m = 1; m <= m_max; ++m) {
        ProbeEntry entry;
        entry.m = m;
        try {
            RankMetricCode lifted = lift_code(C, m);
            entry.report = is_mrd(lifted, g);
        } catch (const guard_error&) {
            entry.skipped = true;
            res.truncated = true;
        }
        res.entries.push_back(std::move(entry));
    }
    return res;
}

Fingerprint fingerprint(const RankMetricCode& C, const Guard& g) {
    Fingerprint fp;
    fp.q = C.tower()->q();
    fp.n = C.n_rel();
    fp.k = C.k();
    fp.weight_distribution = rank_weight_distribution(C, g);
    fp.d = 0;
    for (u64 r = 1; r <= fp.n; ++r)
        if (fp.weight_distribution[r]) {
            fp.d = r;
            break;
        }
    if (fp.weight_distribution[0]) throw internal_error("fingerprint: zero codeword in projective sweep");
    fp.dim_left = left_idealiser(C).dim_fq;
    fp.dim_right = right_idealiser(C).dim_fq;
    return fp;
}

RankMetricCode random_code(const TowerRef& tw, Lv lv, u64 k, u64 seed) {
    Rng rng(seed);
    u64 N = tw->rel_deg(lv);
    if (k == 0 || k > N) throw invalid_error("random_code: bad dimension");
    for (;;) {
        std::vector<LinPoly> basis;
        for (u64 j = 0; j < k; ++j) basis.push_back(random_linpoly(tw, lv, rng));
        try {
            return RankMetricCode(std::move(basis));
        } catch (const invalid_error&) {
            continue;  // dependent draw; retry deterministically
        }
    }
}

}  // namespace rmc
