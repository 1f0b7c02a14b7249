#include "rmc/linpoly.hpp"

namespace rmc {

LinPoly::LinPoly(TowerRef tw, Lv lv, std::vector<u64> coeffs) : tw_(std::move(tw)), lv_(lv), a_(std::move(coeffs)) {
    u64 N = tw_->rel_deg(lv_);
    if (a_.size() != N) throw invalid_error("LinPoly: coefficient vector must have length rel_deg");
    const FieldCtx& F = fld();
    for (u64 c : a_)
        if (c >= F.size()) throw invalid_error("LinPoly: coefficient encoding out of range");
}

LinPoly LinPoly::zero(TowerRef tw, Lv lv) {
    std::vector<u64> c(tw->rel_deg(lv), 0);
    return LinPoly(std::move(tw), lv, std::move(c));
}

LinPoly LinPoly::identity(TowerRef tw, Lv lv) { return monomial(std::move(tw), lv, 0); }

LinPoly LinPoly::monomial(TowerRef tw, Lv lv, u64 qexp, u64 coeff) {
    std::vector<u64> c(tw->rel_deg(lv), 0);
    if (qexp >= c.size()) throw invalid_error("LinPoly: monomial exponent out of range");
    c[qexp] = coeff;
    return LinPoly(std::move(tw), lv, std::move(c));
}

bool LinPoly::is_zero() const {
    for (u64 c : a_)
        if (c) return false;
    return true;
}

u64 LinPoly::evaluate(u64 x) const {
    const FieldCtx& F = fld();
    u64 acc = 0, xq = x;
    for (std::size_t i = 0; i < a_.size(); ++i) {
        if (a_[i]) acc = F.add(acc, F.mul(a_[i], xq));
        xq = tw_->frob_q(lv_, xq, 1);
    }
    return acc;
}

LinPoly LinPoly::compose(const LinPoly& g) const {
    require_same_field(*this, g);
    const FieldCtx& F = fld();
    u64 N = a_.size();
    std::vector<u64> c(N, 0);
    for (u64 i = 0; i < N; ++i) {
        if (a_[i] == 0) continue;
        for (u64 j = 0; j < N; ++j) {
            if (g.a_[j] == 0) continue;
            u64 l = (i + j) % N;
            c[l] = F.add(c[l], F.mul(a_[i], tw_->frob_q(lv_, g.a_[j], static_cast<std::int64_t>(i))));
        }
    }
    return LinPoly(tw_, lv_, std::move(c));
}

Mat LinPoly::as_matrix() const {
    const FieldCtx& F = fld();
    u64 N = a_.size();
    Mat M(tw_->ctx(Lv::Q), N, N);
    u64 G = F.generator(), b = 1;
    for (u64 j = 0; j < N; ++j) {
        auto col = tw_->coords_q(lv_, evaluate(b));
        for (u64 i = 0; i < N; ++i) M.at(i, j) = col[i];
        b = F.mul(b, G);
    }
    return M;
}

u64 LinPoly::kernel_dim() const {
    u64 N = a_.size();
    return N - rank(as_matrix());
}

std::pair<u64, u64> LinPoly::qdeg_bounds() const {
    u64 lo = a_.size(), hi = 0;
    for (u64 i = 0; i < a_.size(); ++i)
        if (a_[i]) {
            lo = std::min(lo, i);
            hi = i;
        }
    if (lo == a_.size()) throw invalid_error("qdeg_bounds: zero polynomial");
    return {lo, hi};
}

LinPoly LinPoly::coeff_power(u64 r) const {
    const FieldCtx& F = fld();
    std::vector<u64> c(a_.size());
    for (std::size_t i = 0; i < a_.size(); ++i) c[i] = F.frob_p(a_[i], r);
    return LinPoly(tw_, lv_, std::move(c));
}

LinPoly LinPoly::add(const LinPoly& g) const {
    require_same_field(*this, g);
    const FieldCtx& F = fld();
    std::vector<u64> c(a_.size());
    for (std::size_t i = 0; i < a_.size(); ++i) c[i] = F.add(a_[i], g.a_[i]);
    return LinPoly(tw_, lv_, std::move(c));
}

LinPoly LinPoly::sub(const LinPoly& g) const {
    require_same_field(*this, g);
    const FieldCtx& F = fld();
    std::vector<u64> c(a_.size());
    for (std::size_t i = 0; i < a_.size(); ++i) c[i] = F.sub(a_[i], g.a_[i]);
    return LinPoly(tw_, lv_, std::move(c));
}

LinPoly LinPoly::scale(u64 c) const {
    const FieldCtx& F = fld();
    std::vector<u64> r(a_.size());
    for (std::size_t i = 0; i < a_.size(); ++i) r[i] = F.mul(c, a_[i]);
    return LinPoly(tw_, lv_, std::move(r));
}

LinPoly lift(const LinPoly& f, u64 m) {
    const FieldTower& tw = *f.tower();
    if (f.level() != Lv::QN) throw invalid_error("lift: expected a GF(q^n)-level polynomial");
    TowerRef big = make_tower(tw.p(), tw.h(), tw.n(), m);
    std::vector<u64> c(big->rel_deg(Lv::Top), 0);
    for (std::size_t i = 0; i < f.coeffs().size(); ++i)
        c[i] = big->embed(Lv::QN, Lv::Top, f.coeffs()[i]);
    return LinPoly(big, Lv::Top, std::move(c));
}

LinPoly random_linpoly(const TowerRef& tw, Lv lv, Rng& rng) {
    u64 N = tw->rel_deg(lv), sz = tw->ctx(lv).size();
    std::vector<u64> c(N);
    for (u64 i = 0; i < N; ++i) c[i] = rng.below(sz);
    return LinPoly(tw, lv, std::move(c));
}

LinPoly random_invertible(const TowerRef& tw, Lv lv, u64 seed) {
    Rng rng(seed);
    for (;;) {
        LinPoly f = random_linpoly(tw, lv, rng);
        if (!f.is_zero() && f.kernel_dim() == 0) return f;
    }
}

void require_same_field(const LinPoly& f, const LinPoly& g) {
    if (f.level() != g.level() || f.fld() != g.fld())
        throw invalid_error("LinPoly: field context mismatch");
}

}  // namespace rmc
