#include "rmc/mvpoly.hpp"

#include <algorithm>
#include <numeric>

#include "rmc/errors.hpp"

namespace rmc {

bool GradedLex::operator()(const std::vector<u64>& a, const std::vector<u64>& b) const {
    u64 da = std::accumulate(a.begin(), a.end(), u64{0});
    u64 db = std::accumulate(b.begin(), b.end(), u64{0});
    if (da != db) return da < db;
    return a < b;
}

MvPoly::MvPoly(CtxRef ctx, u64 arity) : ctx_(std::move(ctx)), arity_(arity) {
    if (!ctx_) throw invalid_error("MvPoly: null field context");
}

MvPoly MvPoly::constant(CtxRef ctx, u64 arity, u64 c) {
    MvPoly f(std::move(ctx), arity);
    f.add_term(std::vector<u64>(arity, 0), c);
    return f;
}

MvPoly MvPoly::variable(CtxRef ctx, u64 arity, u64 var) {
    if (var >= arity) throw invalid_error("MvPoly: variable index out of range");
    MvPoly f(std::move(ctx), arity);
    std::vector<u64> e(arity, 0);
    e[var] = 1;
    f.add_term(std::move(e), 1);
    return f;
}

void MvPoly::add_term(std::vector<u64> e, u64 c) {
    if (e.size() != arity_) throw invalid_error("MvPoly: exponent vector arity mismatch");
    if (c >= ctx_->size()) throw invalid_error("MvPoly: coefficient out of range");
    if (c == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(std::move(e), c);
        return;
    }
    it->second = ctx_->add(it->second, c);
    if (it->second == 0) terms_.erase(it);
}

u64 MvPoly::degree() const {
    if (terms_.empty()) return 0;
    const auto& e = terms_.rbegin()->first;
    return std::accumulate(e.begin(), e.end(), u64{0});
}

u64 MvPoly::lowest_degree() const {
    if (terms_.empty()) return 0;
    const auto& e = terms_.begin()->first;
    return std::accumulate(e.begin(), e.end(), u64{0});
}

MvPoly MvPoly::add(const MvPoly& g) const {
    if (arity_ != g.arity_ || !(*ctx_ == *g.ctx_)) throw invalid_error("MvPoly: context mismatch");
    MvPoly r = *this;
    for (const auto& [e, c] : g.terms_) r.add_term(e, c);
    return r;
}

MvPoly MvPoly::neg() const {
    MvPoly r(ctx_, arity_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, ctx_->neg(c));
    return r;
}

MvPoly MvPoly::sub(const MvPoly& g) const { return add(g.neg()); }

MvPoly MvPoly::scale(u64 c) const {
    MvPoly r(ctx_, arity_);
    if (c == 0) return r;
    for (const auto& [e, a] : terms_) r.terms_.emplace(e, ctx_->mul(c, a));
    return r;
}

MvPoly MvPoly::mul(const MvPoly& g) const {
    if (arity_ != g.arity_ || !(*ctx_ == *g.ctx_)) throw invalid_error("MvPoly: context mismatch");
    MvPoly r(ctx_, arity_);
    std::vector<u64> e(arity_);
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : g.terms_) {
            for (u64 i = 0; i < arity_; ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ctx_->mul(ca, cb));
        }
    return r;
}

u64 MvPoly::evaluate(std::span<const u64> point) const {
    if (point.size() != arity_) throw invalid_error("MvPoly: point arity mismatch");
    u64 acc = 0;
    for (const auto& [e, c] : terms_) {
        u64 t = c;
        for (u64 i = 0; i < arity_ && t; ++i)
            if (e[i]) t = ctx_->mul(t, ctx_->pow(point[i], e[i]));
        acc = ctx_->add(acc, t);
    }
    return acc;
}

MvPoly MvPoly::substitute(u64 var, u64 value) const {
    if (var >= arity_) throw invalid_error("MvPoly: variable index out of range");
    MvPoly r(ctx_, arity_ - 1);
    std::vector<u64> e(arity_ - 1);
    for (const auto& [ef, c] : terms_) {
        u64 t = ef[var] ? ctx_->mul(c, ctx_->pow(value, ef[var])) : c;
        if (t == 0) continue;
        for (u64 i = 0, j = 0; i < arity_; ++i)
            if (i != var) e[j++] = ef[i];
        r.add_term(e, t);
    }
    return r;
}

MvPoly MvPoly::derivative(u64 var) const {
    if (var >= arity_) throw invalid_error("MvPoly: variable index out of range");
    u64 p = ctx_->p();
    MvPoly r(ctx_, arity_);
    for (const auto& [e, c] : terms_) {
        if (e[var] == 0) continue;
        u64 mult = e[var] % p;
        if (mult == 0) continue;
        std::vector<u64> ed = e;
        --ed[var];
        r.add_term(std::move(ed), ctx_->mul(c, ctx_->scalar_mul(mult, 1)));
    }
    return r;
}

MvPoly MvPoly::homogeneous_part(u64 d) const {
    MvPoly r(ctx_, arity_);
    for (const auto& [e, c] : terms_)
        if (std::accumulate(e.begin(), e.end(), u64{0}) == d) r.terms_.emplace(e, c);
    return r;
}

u64 binom_mod_p(u64 n, u64 k, u64 p) {
    if (k > n) return 0;
    u64 r = 1;
    while (n || k) {
        u64 nd = n % p, kd = k % p;
        if (kd > nd) return 0;
        // C(nd, kd) mod p by the multiplicative formula (digits are < p)
        u64 num = 1, den = 1;
        for (u64 i = 0; i < kd; ++i) {
            num = num * ((nd - i) % p) % p;
            den = den * ((i + 1) % p) % p;
        }
        // den is invertible mod p
        u64 inv = 1, b = den, e = p - 2;
        while (e) {
            if (e & 1) inv = inv * b % p;
            b = b * b % p;
            e >>= 1;
        }
        r = r * (num * inv % p) % p;
        n /= p;
        k /= p;
    }
    return r;
}

MvPoly MvPoly::translate(std::span<const u64> shift) const {
    if (shift.size() != arity_) throw invalid_error("MvPoly: shift arity mismatch");
    u64 p = ctx_->p();
    MvPoly r = *this;
    for (u64 v = 0; v < arity_; ++v) {
        if (shift[v] == 0) continue;
        MvPoly next(ctx_, arity_);
        for (const auto& [e, c] : r.terms_) {
            u64 d = e[v];
            std::vector<u64> en = e;
            // (X + s)^d = sum_j C(d, j) X^j s^{d-j}
            for (u64 j = 0; j <= d; ++j) {
                u64 bc = binom_mod_p(d, j, p);
                if (bc == 0) continue;
                u64 coef = ctx_->mul(c, ctx_->scalar_mul(bc, 1));
                if (d > j) coef = ctx_->mul(coef, ctx_->pow(shift[v], d - j));
                en[v] = j;
                next.add_term(en, coef);
            }
        }
        r = std::move(next);
    }
    return r;
}

MvPoly divide_by_linear_form(const MvPoly& f, std::span<const u64> coeffs) {
    u64 arity = f.arity();
    if (coeffs.size() != arity) throw invalid_error("divide_by_linear_form: arity mismatch");
    u64 pivot = arity;
    for (u64 j = arity; j-- > 0;)
        if (coeffs[j]) {
            pivot = j;
            break;
        }
    if (pivot == arity) throw invalid_error("divide_by_linear_form: zero form");
    if (coeffs[pivot] != 1) throw invalid_error("divide_by_linear_form: pivot coefficient must be 1");

    MvPoly L(f.ctx(), arity);
    for (u64 j = 0; j < arity; ++j)
        if (coeffs[j]) {
            std::vector<u64> e(arity, 0);
            e[j] = 1;
            L.add_term(std::move(e), coeffs[j]);
        }

    MvPoly rem = f;
    MvPoly quot(f.ctx(), arity);
    for (;;) {
        // peel the highest pivot-degree slice
        u64 d = 0;
        for (const auto& [e, c] : rem.terms()) d = std::max(d, e[pivot]);
        if (d == 0) break;
        MvPoly slice(f.ctx(), arity);
        for (const auto& [e, c] : rem.terms())
            if (e[pivot] == d) {
                std::vector<u64> es = e;
                --es[pivot];
                slice.add_term(std::move(es), c);
            }
        quot = quot.add(slice);
        rem = rem.sub(slice.mul(L));
    }
    if (!rem.is_zero()) throw internal_error("divide_by_linear_form: nonzero remainder");
    return quot;
}

}  // namespace rmc
