#include "rmc/gf.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "rmc/linalg.hpp"

namespace rmc {

bool is_prime(u64 p) {
    if (p < 2) return false;
    for (u64 d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Dense GF(p)[x] helpers used only during context construction.
namespace {

using Poly = std::vector<u64>;  // coefficients mod p, low degree first

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& f, u64 p) {
    if (a.empty() || b.empty()) return {};
    std::size_t deg = f.size() - 1;
    Poly c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p;
    }
    // reduce mod monic f
    for (std::size_t i = c.size(); i-- > deg;) {
        u64 t = c[i];
        if (t == 0) continue;
        c[i] = 0;
        for (std::size_t j = 0; j < deg; ++j) c[i - deg + j] = (c[i - deg + j] + (p - f[j] % p) * t) % p;
    }
    c.resize(deg);
    trim(c);
    return c;
}

Poly poly_powmod_x(u64 exp_base, u64 exp_pow, const Poly& f, u64 p) {
    // x^(exp_base^exp_pow) mod f via repeated exponentiation by exp_base
    Poly r = {0, 1};
    trim(r);
    for (u64 t = 0; t < exp_pow; ++t) {
        // r <- r^exp_base
        Poly acc = {1};
        Poly base = r;
        u64 k = exp_base;
        while (k) {
            if (k & 1) acc = poly_mulmod(acc, base, f, p);
            base = poly_mulmod(base, base, f, p);
            k >>= 1;
        }
        r = acc;
    }
    return r;
}

Poly poly_mod(Poly a, const Poly& b, u64 p) {
    trim(a);
    u64 lead_inv = 1;
    {  // inverse of b's leading coefficient mod p
        u64 lb = b.back() % p, r = 1, base = lb, k = p - 2;
        while (k) {
            if (k & 1) r = r * base % p;
            base = base * base % p;
            k >>= 1;
        }
        lead_inv = r;
    }
    while (a.size() >= b.size() && !a.empty()) {
        u64 t = a.back() * lead_inv % p;
        std::size_t shift = a.size() - b.size();
        for (std::size_t j = 0; j < b.size(); ++j)
            a[shift + j] = (a[shift + j] + (p - b[j] * t % p)) % p;
        trim(a);
    }
    return a;
}

Poly poly_gcd(Poly a, Poly b, u64 p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly r = poly_mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

bool poly_irreducible(const Poly& f, u64 p) {
    std::size_t e = f.size() - 1;
    if (e == 0) return false;
    if (e == 1) return true;
    // x^(p^e) == x mod f, and gcd(x^(p^(e/r)) - x, f) = 1 for prime r | e
    Poly xe = poly_powmod_x(p, e, f, p);
    Poly x = {0, 1};
    if (xe != x) return false;
    std::size_t rem = e;
    for (std::size_t r = 2; r * r <= e; ++r) {
        if (rem % r) continue;
        while (rem % r == 0) rem /= r;
        Poly d = poly_powmod_x(p, e / r, f, p);
        if (d.size() < 2) d.resize(2, 0);
        d[1] = (d[1] + p - 1) % p;  // d <- d - x
        trim(d);
        if (poly_gcd(f, d, p).size() > 1) return false;
    }
    if (rem > 1) {
        Poly d = poly_powmod_x(p, e / rem, f, p);
        if (d.size() < 2) d.resize(2, 0);
        d[1] = (d[1] + p - 1) % p;
        trim(d);
        if (poly_gcd(f, d, p).size() > 1) return false;
    }
    return true;
}

std::vector<u64> factor_distinct(u64 n) {
    std::vector<u64> fs;
    for (u64 d = 2; d * d <= n; ++d) {
        if (n % d) continue;
        fs.push_back(d);
        while (n % d == 0) n /= d;
    }
    if (n > 1) fs.push_back(n);
    return fs;
}

}  // namespace

// ---------------------------------------------------------------------------
// FieldCtx

FieldCtx::FieldCtx(u64 p, u32 e) : p_(p), e_(e) {
    if (!is_prime(p)) throw invalid_error("FieldCtx: p is not prime");
    if (e == 0) throw invalid_error("FieldCtx: extension degree must be positive");
    // Lexicographically minimal monic irreducible: scan low-coefficient
    // encodings upward.  For e = 1 this yields f = x.
    u64 limit = 1;
    for (u32 i = 0; i < e; ++i) {
        if (limit > (1ull << 40) / p) throw invalid_error("FieldCtx: field too large");
        limit *= p;
    }
    for (u64 c = 0; c < limit; ++c) {
        Poly f(e + 1, 0);
        u64 t = c;
        for (u32 i = 0; i < e; ++i) {
            f[i] = t % p;
            t /= p;
        }
        f[e] = 1;
        if (poly_irreducible(f, p)) {
            defining_.assign(f.begin(), f.end());
            break;
        }
    }
    init();
}

FieldCtx::FieldCtx(u64 p, std::vector<u32> defining_coeffs) : p_(p), defining_(std::move(defining_coeffs)) {
    if (!is_prime(p)) throw invalid_error("FieldCtx: p is not prime");
    if (defining_.size() < 2 || defining_.back() != 1)
        throw invalid_error("FieldCtx: defining polynomial must be monic of positive degree");
    e_ = static_cast<u32>(defining_.size() - 1);
    Poly f(defining_.begin(), defining_.end());
    for (auto& c : f) c %= p;
    if (!poly_irreducible(f, p)) throw invalid_error("FieldCtx: defining polynomial is reducible");
    init();
}

void FieldCtx::init() {
    ppow_.resize(e_ + 1);
    ppow_[0] = 1;
    for (u32 i = 1; i <= e_; ++i) {
        if (ppow_[i - 1] > (1ull << 40) / p_) throw invalid_error("FieldCtx: field too large");
        ppow_[i] = ppow_[i - 1] * p_;
    }
    size_ = ppow_[e_];
    for (auto& c : defining_) c = static_cast<u32>(c % p_);

    // multiplicative generator: least encoding whose order is size-1
    if (size_ > 2) {
        auto fs = factor_distinct(size_ - 1);
        for (u64 c = 2; c < size_; ++c) {
            bool ok = true;
            for (u64 r : fs)
                if (pow_raw(c, (size_ - 1) / r) == 1) {
                    ok = false;
                    break;
                }
            if (ok) {
                primitive_ = c;
                break;
            }
        }
    } else {
        primitive_ = 1;
    }

    if (size_ <= kTableLimit) {
        log_.assign(size_, 0);
        exp_.assign(size_ - 1, 0);
        u64 acc = 1;
        for (u64 i = 0; i < size_ - 1; ++i) {
            exp_[i] = static_cast<u32>(acc);
            log_[acc] = static_cast<u32>(i);
            acc = mul_raw(acc, primitive_);
        }
        if (acc != 1) throw internal_error("FieldCtx: primitive element order mismatch");
    }
}

u64 FieldCtx::primitive_element() const { return primitive_; }

std::vector<u32> FieldCtx::digits(u64 a) const {
    std::vector<u32> d(e_);
    for (u32 i = 0; i < e_; ++i) {
        d[i] = static_cast<u32>(a % p_);
        a /= p_;
    }
    return d;
}

u64 FieldCtx::from_digits(std::span<const u32> d) const {
    u64 a = 0;
    for (std::size_t i = std::min<std::size_t>(d.size(), e_); i-- > 0;) a = a * p_ + d[i] % p_;
    return a;
}

u64 FieldCtx::add(u64 a, u64 b) const {
    if (p_ == 2) return a ^ b;
    u64 r = 0;
    for (u32 i = 0; i < e_ && (a || b); ++i) {
        u64 s = (a % p_ + b % p_) % p_;
        r += s * ppow_[i];
        a /= p_;
        b /= p_;
    }
    return r;
}

u64 FieldCtx::neg(u64 a) const {
    if (p_ == 2) return a;
    u64 r = 0;
    for (u32 i = 0; i < e_ && a; ++i) {
        u64 d = a % p_;
        if (d) r += (p_ - d) * ppow_[i];
        a /= p_;
    }
    return r;
}

u64 FieldCtx::sub(u64 a, u64 b) const { return p_ == 2 ? a ^ b : add(a, neg(b)); }

u64 FieldCtx::mul_raw(u64 a, u64 b) const {
    if (a == 0 || b == 0) return 0;
    std::vector<u64> c(2 * e_ - 1, 0);
    auto da = digits(a), db = digits(b);
    for (u32 i = 0; i < e_; ++i) {
        if (da[i] == 0) continue;
        for (u32 j = 0; j < e_; ++j) c[i + j] = (c[i + j] + static_cast<u64>(da[i]) * db[j]) % p_;
    }
    for (std::size_t i = c.size(); i-- > e_;) {
        u64 t = c[i];
        if (t == 0) continue;
        c[i] = 0;
        for (u32 j = 0; j < e_; ++j) c[i - e_ + j] = (c[i - e_ + j] + (p_ - defining_[j]) * t) % p_;
    }
    u64 r = 0;
    for (u32 i = e_; i-- > 0;) r = r * p_ + c[i];
    return r;
}

u64 FieldCtx::mul(u64 a, u64 b) const {
    if (a == 0 || b == 0) return 0;
    if (!log_.empty()) {
        u64 s = static_cast<u64>(log_[a]) + log_[b];
        if (s >= size_ - 1) s -= size_ - 1;
        return exp_[s];
    }
    return mul_raw(a, b);
}

u64 FieldCtx::pow_raw(u64 a, u64 k) const {
    u64 r = 1;
    while (k) {
        if (k & 1) r = mul_raw(r, a);
        a = mul_raw(a, a);
        k >>= 1;
    }
    return r;
}

u64 FieldCtx::pow(u64 a, u64 k) const {
    if (a == 0) return k == 0 ? 1 : 0;
    u64 ord = size_ - 1;
    if (!log_.empty()) {
        u64 idx = static_cast<unsigned __int128>(log_[a]) * (k % ord) % ord;
        return exp_[idx];
    }
    return pow_raw(a, k % ord);
}

u64 FieldCtx::inv(u64 a) const {
    if (a == 0) throw invalid_error("FieldCtx: division by zero");
    if (!log_.empty()) {
        u64 l = log_[a];
        return l == 0 ? 1 : exp_[size_ - 1 - l];
    }
    return pow_raw(a, size_ - 2);
}

u64 FieldCtx::frob_p(u64 a, u64 i) const {
    if (a == 0 || a == 1) return a;
    u64 ord = size_ - 1;
    // p^i mod ord
    u64 ex = 1 % ord;
    for (u64 t = 0; t < i % e_; ++t) ex = static_cast<unsigned __int128>(ex) * p_ % ord;
    if (!log_.empty()) return exp_[static_cast<unsigned __int128>(log_[a]) * ex % ord];
    return pow_raw(a, ex);
}

bool operator==(const FieldCtx& a, const FieldCtx& b) {
    return a.p() == b.p() && a.e() == b.e() && a.defining() == b.defining();
}

CtxRef field(u64 p, u32 e) {
    static std::map<std::pair<u64, u32>, CtxRef> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto key = std::make_pair(p, e);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    auto ctx = std::make_shared<const FieldCtx>(p, e);
    cache.emplace(key, ctx);
    return ctx;
}

// ---------------------------------------------------------------------------
// FieldTower

const CtxRef& FieldTower::ctx_ref(Lv lv) const {
    switch (lv) {
        case Lv::Q: return cq_;
        case Lv::QN: return cqn_;
        default: return ctop_;
    }
}

u64 FieldTower::rel_deg(Lv lv) const {
    switch (lv) {
        case Lv::Q: return 1;
        case Lv::QN: return n_;
        default: return n_ * m_;
    }
}

const FieldTower::Embedding& FieldTower::emb(Lv from, Lv to) const {
    if (from == Lv::Q && to == Lv::QN) return e_q_qn_;
    if (from == Lv::QN && to == Lv::Top) return e_qn_top_;
    if (from == Lv::Q && to == Lv::Top) return e_q_top_;
    throw invalid_error("FieldTower: unsupported embedding direction");
}

u64 FieldTower::apply_emb(const Embedding& E, const FieldCtx& from, const FieldCtx& to, u64 a) const {
    if (E.identity) return a;
    u64 r = 0;
    for (u32 i = 0; i < from.e() && a; ++i) {
        u64 d = a % from.p();
        if (d) r = to.add(r, to.mul(d, E.basis_img[i]));
        a /= from.p();
    }
    return r;
}

u64 FieldTower::embed(Lv from, Lv to, u64 a) const {
    if (from == to) return a;
    return apply_emb(emb(from, to), ctx(from), ctx(to), a);
}

std::optional<u64> FieldTower::retract(Lv from, Lv to, u64 a) const {
    if (from == to) return a;
    const Embedding& E = emb(to, from);
    if (E.identity) return a;
    auto it = E.back.find(a);
    if (it == E.back.end()) return std::nullopt;
    return it->second;
}

u64 FieldTower::frob_q(Lv lv, u64 a, std::int64_t i) const {
    u64 r = rel_deg(lv);
    std::int64_t ii = i % static_cast<std::int64_t>(r);
    if (ii < 0) ii += r;
    if (ii == 0 || a == 0 || a == 1 || lv == Lv::Q) return a;
    const std::vector<u64>& qi = (lv == Lv::QN) ? qi_qn_ : qi_top_;
    return ctx(lv).pow(a, qi[ii]);
}

std::vector<u64> FieldTower::coords_q(Lv lv, u64 a) const {
    u64 r = rel_deg(lv);
    std::vector<u64> c(r, 0);
    if (lv == Lv::Q) {
        c[0] = a;
        return c;
    }
    const FieldCtx& F = ctx(lv);
    if (h_ == 1) {
        for (u64 i = 0; i < r && a; ++i) {
            c[i] = a % p_;
            a /= p_;
        }
        return c;
    }
    const auto& M = (lv == Lv::QN) ? coord_mat_qn_ : coord_mat_top_;
    u32 e = F.e();
    auto dv = F.digits(a);
    std::vector<u32> out(e, 0);
    for (u32 i = 0; i < e; ++i) {
        u64 s = 0;
        for (u32 j = 0; j < e; ++j) s += static_cast<u64>(M[i][j]) * dv[j];
        out[i] = static_cast<u32>(s % p_);
    }
    // out is grouped as (coeff index i < r) x (h digits over GF(p))
    for (u64 i = 0; i < r; ++i) {
        std::span<const u32> chunk(out.data() + i * h_, h_);
        c[i] = cq_->from_digits(chunk);
    }
    return c;
}

u64 FieldTower::from_coords_q(Lv lv, std::span<const u64> c) const {
    u64 r = rel_deg(lv);
    if (c.size() != r) throw invalid_error("from_coords_q: wrong length");
    if (lv == Lv::Q) return c[0];
    const FieldCtx& F = ctx(lv);
    u64 g = F.generator(), gp = 1, acc = 0;
    for (u64 i = 0; i < r; ++i) {
        if (c[i]) acc = F.add(acc, F.mul(embed(Lv::Q, lv, c[i]), gp));
        gp = F.mul(gp, g);
    }
    return acc;
}

u64 FieldTower::trace_rel(u64 a) const {
    const FieldCtx& F = *cqn_;
    u64 s = 0, x = a;
    for (u64 i = 0; i < n_; ++i) {
        s = F.add(s, x);
        x = frob_q(Lv::QN, x, 1);
    }
    auto r = retract(Lv::QN, Lv::Q, s);
    if (!r) throw internal_error("trace_rel: result not in GF(q)");
    return *r;
}

u64 FieldTower::norm_rel(u64 a) const {
    if (a == 0) return 0;
    const FieldCtx& F = *cqn_;
    u64 ex = 0, qp = 1;
    for (u64 i = 0; i < n_; ++i) {
        ex += qp;
        qp *= q_;
    }
    u64 v = F.pow(a, ex);
    auto r = retract(Lv::QN, Lv::Q, v);
    if (!r) throw internal_error("norm_rel: result not in GF(q)");
    return *r;
}

u64 FieldTower::fq_rank(Lv lv, std::span<const u64> elems) const {
    u64 r = rel_deg(lv);
    Mat M(*cq_, elems.size(), r);
    for (std::size_t i = 0; i < elems.size(); ++i) {
        auto c = coords_q(lv, elems[i]);
        for (u64 j = 0; j < r; ++j) M.at(i, j) = c[j];
    }
    return rank(std::move(M));
}

namespace {

// Least root of the subfield defining polynomial inside the big field; scans
// the multiplicative subgroup of matching order plus zero.
u64 find_root(const FieldCtx& sub, const FieldCtx& big) {
    u64 sub_ord = sub.size() - 1;
    u64 big_ord = big.size() - 1;
    if (big_ord % sub_ord != 0) throw internal_error("find_root: not a subfield");
    u64 w = big.pow(big.primitive_element(), big_ord / sub_ord);
    auto eval = [&](u64 y) {
        u64 acc = 0, yp = 1;
        for (u32 i = 0; i <= sub.e(); ++i) {
            if (sub.defining()[i]) acc = big.add(acc, big.mul(sub.defining()[i], yp));
            yp = big.mul(yp, y);
        }
        return acc;
    };
    u64 best = 0;
    bool found = false;
    if (eval(0) == 0) return 0;
    u64 y = 1;
    for (u64 j = 0; j < sub_ord; ++j) {
        if (eval(y) == 0 && (!found || y < best)) {
            best = y;
            found = true;
        }
        y = big.mul(y, w);
    }
    if (!found) throw internal_error("find_root: no root found");
    return best;
}

}  // namespace

TowerRef FieldTower::make(u64 p, u64 h, u64 n, u64 m, u64 max_field_size) {
    if (!is_prime(p)) throw invalid_error("make_tower: p is not prime");
    if (h < 1 || n < 1 || m < 1) throw invalid_error("make_tower: h, n, m must be positive");
    long double sz = 1;
    for (u64 i = 0; i < h * n * m; ++i) sz *= static_cast<long double>(p);
    if (sz > static_cast<long double>(max_field_size))
        throw invalid_error("make_tower: p^(hnm) exceeds the configured size limit");

    auto tw = std::shared_ptr<FieldTower>(new FieldTower());
    tw->p_ = p;
    tw->h_ = h;
    tw->n_ = n;
    tw->m_ = m;
    tw->q_ = 1;
    for (u64 i = 0; i < h; ++i) tw->q_ *= p;
    tw->cq_ = field(p, static_cast<u32>(h));
    tw->cqn_ = field(p, static_cast<u32>(h * n));
    tw->ctop_ = (m == 1) ? tw->cqn_ : field(p, static_cast<u32>(h * n * m));

    auto build = [&](const CtxRef& sub, const CtxRef& big, Embedding& E, u64 back_limit) {
        if (*sub == *big) {
            E.identity = true;
            return;
        }
        u64 root = find_root(*sub, *big);
        E.basis_img.resize(sub->e());
        u64 acc = 1;
        for (u32 i = 0; i < sub->e(); ++i) {
            E.basis_img[i] = acc;
            acc = big->mul(acc, root);
        }
        if (sub->size() <= back_limit) {
            E.back.reserve(sub->size());
            for (u64 a = 0; a < sub->size(); ++a) E.back.emplace(tw->apply_emb(E, *sub, *big, a), a);
        }
    };
    build(tw->cq_, tw->cqn_, tw->e_q_qn_, 1ull << 20);
    build(tw->cqn_, tw->ctop_, tw->e_qn_top_, 1ull << 20);
    build(tw->cq_, tw->ctop_, tw->e_q_top_, 1ull << 20);
    // Make the chained embedding consistent: q -> top must equal q -> qn -> top.
    if (!tw->e_q_top_.identity) {
        Embedding chained;
        chained.basis_img.resize(tw->cq_->e());
        for (u32 i = 0; i < tw->cq_->e(); ++i) {
            u64 basis_el = tw->cq_->ppow(i);  // encoding of x_q^i
            chained.basis_img[i] = tw->apply_emb(tw->e_qn_top_, *tw->cqn_, *tw->ctop_,
                                                 tw->apply_emb(tw->e_q_qn_, *tw->cq_, *tw->cqn_, basis_el));
        }
        chained.back.reserve(tw->cq_->size());
        for (u64 a = 0; a < tw->cq_->size(); ++a)
            chained.back.emplace(tw->apply_emb(chained, *tw->cq_, *tw->ctop_, a), a);
        tw->e_q_top_ = std::move(chained);
    }

    // Frobenius exponent tables q^i mod (size-1) per level.
    auto fill_qi = [&](const CtxRef& c, u64 r, std::vector<u64>& qi) {
        u64 ord = c->size() - 1;
        qi.resize(r);
        u64 acc = 1 % ord;
        for (u64 i = 0; i < r; ++i) {
            qi[i] = acc;
            acc = static_cast<unsigned __int128>(acc) * tw->q_ % ord;
        }
    };
    fill_qi(tw->cqn_, n, tw->qi_qn_);
    fill_qi(tw->ctop_, n * m, tw->qi_top_);

    // GF(q)-coordinate matrices for h > 1.
    if (h > 1) {
        auto build_coord = [&](Lv lv, std::vector<std::vector<u32>>& out) {
            const FieldCtx& F = tw->ctx(lv);
            u32 e = F.e();
            u64 r = tw->rel_deg(lv);
            // columns (i, j): digits of embed(beta_j) * G^i, beta_j = x_q^j
            Mat M(*field(p, 1), e, e);
            u64 G = F.generator(), Gp = 1;
            for (u64 i = 0; i < r; ++i) {
                for (u64 j = 0; j < h; ++j) {
                    u64 beta = tw->cq_->ppow(static_cast<u32>(j));  // encoding of x_q^j
                    u64 el = F.mul(tw->embed(Lv::Q, lv, beta), Gp);
                    auto dv = F.digits(el);
                    for (u32 row = 0; row < e; ++row) M.at(row, i * h + j) = dv[row];
                }
                Gp = F.mul(Gp, G);
            }
            // invert M over GF(p)
            Mat A(*field(p, 1), e, 2 * e);
            for (u32 i = 0; i < e; ++i) {
                for (u32 j = 0; j < e; ++j) A.at(i, j) = M.at(i, j);
                A.at(i, e + i) = 1;
            }
            if (rref(A) != e) throw internal_error("coords: basis matrix singular");
            out.assign(e, std::vector<u32>(e, 0));
            for (u32 i = 0; i < e; ++i)
                for (u32 j = 0; j < e; ++j) out[i][j] = static_cast<u32>(A.at(i, e + j));
        };
        build_coord(Lv::QN, tw->coord_mat_qn_);
        build_coord(Lv::Top, tw->coord_mat_top_);
    }

    // Embedding verification: ring map, fixes GF(p), commutes with Frobenius,
    // image of GF(q) is the fixed field of x -> x^q.
    {
        const FieldCtx& Fq = *tw->cq_;
        u64 check = std::min<u64>(Fq.size(), 64);
        for (u64 a = 0; a < check; ++a)
            for (u64 b = 0; b < std::min<u64>(Fq.size(), 8); ++b) {
                u64 ea = tw->embed(Lv::Q, Lv::QN, a), eb = tw->embed(Lv::Q, Lv::QN, b);
                if (tw->embed(Lv::Q, Lv::QN, Fq.add(a, b)) != tw->cqn_->add(ea, eb) ||
                    tw->embed(Lv::Q, Lv::QN, Fq.mul(a, b)) != tw->cqn_->mul(ea, eb))
                    throw internal_error("make_tower: embedding is not a ring map");
            }
        for (u64 a = 0; a < check; ++a) {
            u64 ea = tw->embed(Lv::Q, Lv::QN, a);
            if (tw->frob_q(Lv::QN, ea, 1) != ea)
                throw internal_error("make_tower: GF(q) image not fixed by Frobenius");
        }
        if (m > 1) {
            u64 g = tw->cqn_->generator();
            u64 lhs = tw->embed(Lv::QN, Lv::Top, tw->frob_q(Lv::QN, g, 1));
            u64 rhs = tw->frob_q(Lv::Top, tw->embed(Lv::QN, Lv::Top, g), 1);
            if (lhs != rhs) throw internal_error("make_tower: embedding does not commute with Frobenius");
        }
    }
    return tw;
}

TowerRef make_tower(u64 p, u64 h, u64 n, u64 m, u64 max_field_size) {
    struct Key {
        u64 p, h, n, m;
        bool operator==(const Key&) const = default;
    };
    struct KeyHash {
        std::size_t operator()(const Key& k) const {
            u64 x = k.p * 0x9e3779b97f4a7c15ull ^ k.h * 0xbf58476d1ce4e5b9ull ^
                    k.n * 0x94d049bb133111ebull ^ k.m;
            return static_cast<std::size_t>(x ^ (x >> 29));
        }
    };
    static std::mutex mu;
    static std::unordered_map<Key, TowerRef, KeyHash> cache;
    std::lock_guard<std::mutex> lock(mu);
    Key key{p, h, n, m};
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    TowerRef tw = FieldTower::make(p, h, n, m, max_field_size);
    cache.emplace(key, tw);
    return tw;
}

}  // namespace rmc
