#ifndef RMC_GF_HPP
#define RMC_GF_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "rmc/errors.hpp"

namespace rmc {

using u32 = std::uint32_t;
using u64 = std::uint64_t;

/// Arithmetic context for GF(p^e), constructed as GF(p)[x]/(defining poly).
///
/// Elements are encoded as base-p integers of their coefficient vector in the
/// power basis 1, x, ..., x^{e-1}; digit c_0 is least significant.  The
/// defining polynomial is the monic irreducible of degree e whose coefficient
/// encoding is lexicographically minimal (not Conway-compatible), unless an
/// explicit polynomial is supplied.  Fields up to kTableLimit elements carry
/// log/exp tables; larger ones fall back to schoolbook arithmetic.
class FieldCtx {
public:
    static constexpr u64 kTableLimit = 1ull << 22;

    FieldCtx(u64 p, u32 e);                             // minimal defining polynomial
    FieldCtx(u64 p, std::vector<u32> defining_coeffs);  // explicit monic irreducible, c_0..c_e

    u64 p() const { return p_; }
    u32 e() const { return e_; }
    u64 size() const { return size_; }
    const std::vector<u32>& defining() const { return defining_; }
    /// Residue class of the indeterminate (1 for prime fields).
    u64 generator() const { return e_ == 1 ? 1 : p_; }
    bool has_tables() const { return !log_.empty(); }

    u64 add(u64 a, u64 b) const;
    u64 sub(u64 a, u64 b) const;
    u64 neg(u64 a) const;
    u64 mul(u64 a, u64 b) const;
    u64 inv(u64 a) const;
    u64 pow(u64 a, u64 k) const;
    /// a^(p^i); with tables this is a single index operation.
    u64 frob_p(u64 a, u64 i = 1) const;
    /// c*a with c in [0, p).
    u64 scalar_mul(u64 c, u64 a) const { return mul(c % p_, a); }

    std::vector<u32> digits(u64 a) const;
    u64 from_digits(std::span<const u32> d) const;
    u64 ppow(u32 i) const { return ppow_[i]; }

    /// Least-encoding multiplicative generator (used to seed the log tables).
    u64 primitive_element() const;

private:
    void init();
    u64 mul_raw(u64 a, u64 b) const;  // schoolbook, table-free
    u64 pow_raw(u64 a, u64 k) const;

    u64 p_ = 0;
    u32 e_ = 0;
    u64 size_ = 0;
    std::vector<u32> defining_;  // length e+1, monic
    std::vector<u64> ppow_;      // p^i for i <= e
    std::vector<u32> log_, exp_;
    u64 primitive_ = 0;
};

bool operator==(const FieldCtx& a, const FieldCtx& b);
inline bool operator!=(const FieldCtx& a, const FieldCtx& b) { return !(a == b); }

using CtxRef = std::shared_ptr<const FieldCtx>;

/// Shared, cached context for GF(p^e) with the deterministic defining polynomial.
CtxRef field(u64 p, u32 e);

bool is_prime(u64 p);

/// A field element tagged with its owning context; checked plain-data value type.
struct FieldElem {
    u64 v = 0;
    CtxRef ctx;

    FieldElem() = default;
    FieldElem(u64 value, CtxRef c) : v(value), ctx(std::move(c)) {
        if (!ctx || v >= ctx->size()) throw invalid_error("FieldElem: encoding out of range");
    }
};

inline FieldElem operator+(const FieldElem& a, const FieldElem& b) {
    if (*a.ctx != *b.ctx) throw invalid_error("FieldElem: context mismatch");
    return {a.ctx->add(a.v, b.v), a.ctx};
}
inline FieldElem operator*(const FieldElem& a, const FieldElem& b) {
    if (*a.ctx != *b.ctx) throw invalid_error("FieldElem: context mismatch");
    return {a.ctx->mul(a.v, b.v), a.ctx};
}
inline bool operator==(const FieldElem& a, const FieldElem& b) { return *a.ctx == *b.ctx && a.v == b.v; }

enum class Lv { Q, QN, Top };

/// The chain GF(p) < GF(q) < GF(q^n) < GF(q^{nm}) with q = p^h, together with
/// verified embeddings, Frobenius-by-q data and GF(q)-coordinate maps.
/// Immutable after construction; all operations are pure.
class FieldTower {
public:
    using Ref = std::shared_ptr<const FieldTower>;
    static Ref make(u64 p, u64 h, u64 n, u64 m, u64 max_field_size = 1ull << 32);

    u64 p() const { return p_; }
    u64 h() const { return h_; }
    u64 n() const { return n_; }
    u64 m() const { return m_; }
    u64 q() const { return q_; }

    const FieldCtx& ctx(Lv lv) const { return *ctx_ref(lv); }
    const CtxRef& ctx_ref(Lv lv) const;
    /// Degree over GF(q): 1, n, n*m.
    u64 rel_deg(Lv lv) const;

    /// x -> x^{q^i} at the given level; i may be any integer.
    u64 frob_q(Lv lv, u64 a, std::int64_t i = 1) const;

    u64 embed(Lv from, Lv to, u64 a) const;
    /// a at level `from`, pulled down to the subfield level `to`; nullopt when
    /// a is not in the embedded image.
    std::optional<u64> retract(Lv from, Lv to, u64 a) const;

    /// Coordinates in the GF(q)-basis 1, G, ..., G^{rel_deg-1}, G the level generator.
    std::vector<u64> coords_q(Lv lv, u64 a) const;
    u64 from_coords_q(Lv lv, std::span<const u64> c) const;

    /// Tr_{q^n/q} on the GF(q^n) level; result is a GF(q) encoding.
    u64 trace_rel(u64 a) const;
    /// N_{q^n/q}; result is a GF(q) encoding.
    u64 norm_rel(u64 a) const;

    /// dim over GF(q) of the span of the given level elements.
    u64 fq_rank(Lv lv, std::span<const u64> elems) const;

private:
    FieldTower() = default;

    struct Embedding {
        std::vector<u64> basis_img;  // images of 1, x, ..., x^{e_from-1}
        std::unordered_map<u64, u64> back;
        bool identity = false;
    };
    const Embedding& emb(Lv from, Lv to) const;
    u64 apply_emb(const Embedding& E, const FieldCtx& from, const FieldCtx& to, u64 a) const;

    u64 p_, h_, n_, m_, q_;
    CtxRef cq_, cqn_, ctop_;
    Embedding e_q_qn_, e_qn_top_, e_q_top_;
    // q^i mod (size-1) per level, for Frobenius powers via log tables.
    std::vector<u64> qi_qn_, qi_top_;
    // GF(p)-matrix turning digit vectors into GF(q)-coordinate digit blocks (h > 1 only).
    std::vector<std::vector<u32>> coord_mat_qn_, coord_mat_top_;
};

using TowerRef = FieldTower::Ref;

/// Free-function tower constructor (p prime, sizes guarded).
TowerRef make_tower(u64 p, u64 h, u64 n, u64 m, u64 max_field_size = 1ull << 32);

/// Deterministic PRNG used for seeded sampling (splitmix64).
struct Rng {
    u64 state;
    explicit Rng(u64 seed) : state(seed) {}
    u64 next() {
        u64 z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    u64 below(u64 n) { return next() % n; }
};

}  // namespace rmc

#endif
