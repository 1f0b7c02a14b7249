#ifndef RMC_LINPOLY_HPP
#define RMC_LINPOLY_HPP

#include <utility>
#include <vector>

#include "rmc/gf.hpp"
#include "rmc/linalg.hpp"

namespace rmc {

/// A q-linearized polynomial sum a_i x^{q^i} of q-degree < rel_deg over the
/// given tower level (GF(q^n) or GF(q^{nm})).  Immutable plain data.
class LinPoly {
public:
    LinPoly(TowerRef tw, Lv lv, std::vector<u64> coeffs);

    static LinPoly zero(TowerRef tw, Lv lv);
    static LinPoly identity(TowerRef tw, Lv lv);  // f(x) = x
    static LinPoly monomial(TowerRef tw, Lv lv, u64 qexp, u64 coeff = 1);

    const TowerRef& tower() const { return tw_; }
    Lv level() const { return lv_; }
    const FieldCtx& fld() const { return tw_->ctx(lv_); }
    const std::vector<u64>& coeffs() const { return a_; }
    u64 deg_bound() const { return a_.size(); }
    bool is_zero() const;
    bool is_separable() const { return a_[0] != 0; }

    u64 evaluate(u64 x) const;
    LinPoly compose(const LinPoly& g) const;  // this after g, mod x^{q^N} - x
    Mat as_matrix() const;                    // over GF(q), basis 1, G, ..., G^{N-1}
    u64 kernel_dim() const;
    /// (mindeg_q, deg_q); errors on the zero polynomial.
    std::pair<u64, u64> qdeg_bounds() const;

    /// Coefficient-wise p-power automorphism x -> x^{p^r} applied to the a_i.
    LinPoly coeff_power(u64 r) const;

    LinPoly add(const LinPoly& g) const;
    LinPoly sub(const LinPoly& g) const;
    LinPoly scale(u64 c) const;

    friend bool operator==(const LinPoly& f, const LinPoly& g) {
        return f.lv_ == g.lv_ && f.a_ == g.a_;
    }

private:
    TowerRef tw_;
    Lv lv_;
    std::vector<u64> a_;
};

/// Lifts f in L_{n,q} over GF(q^n) to L_{nm,q} over GF(q^{nm}).
LinPoly lift(const LinPoly& f, u64 m);

/// Rejection-samples a LinPoly with trivial kernel; deterministic in the seed.
LinPoly random_invertible(const TowerRef& tw, Lv lv, u64 seed);

LinPoly random_linpoly(const TowerRef& tw, Lv lv, Rng& rng);

void require_same_field(const LinPoly& f, const LinPoly& g);

}  // namespace rmc

#endif
