#ifndef RMC_MVPOLY_HPP
#define RMC_MVPOLY_HPP

#include <map>
#include <span>
#include <vector>

#include "rmc/gf.hpp"

namespace rmc {

/// Graded-lexicographic order on exponent vectors: total degree first, then
/// lexicographic on the entries.  This is the canonical serialization order.
struct GradedLex {
    bool operator()(const std::vector<u64>& a, const std::vector<u64>& b) const;
};

/// Sparse exact multivariate polynomial over a fixed finite field; no zero
/// coefficients are stored.  Immutable in spirit: operations return new values.
class MvPoly {
public:
    using TermMap = std::map<std::vector<u64>, u64, GradedLex>;

    MvPoly(CtxRef ctx, u64 arity);
    static MvPoly constant(CtxRef ctx, u64 arity, u64 c);
    /// Single variable X_{var} (zero-based).
    static MvPoly variable(CtxRef ctx, u64 arity, u64 var);

    const CtxRef& ctx() const { return ctx_; }
    const FieldCtx& fld() const { return *ctx_; }
    u64 arity() const { return arity_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    /// Inserts c * X^e (adds to an existing term; drops resulting zeros).
    void add_term(std::vector<u64> e, u64 c);

    u64 degree() const;         // max total degree; 0 for the zero polynomial
    u64 lowest_degree() const;  // min total degree; 0 for the zero polynomial

    MvPoly add(const MvPoly& g) const;
    MvPoly sub(const MvPoly& g) const;
    MvPoly mul(const MvPoly& g) const;
    MvPoly neg() const;
    MvPoly scale(u64 c) const;

    u64 evaluate(std::span<const u64> point) const;
    /// Substitutes the constant value for variable `var`, dropping the slot
    /// (arity decreases by one).
    MvPoly substitute(u64 var, u64 value) const;
    /// Formal partial derivative (characteristic-p rule).
    MvPoly derivative(u64 var) const;
    /// Sum of the stored terms of total degree exactly d.
    MvPoly homogeneous_part(u64 d) const;
    /// X_i -> X_i + shift_i, expanded exactly (binomials mod p via Lucas).
    MvPoly translate(std::span<const u64> shift) const;

    friend bool operator==(const MvPoly& f, const MvPoly& g) {
        return f.arity_ == g.arity_ && f.terms_ == g.terms_;
    }

private:
    CtxRef ctx_;
    u64 arity_;
    TermMap terms_;
};

/// Exact division of f by the linear form sum coeffs[j] * X_j, whose last
/// nonzero coefficient must be 1 (the pivot variable).  Throws internal_error
/// on a nonzero remainder.
MvPoly divide_by_linear_form(const MvPoly& f, std::span<const u64> coeffs);

/// Binomial coefficient C(n, k) mod p by Lucas' theorem.
u64 binom_mod_p(u64 n, u64 k, u64 p);

}  // namespace rmc

#endif
