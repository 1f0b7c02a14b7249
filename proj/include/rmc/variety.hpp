#ifndef RMC_VARIETY_HPP
#define RMC_VARIETY_HPP

#include <vector>

#include "rmc/moore.hpp"
#include "rmc/mvpoly.hpp"

namespace rmc {

/// det(M_f(X_1, ..., X_k)) as a sparse polynomial: entry (i, j) is
/// sum_l a_{jl} X_i^{q^l}.  Total degree sum_j q^{M_j}.
MvPoly build_F(const MoorePolySet& f, const Guard& g = {});

/// Product of the projective linear forms a_1 X_1 + ... + a_k X_k over
/// PG(k-1, q), representatives normalized to last nonzero coordinate 1; equals
/// build_F((x, x^q, ..., x^{q^{k-1}})).
MvPoly build_V(const TowerRef& tw, Lv lv, u64 k, const Guard& g = {});

/// Exact quotient build_F / build_V; throws internal_error on a nonzero
/// remainder at any division step.
MvPoly build_W(const MoorePolySet& f, const Guard& g = {});

/// The projective representatives used by build_V, in enumeration order.
std::vector<std::vector<u64>> projective_points_fq(const TowerRef& tw, u64 k);

/// Affine points P of A^k(GF(q^n)) with W(P) = 0 and fq_rank(P) = k; empty
/// exactly when f is a Moore polynomial set.
std::vector<std::vector<u64>> points_off_V(const MvPoly& W, const MoorePolySet& f, const Guard& g = {});

/// sum_j a_j x^{q^j} z^{q^M - q^j}, homogeneous of degree q^M = q^{deg_q f}.
MvPoly homogenize_f(const LinPoly& f);

/// H_f(X_1, X_2) = F_f(X_1, X_2, lambda_3, ..., lambda_k); the lambdas must be
/// F_q-independent.  k = 2 with no lambdas gives H = F.
MvPoly specialize_curve(const MoorePolySet& f, std::span<const u64> lambdas, const Guard& g = {});

struct LowestFormReport {
    u64 m = 0;        // multiplicity of P on the curve (0: not on it)
    MvPoly form_m;    // lowest nonzero homogeneous part of the shift
    MvPoly form_m1;   // next homogeneous part (may be zero)
};
LowestFormReport translate_lowest_form(const MvPoly& H, u64 alpha, u64 beta);

/// Roots in PG(1, q^n) of the top homogeneous form of H, as pairs (x1, x2)
/// with representative (1, gamma) or (0, 1).
std::vector<std::pair<u64, u64>> points_at_infinity(const MvPoly& H);

/// Points of GF(q^n)^2 where H and both formal partials vanish.
std::vector<std::pair<u64, u64>> singular_points_affine(const MvPoly& H, const Guard& g = {});

}  // namespace rmc

#endif
