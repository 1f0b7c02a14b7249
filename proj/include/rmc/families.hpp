#ifndef RMC_FAMILIES_HPP
#define RMC_FAMILIES_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "rmc/code.hpp"
#include "rmc/linpoly.hpp"

namespace rmc {

/// One side condition of a family, evaluated exactly when verifiable.
struct Condition {
    std::string name;
    bool holds = false;
    /// False for conditions the construction cannot decide (e.g. "certain
    /// choices of delta"); holds is then not asserted.
    bool verifiable = true;
};

struct FamilyCode {
    RankMetricCode code;
    std::vector<Condition> validity;
    bool all_verifiable_hold() const {
        for (const auto& c : validity)
            if (c.verifiable && !c.holds) return false;
        return true;
    }
};

struct FamilyPoly {
    LinPoly poly;
    u64 index_t = 0;
    std::vector<Condition> validity;
};

/// (G): <x, x^{q^s}, ..., x^{q^{s(k-1)}}>, exponents mod n; gcd(s, n) = 1.
FamilyCode gabidulin(const TowerRef& tw, u64 k, u64 s);

/// (T): <x^{q^s}, ..., x^{q^{s(k-1)}}, x + delta x^{q^{sk}}> with
/// N_{q^n/q}(delta) != (-1)^{nk}.
FamilyCode twisted_gabidulin(const TowerRef& tw, u64 k, u64 s, u64 delta);

/// (Ps): x^{q^s}, index 0; gcd(s, n) = 1.
FamilyPoly pseudoregulus(const TowerRef& tw, u64 s);

/// (LP): x + delta x^{q^{2s}}, index s; gcd(s, n) = 1 and N(delta) != 1.
FamilyPoly lp_poly(const TowerRef& tw, u64 s, u64 delta);

/// Rows 3-14 of the known-example table; s and delta are ignored by rows that
/// do not use them.  Violated conditions are recorded in validity, and the
/// construction is still returned; only structural impossibilities throw.
FamilyCode table1_row(u64 row_id, const TowerRef& tw, u64 s = 1, u64 delta = 0);

/// Least-encoding nonzero element of the given level satisfying pred.
std::optional<u64> find_delta(const TowerRef& tw, Lv lv, const std::function<bool(u64)>& pred);

/// Least delta in GF(q^{2t}) with relative norm delta^{q^t + 1} = -1
/// (tower n must equal 2t).
std::optional<u64> find_delta_rel_norm_minus1(const TowerRef& tw);

}  // namespace rmc

#endif
