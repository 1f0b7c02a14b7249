#ifndef RMC_MOORE_HPP
#define RMC_MOORE_HPP

#include <array>
#include <optional>
#include <vector>

#include "rmc/code.hpp"
#include "rmc/linpoly.hpp"

namespace rmc {

/// Ordered tuple (f_1, ..., f_k) of independent LinPolys, optionally carrying
/// the index t and the outcome of the five normalization conditions.
struct MoorePolySet {
    std::vector<LinPoly> polys;
    std::optional<u64> index_t;
    /// Conditions (1)-(5): monic+independent, distinct top degrees, distinct
    /// min-degrees with one zero, f_1 = x^{q^t}, monomial placement.
    std::array<bool, 5> assumption_flags{};

    explicit MoorePolySet(std::vector<LinPoly> fs);

    const TowerRef& tower() const { return polys[0].tower(); }
    Lv level() const { return polys[0].level(); }
    u64 k() const { return polys.size(); }
    RankMetricCode span() const { return RankMetricCode(polys); }
};

struct MooreReport {
    bool verdict = false;
    /// Tuple (alpha_1, ..., alpha_k) with det(Moore matrix) = 0 yet fq_rank = k;
    /// present iff verdict is false.
    std::optional<std::vector<u64>> witness;
    enum class Method { Oracle, Mrd, Variety } method = Method::Oracle;
};

/// Signals that no monomial x^{q^t} lies in the code, so its index is undefined.
struct no_monomial_error : invalid_error {
    no_monomial_error() : invalid_error("index_of: the code contains no monomial x^{q^t}") {}
};

/// k x k matrix over the big field with entry (i, j) = f_j(alpha_i).
Mat moore_matrix(const MoorePolySet& f, std::span<const u64> A);

/// Brute force over all tuples in (GF(q^n)*)^k: checks det = 0 => F_q-dependent.
MooreReport is_moore_oracle(const MoorePolySet& f, const Guard& g = {});

/// Via the MRD sweep on the span; failure witnesses are converted to tuples.
MooreReport is_moore(const MoorePolySet& f, const Guard& g = {});

/// Least t in [0, n) with x^{q^t} in C; throws no_monomial_error otherwise.
u64 index_of(const RankMetricCode& C);

/// Basis change toward conditions (1)-(5); flags record which hold, nothing is
/// silently faked.
MoorePolySet normalize(const RankMetricCode& C);

/// True iff the (optionally sorted) distinct exponents form an arithmetic
/// progression; length <= 2 is vacuously true.  Throws on duplicates.
bool is_ap(std::vector<std::int64_t> exponents, bool allow_permutation);

struct MooreProbeEntry {
    u64 m = 0;
    bool skipped = false;
    MooreReport report;
};
struct MooreProbeResult {
    std::vector<MooreProbeEntry> entries;
    bool truncated = false;
};
MooreProbeResult exceptional_moore_probe(const MoorePolySet& f, u64 m_max, const Guard& g = {});

/// Witness re-check shared with the CLI: det = 0 and fq_rank = k.
bool verify_moore_witness(const MoorePolySet& f, std::span<const u64> A);

}  // namespace rmc

#endif
