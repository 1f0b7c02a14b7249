#ifndef RMC_CODE_HPP
#define RMC_CODE_HPP

#include <optional>
#include <vector>

#include "rmc/errors.hpp"
#include "rmc/linpoly.hpp"

namespace rmc {

/// An F_{q^N}-linear rank-metric code: the span of k independent LinPolys.
class RankMetricCode {
public:
    explicit RankMetricCode(std::vector<LinPoly> basis);

    const TowerRef& tower() const { return tw_; }
    Lv level() const { return lv_; }
    const FieldCtx& fld() const { return tw_->ctx(lv_); }
    u64 k() const { return basis_.size(); }
    u64 n_rel() const { return tw_->rel_deg(lv_); }
    const std::vector<LinPoly>& basis() const { return basis_; }

    /// Codeword for a coefficient tuple b (length k over the big field).
    LinPoly codeword(std::span<const u64> b) const;
    /// Membership test / representation of f as a combination of the basis.
    std::optional<std::vector<u64>> represent(const LinPoly& f) const;

    /// Number of projective codewords (first nonzero coefficient = 1);
    /// saturates at UINT64_MAX.
    u64 projective_count() const;
    /// Tuple for a sweep index, in the deterministic lexicographic order.
    std::vector<u64> projective_tuple(u64 index) const;

private:
    TowerRef tw_;
    Lv lv_;
    std::vector<LinPoly> basis_;
};

struct MrdReport {
    bool verdict = false;
    /// True minimum distance when verdict is true or a full sweep ran;
    /// the witness's rank (an upper bound on d) on an early-exit failure.
    u64 min_distance = 0;
    /// Coefficient tuple of a codeword with kernel dimension >= k; present iff
    /// verdict is false.
    std::optional<std::vector<u64>> witness;
    enum class Method { CodewordSweep, SubspaceSweep } method = Method::CodewordSweep;
};

u64 min_distance(const RankMetricCode& C, const Guard& g = {});
MrdReport is_mrd(const RankMetricCode& C, const Guard& g = {});

/// Counts of projective codewords per rank value (index 0..n_rel).
std::vector<u64> rank_weight_distribution(const RankMetricCode& C, const Guard& g = {});

/// Delsarte dual under b(f, g) = Tr(sum a_i b_i); nullopt for k = n (zero dual).
std::optional<RankMetricCode> delsarte_dual(const RankMetricCode& C);

struct IdealiserReport {
    u64 dim_fq = 0;
    std::vector<LinPoly> basis;
};
IdealiserReport left_idealiser(const RankMetricCode& C);
IdealiserReport right_idealiser(const RankMetricCode& C);

/// g o C^rho o h with rho the p-power Frobenius exponent applied to coefficients.
RankMetricCode transform(const RankMetricCode& C, const LinPoly& g, const LinPoly& h, u64 rho_exp);

RankMetricCode lift_code(const RankMetricCode& C, u64 m);

struct ProbeEntry {
    u64 m = 0;
    bool skipped = false;  // size guard hit at this level
    MrdReport report;
};
struct ProbeResult {
    std::vector<ProbeEntry> entries;
    bool truncated = false;
};
ProbeResult exceptional_probe(const RankMetricCode& C, u64 m_max, const Guard& g = {});

struct Fingerprint {
    u64 q = 0, n = 0, k = 0, d = 0;
    std::vector<u64> weight_distribution;
    u64 dim_left = 0, dim_right = 0;
    friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
};
Fingerprint fingerprint(const RankMetricCode& C, const Guard& g = {});

/// Seeded generator for k-dimensional codes (used by test pools and the CLI).
RankMetricCode random_code(const TowerRef& tw, Lv lv, u64 k, u64 seed);

/// Rank of one codeword tuple; exposed for cross-checks.
u64 codeword_rank(const RankMetricCode& C, std::span<const u64> b);

}  // namespace rmc

#endif
