#ifndef RMC_SERIAL_HPP
#define RMC_SERIAL_HPP

#include <string>

#include <json.hpp>

#include "rmc/code.hpp"
#include "rmc/families.hpp"
#include "rmc/moore.hpp"
#include "rmc/mvpoly.hpp"
#include "rmc/variety.hpp"

namespace rmc::serial {

using json = nlohmann::json;

/// Field spec: {"p", "h", "n", "m"} with the defining polynomials echoed on
/// output for reproducibility.  Elements travel as base-p integer encodings.
json tower_to_json(const FieldTower& tw);
TowerRef tower_from_json(const json& j);

/// The working level of a tower: Top when m > 1, else QN.
Lv level_of(const FieldTower& tw);

/// Dense {"coeffs": [...]} or sparse {"terms": [[i, c], ...]}.
json linpoly_to_json(const LinPoly& f);
LinPoly linpoly_from_json(const TowerRef& tw, Lv lv, const json& j);

/// {"field": {...}, "basis": [...]}.
json code_to_json(const RankMetricCode& C);
RankMetricCode code_from_json(const json& j);

/// Canonical graded-lex list of [exponent-vector, coefficient].
json mvpoly_to_json(const MvPoly& f);
MvPoly mvpoly_from_json(const CtxRef& ctx, u64 arity, const json& j);

json mrd_report_to_json(const MrdReport& r);
json moore_report_to_json(const MooreReport& r);
json idealiser_to_json(const IdealiserReport& r);
json probe_to_json(const ProbeResult& r);
json moore_probe_to_json(const MooreProbeResult& r);
json fingerprint_to_json(const Fingerprint& fp);
json validity_to_json(const std::vector<Condition>& conds);
/// Flags as a 5-bit record plus the per-condition booleans.
json moore_set_to_json(const MoorePolySet& f);

/// Base-10 integer in [0, size) or "g^k" via the residue-class generator.
u64 parse_element(const std::string& s, const FieldCtx& ctx);

}  // namespace rmc::serial

#endif
