#include "rmc/serial.hpp"

#include <charconv>

namespace rmc::serial {

namespace {

bool is_nonneg_int(const json& j) {
    return j.is_number_unsigned() || (j.is_number_integer() && j.get<std::int64_t>() >= 0);
}

u64 get_u64(const json& j, const char* key) {
    if (!j.contains(key) || !is_nonneg_int(j[key]))
        throw invalid_error(std::string("expected unsigned field '") + key + "'");
    return j[key].get<u64>();
}

u64 checked_elem(const json& j, const FieldCtx& F) {
    if (!is_nonneg_int(j)) throw invalid_error("element encoding must be an unsigned integer");
    u64 v = j.get<u64>();
    if (v >= F.size()) throw invalid_error("element encoding out of range");
    return v;
}

}  // namespace

Lv level_of(const FieldTower& tw) { return tw.m() > 1 ? Lv::Top : Lv::QN; }

json tower_to_json(const FieldTower& tw) {
    json defs;
    defs["q"] = tw.ctx(Lv::Q).defining();
    defs["qn"] = tw.ctx(Lv::QN).defining();
    defs["top"] = tw.ctx(Lv::Top).defining();
    return json{{"p", tw.p()}, {"h", tw.h()}, {"n", tw.n()}, {"m", tw.m()}, {"defining_polys", defs}};
}

TowerRef tower_from_json(const json& j) {
    if (!j.is_object()) throw invalid_error("field spec must be an object");
    u64 p = get_u64(j, "p");
    u64 h = j.contains("h") ? get_u64(j, "h") : 1;
    u64 n = get_u64(j, "n");
    u64 m = j.contains("m") ? get_u64(j, "m") : 1;
    return make_tower(p, h, n, m);
}

json linpoly_to_json(const LinPoly& f) { return json{{"coeffs", f.coeffs()}}; }

LinPoly linpoly_from_json(const TowerRef& tw, Lv lv, const json& j) {
    const FieldCtx& F = tw->ctx(lv);
    u64 N = tw->rel_deg(lv);
    std::vector<u64> c(N, 0);
    if (j.is_object() && j.contains("coeffs")) {
        const json& arr = j["coeffs"];
        if (!arr.is_array() || arr.size() != N)
            throw invalid_error("linpoly coeffs must be an array of length n");
        for (u64 i = 0; i < N; ++i) c[i] = checked_elem(arr[i], F);
    } else if (j.is_object() && j.contains("terms")) {
        for (const auto& t : j["terms"]) {
            if (!t.is_array() || t.size() != 2) throw invalid_error("linpoly term must be [i, coeff]");
            u64 i = t[0].get<u64>();
            if (i >= N) throw invalid_error("linpoly term exponent out of range");
            c[i] = F.add(c[i], checked_elem(t[1], F));
        }
    } else {
        throw invalid_error("linpoly must carry 'coeffs' or 'terms'");
    }
    return LinPoly(tw, lv, std::move(c));
}

json code_to_json(const RankMetricCode& C) {
    json basis = json::array();
    for (const auto& f : C.basis()) basis.push_back(linpoly_to_json(f));
    return json{{"field", tower_to_json(*C.tower())}, {"basis", basis}};
}

RankMetricCode code_from_json(const json& j) {
    if (!j.is_object() || !j.contains("field") || !j.contains("basis"))
        throw invalid_error("code must carry 'field' and 'basis'");
    TowerRef tw = tower_from_json(j["field"]);
    Lv lv = level_of(*tw);
    std::vector<LinPoly> basis;
    for (const auto& b : j["basis"]) basis.push_back(linpoly_from_json(tw, lv, b));
    return RankMetricCode(std::move(basis));
}

json mvpoly_to_json(const MvPoly& f) {
    json out = json::array();
    for (const auto& [e, c] : f.terms()) out.push_back(json::array({e, c}));
    return out;
}

MvPoly mvpoly_from_json(const CtxRef& ctx, u64 arity, const json& j) {
    if (!j.is_array()) throw invalid_error("mvpoly must be an array of [exponents, coeff]");
    MvPoly f(ctx, arity);
    for (const auto& t : j) {
        if (!t.is_array() || t.size() != 2) throw invalid_error("mvpoly term must be [exponents, coeff]");
        std::vector<u64> e = t[0].get<std::vector<u64>>();
        f.add_term(std::move(e), checked_elem(t[1], *ctx));
    }
    return f;
}

json mrd_report_to_json(const MrdReport& r) {
    json out{{"verdict", r.verdict},
             {"min_distance", r.min_distance},
             {"method", r.method == MrdReport::Method::CodewordSweep ? "codeword-sweep" : "subspace-sweep"}};
    if (r.witness) out["witness"] = *r.witness;
    return out;
}

json moore_report_to_json(const MooreReport& r) {
    const char* m = r.method == MooreReport::Method::Oracle  ? "oracle"
                    : r.method == MooreReport::Method::Mrd   ? "mrd"
                                                             : "variety";
    json out{{"verdict", r.verdict}, {"method", m}};
    if (r.witness) out["witness"] = *r.witness;
    return out;
}

json idealiser_to_json(const IdealiserReport& r) {
    json basis = json::array();
    for (const auto& f : r.basis) basis.push_back(linpoly_to_json(f));
    return json{{"dim_fq", r.dim_fq}, {"basis", basis}};
}

json probe_to_json(const ProbeResult& r) {
    json entries = json::array();
    for (const auto& e : r.entries) {
        json je{{"m", e.m}, {"skipped", e.skipped}};
        if (!e.skipped) je["report"] = mrd_report_to_json(e.report);
        entries.push_back(je);
    }
    return json{{"entries", entries}, {"truncated", r.truncated}};
}

json moore_probe_to_json(const MooreProbeResult& r) {
    json entries = json::array();
    for (const auto& e : r.entries) {
        json je{{"m", e.m}, {"skipped", e.skipped}};
        if (!e.skipped) je["report"] = moore_report_to_json(e.report);
        entries.push_back(je);
    }
    return json{{"entries", entries}, {"truncated", r.truncated}};
}

json fingerprint_to_json(const Fingerprint& fp) {
    return json{{"q", fp.q},
                {"n", fp.n},
                {"k", fp.k},
                {"d", fp.d},
                {"weight_distribution", fp.weight_distribution},
                {"dim_left_idealiser", fp.dim_left},
                {"dim_right_idealiser", fp.dim_right}};
}

json validity_to_json(const std::vector<Condition>& conds) {
    json out = json::array();
    for (const auto& c : conds) {
        json jc{{"condition", c.name}};
        if (c.verifiable)
            jc["holds"] = c.holds;
        else
            jc["holds"] = "unverifiable-condition";
        out.push_back(jc);
    }
    return out;
}

json moore_set_to_json(const MoorePolySet& f) {
    json polys = json::array();
    for (const auto& fp : f.polys) polys.push_back(linpoly_to_json(fp));
    u64 bits = 0;
    json flags = json::array();
    for (u64 i = 0; i < 5; ++i) {
        flags.push_back(f.assumption_flags[i]);
        if (f.assumption_flags[i]) bits |= 1ull << i;
    }
    json out{{"polys", polys}, {"assumption_flags", flags}, {"assumption_bits", bits}};
    if (f.index_t) out["index_t"] = *f.index_t;
    return out;
}

u64 parse_element(const std::string& s, const FieldCtx& ctx) {
    if (s.empty()) throw invalid_error("parse_element: empty string");
    auto parse_int = [](std::string_view sv) -> u64 {
        u64 v = 0;
        auto [p, ec] = std::from_chars(sv.data(), sv.data() + sv.size(), v);
        if (ec != std::errc{} || p != sv.data() + sv.size())
            throw invalid_error("parse_element: malformed integer");
        return v;
    };
    if (s[0] == 'g') {
        u64 k = 0;
        if (s == "g")
            k = 1;
        else if (s.size() > 2 && s[1] == '^')
            k = parse_int(std::string_view(s).substr(2));
        else
            throw invalid_error("parse_element: expected g^k");
        return ctx.pow(ctx.generator(), k);
    }
    u64 v = parse_int(s);
    if (v >= ctx.size()) throw invalid_error("parse_element: encoding out of range");
    return v;
}

}  // namespace rmc::serial
