// Command-line prover for rank-metric codes built from linearized polynomials.
// JSON requests on stdin (or --in), JSON responses on stdout (or --out).
// Exit codes: 0 ok, 2 property false with certificate, 3 guard exceeded,
// 4 invalid input.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "rmc/families.hpp"
#include "rmc/moore.hpp"
#include "rmc/parallel.hpp"
#include "rmc/serial.hpp"
#include "rmc/suite.hpp"
#include "rmc/variety.hpp"

using namespace rmc;
using serial::json;

namespace {

struct Ctx {
    std::string in_path, out_path;
    u64 max_steps = 1ull << 24;
    u64 seed = 1;
    unsigned threads = 1;
    Guard guard() const { return Guard{max_steps}; }
};

json read_request(const Ctx& c) {
    std::string text;
    if (!c.in_path.empty()) {
        std::ifstream f(c.in_path);
        if (!f) throw invalid_error("cannot open input file: " + c.in_path);
        std::stringstream ss;
        ss << f.rdbuf();
        text = ss.str();
    } else {
        std::stringstream ss;
        ss << std::cin.rdbuf();
        text = ss.str();
    }
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw invalid_error("malformed JSON request");
    return j;
}

MoorePolySet polyset_from_request(const json& req) {
    TowerRef tw = serial::tower_from_json(req.at("field"));
    Lv lv = serial::level_of(*tw);
    std::vector<LinPoly> polys;
    for (const auto& p : req.at("polys")) polys.push_back(serial::linpoly_from_json(tw, lv, p));
    return MoorePolySet(std::move(polys));
}

// handlers return (result, exit_code)

std::pair<json, int> cmd_field_info(const json& req, const Ctx&) {
    TowerRef tw = serial::tower_from_json(req.at("field"));
    json out = serial::tower_to_json(*tw);
    out["q"] = tw->q();
    out["size_qn"] = tw->ctx(Lv::QN).size();
    out["size_top"] = tw->ctx(Lv::Top).size();
    out["generator_qn"] = tw->ctx(Lv::QN).generator();
    out["primitive_qn"] = tw->ctx(Lv::QN).primitive_element();
    return {out, 0};
}

std::pair<json, int> cmd_eval(const json& req, const Ctx&) {
    TowerRef tw = serial::tower_from_json(req.at("field"));
    Lv lv = serial::level_of(*tw);
    LinPoly f = serial::linpoly_from_json(tw, lv, req.at("poly"));
    u64 x;
    if (req.at("x").is_string())
        x = serial::parse_element(req["x"].get<std::string>(), tw->ctx(lv));
    else
        x = req.at("x").get<u64>();
    if (x >= tw->ctx(lv).size()) throw invalid_error("x out of range");
    return {json{{"value", f.evaluate(x)}}, 0};
}

std::pair<json, int> cmd_compose(const json& req, const Ctx&) {
    TowerRef tw = serial::tower_from_json(req.at("field"));
    Lv lv = serial::level_of(*tw);
    LinPoly f = serial::linpoly_from_json(tw, lv, req.at("f"));
    LinPoly g = serial::linpoly_from_json(tw, lv, req.at("g"));
    return {serial::linpoly_to_json(f.compose(g)), 0};
}

std::pair<json, int> cmd_is_mrd(const json& req, const Ctx& c) {
    RankMetricCode C = serial::code_from_json(req.at("code"));
    MrdReport r = is_mrd(C, c.guard());
    if (!r.verdict) {
        // certificate re-check before emitting
        LinPoly w = C.codeword(*r.witness);
        if (w.kernel_dim() < C.k()) throw internal_error("witness failed re-verification");
    }
    return {serial::mrd_report_to_json(r), r.verdict ? 0 : 2};
}

std::pair<json, int> cmd_min_distance(const json& req, const Ctx& c) {
    RankMetricCode C = serial::code_from_json(req.at("code"));
    return {json{{"min_distance", min_distance(C, c.guard())}}, 0};
}

std::pair<json, int> cmd_dual(const json& req, const Ctx&) {
    RankMetricCode C = serial::code_from_json(req.at("code"));
    auto D = delsarte_dual(C);
    if (!D) return {json{{"dual", nullptr}, {"note", "k = n: the dual is the zero code"}}, 0};
    return {json{{"dual", serial::code_to_json(*D)}}, 0};
}

std::pair<json, int> cmd_idealisers(const json& req, const Ctx&) {
    RankMetricCode C = serial::code_from_json(req.at("code"));
    return {json{{"left", serial::idealiser_to_json(left_idealiser(C))},
                 {"right", serial::idealiser_to_json(right_idealiser(C))}},
            0};
}

std::pair<json, int> cmd_transform(const json& req, const Ctx&) {
    RankMetricCode C = serial::code_from_json(req.at("code"));
    Lv lv = C.level();
    LinPoly g = serial::linpoly_from_json(C.tower(), lv, req.at("g"));
    LinPoly h = serial::linpoly_from_json(C.tower(), lv, req.at("h"));
    u64 rho = req.value("rho_exp", u64{0});
    return {serial::code_to_json(transform(C, g, h, rho)), 0};
}

std::pair<json, int> cmd_lift(const json& req, const Ctx&) {
    u64 m = req.at("m").get<u64>();
    if (req.contains("code")) {
        RankMetricCode C = serial::code_from_json(req.at("code"));
        return {serial::code_to_json(lift_code(C, m)), 0};
    }
    TowerRef tw = serial::tower_from_json(req.at("field"));
    LinPoly f = serial::linpoly_from_json(tw, Lv::QN, req.at("poly"));
    return {serial::linpoly_to_json(lift(f, m)), 0};
}

std::pair<json, int> cmd_probe(const json& req, const Ctx& c, u64 m_max) {
    RankMetricCode C = serial::code_from_json(req.at("code"));
    ProbeResult r = exceptional_probe(C, m_max, c.guard());
    bool all_true = true;
    for (const auto& e : r.entries)
        if (!e.skipped && !e.report.verdict) all_true = false;
    return {serial::probe_to_json(r), all_true ? 0 : 2};
}

std::pair<json, int> cmd_moore_det(const json& req, const Ctx&) {
    MoorePolySet f = polyset_from_request(req);
    std::vector<u64> A = req.at("alphas").get<std::vector<u64>>();
    Mat M = moore_matrix(f, A);
    u64 d = det(M);
    return {json{{"det", d},
                 {"singular", d == 0},
                 {"fq_rank", f.tower()->fq_rank(f.level(), A)}},
            0};
}

std::pair<json, int> cmd_is_moore(const json& req, const Ctx& c, const std::string& method) {
    MoorePolySet f = polyset_from_request(req);
    MooreReport r;
    if (method == "oracle") {
        r = is_moore_oracle(f, c.guard());
    } else if (method == "mrd") {
        r = is_moore(f, c.guard());
    } else if (method == "variety") {
        MvPoly W = build_W(f, c.guard());
        auto pts = points_off_V(W, f, c.guard());
        r.method = MooreReport::Method::Variety;
        r.verdict = pts.empty();
        if (!pts.empty()) r.witness = pts.front();
    } else {
        throw invalid_error("is-moore: method must be oracle, mrd or variety");
    }
    if (r.witness && !verify_moore_witness(f, *r.witness))
        throw internal_error("witness failed re-verification");
    return {serial::moore_report_to_json(r), r.verdict ? 0 : 2};
}

std::pair<json, int> cmd_index(const json& req, const Ctx&) {
    RankMetricCode C = serial::code_from_json(req.at("code"));
    try {
        return {json{{"index", index_of(C)}}, 0};
    } catch (const no_monomial_error&) {
        return {json{{"index", nullptr}, {"note", "no monomial x^{q^t} lies in the code"}}, 0};
    }
}

std::pair<json, int> cmd_normalize(const json& req, const Ctx&) {
    RankMetricCode C = serial::code_from_json(req.at("code"));
    return {serial::moore_set_to_json(normalize(C)), 0};
}

std::pair<json, int> cmd_is_ap(const json& req, const Ctx&) {
    auto exps = req.at("exponents").get<std::vector<std::int64_t>>();
    bool perm = req.value("allow_permutation", false);
    bool v = is_ap(std::move(exps), perm);
    return {json{{"is_ap", v}}, 0};
}

std::pair<json, int> cmd_variety(const json& req, const Ctx& c, const std::string& sub) {
    MoorePolySet f = polyset_from_request(req);
    Guard g = c.guard();
    if (sub == "build") {
        MvPoly F = build_F(f, g);
        MvPoly V = build_V(f.tower(), f.level(), f.k(), g);
        return {json{{"F", serial::mvpoly_to_json(F)}, {"V", serial::mvpoly_to_json(V)}}, 0};
    }
    if (sub == "divide") {
        MvPoly W = build_W(f, g);
        MvPoly V = build_V(f.tower(), f.level(), f.k(), g);
        if (!(W.mul(V) == build_F(f, g))) throw internal_error("division re-check failed");
        return {json{{"W", serial::mvpoly_to_json(W)}}, 0};
    }
    if (sub == "points") {
        MvPoly W = build_W(f, g);
        auto pts = points_off_V(W, f, g);
        for (const auto& P : pts)
            if (W.evaluate(P) != 0 || f.tower()->fq_rank(f.level(), P) != f.k())
                throw internal_error("point certificate failed re-verification");
        return {json{{"points", pts}, {"moore", pts.empty()}}, pts.empty() ? 0 : 2};
    }
    std::vector<u64> lambdas;
    if (req.contains("lambdas")) lambdas = req["lambdas"].get<std::vector<u64>>();
    MvPoly H = specialize_curve(f, lambdas, g);
    if (sub == "infinity") {
        auto pts = points_at_infinity(H);
        json out = json::array();
        for (auto [x, y] : pts) out.push_back(json::array({x, y, 0}));
        return {json{{"points_at_infinity", out}}, 0};
    }
    if (sub == "singular") {
        auto pts = singular_points_affine(H, g);
        json out = json::array();
        for (auto [x, y] : pts) out.push_back(json::array({x, y}));
        return {json{{"singular_points", out}}, 0};
    }
    throw invalid_error("variety: unknown subcommand");
}

std::pair<json, int> cmd_fingerprint(const json& req, const Ctx& c) {
    RankMetricCode C = serial::code_from_json(req.at("code"));
    return {serial::fingerprint_to_json(fingerprint(C, c.guard())), 0};
}

struct FamilyArgs {
    std::string id;
    u64 q = 0, n = 0, m = 1, k = 2, s = 1;
    std::string delta = "0";
};

std::pair<u64, u64> factor_prime_power(u64 q) {
    for (u64 p = 2; p * p <= q; ++p) {
        if (q % p) continue;
        u64 h = 0, t = q;
        while (t % p == 0) {
            t /= p;
            ++h;
        }
        if (t != 1) throw invalid_error("family: q must be a prime power");
        return {p, h};
    }
    return {q, 1};  // q itself prime
}

std::pair<json, int> cmd_family(const FamilyArgs& a, const Ctx& c) {
    if (a.q < 2 || a.n < 1) throw invalid_error("family: --q and --n are required");
    auto [p, h] = factor_prime_power(a.q);
    TowerRef tw = make_tower(p, h, a.n, a.m);
    const FieldCtx& F = tw->ctx(Lv::QN);
    u64 delta = serial::parse_element(a.delta, F);

    json out;
    if (a.id == "G" || a.id == "g") {
        auto r = gabidulin(tw, a.k, a.s);
        out = {{"code", serial::code_to_json(r.code)}, {"validity", serial::validity_to_json(r.validity)}};
    } else if (a.id == "T" || a.id == "t") {
        auto r = twisted_gabidulin(tw, a.k, a.s, delta);
        out = {{"code", serial::code_to_json(r.code)}, {"validity", serial::validity_to_json(r.validity)}};
    } else if (a.id == "Ps" || a.id == "ps") {
        auto r = pseudoregulus(tw, a.s);
        out = {{"poly", serial::linpoly_to_json(r.poly)},
               {"index", r.index_t},
               {"validity", serial::validity_to_json(r.validity)}};
    } else if (a.id == "LP" || a.id == "lp") {
        auto r = lp_poly(tw, a.s, delta);
        out = {{"poly", serial::linpoly_to_json(r.poly)},
               {"index", r.index_t},
               {"validity", serial::validity_to_json(r.validity)}};
    } else if (a.id.rfind("row", 0) == 0) {
        u64 row = std::stoull(a.id.substr(3));
        auto r = table1_row(row, tw, a.s, delta);
        out = {{"code", serial::code_to_json(r.code)}, {"validity", serial::validity_to_json(r.validity)}};
    } else {
        throw invalid_error("family: unknown id (G, T, Ps, LP, row3..row14)");
    }
    (void)c;
    return {out, 0};
}

int emit(const Ctx& c, const std::string& status, const json& result, int code,
         std::chrono::steady_clock::time_point t0) {
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - t0)
                  .count();
    json resp{{"status", status}, {"timing_ms", ms}};
    if (!result.is_null()) resp["result"] = result;
    std::string text = resp.dump(2);
    if (!c.out_path.empty()) {
        std::ofstream f(c.out_path);
        f << text << "\n";
    } else {
        std::cout << text << "\n";
    }
    return code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact prover for rank-metric codes from linearized polynomials"};
    app.require_subcommand(1);

    Ctx ctx;
    app.add_option("--in", ctx.in_path, "read the JSON request from a file instead of stdin");
    app.add_option("--out", ctx.out_path, "write the JSON response to a file instead of stdout");
    app.add_option("--max-steps", ctx.max_steps, "enumeration guard (default 2^24)");
    app.add_option("--seed", ctx.seed, "seed for randomized helpers");
    app.add_option("--threads", ctx.threads, "worker cap for sweeps");

    u64 m_max = 3;
    std::string method = "mrd", variety_sub, suite_name;
    FamilyArgs fam;

    auto* c_field = app.add_subcommand("field-info", "tower sizes, defining polynomials, generators");
    auto* c_eval = app.add_subcommand("eval", "evaluate a linearized polynomial");
    auto* c_compose = app.add_subcommand("compose", "composition modulo x^{q^n} - x");
    auto* c_ismrd = app.add_subcommand("is-mrd", "MRD verdict with witness certificate");
    auto* c_mind = app.add_subcommand("min-distance", "exact minimum rank distance");
    auto* c_dual = app.add_subcommand("dual", "Delsarte dual code");
    auto* c_ideal = app.add_subcommand("idealisers", "left and right idealisers");
    auto* c_transf = app.add_subcommand("transform", "equivalence transform g o C^rho o h");
    auto* c_lift = app.add_subcommand("lift", "lift to GF(q^{nm})");
    auto* c_probe = app.add_subcommand("exceptional-probe", "MRD verdicts on lifts m = 1..m_max");
    c_probe->add_option("--m-max", m_max, "largest lift degree");
    auto* c_mdet = app.add_subcommand("moore-det", "Moore matrix determinant at a tuple");
    auto* c_ismoore = app.add_subcommand("is-moore", "Moore polynomial set test");
    c_ismoore->add_option("--method", method, "oracle | mrd | variety");
    auto* c_index = app.add_subcommand("index", "least t with x^{q^t} in the code");
    auto* c_norm = app.add_subcommand("normalize", "normalized basis with condition flags");
    auto* c_isap = app.add_subcommand("is-ap", "arithmetic progression predicate");
    auto* c_variety = app.add_subcommand("variety", "hypersurface operations");
    c_variety->add_option("sub", variety_sub, "build | divide | points | infinity | singular")->required();
    auto* c_family = app.add_subcommand("family", "family constructors with validity report");
    c_family->add_option("--id", fam.id, "G | T | Ps | LP | row3..row14")->required();
    c_family->add_option("--q", fam.q, "field size q (prime power)")->required();
    c_family->add_option("--n", fam.n, "extension degree n")->required();
    c_family->add_option("--m", fam.m, "lift degree (default 1)");
    c_family->add_option("--k", fam.k, "dimension (G and T)");
    c_family->add_option("--s", fam.s, "Frobenius step s");
    c_family->add_option("--delta", fam.delta, "twist element (int encoding or g^k)");
    auto* c_fp = app.add_subcommand("fingerprint", "invariant record of a code");
    auto* c_suite = app.add_subcommand("suite", "named verification suite");
    c_suite->add_option("name", suite_name, "paper-smoke | oracle-equivalence | table1 | duality")
        ->required();

    CLI11_PARSE(app, argc, argv);
    sweep_threads() = std::max(1u, ctx.threads);

    auto t0 = std::chrono::steady_clock::now();
    try {
        json result;
        int code = 0;
        if (app.got_subcommand(c_family)) {
            std::tie(result, code) = cmd_family(fam, ctx);
        } else if (app.got_subcommand(c_suite)) {
            result = rmc::suite::run_suite(suite_name, ctx.guard());
            code = result["pass"].get<bool>() ? 0 : 2;
        } else if (app.got_subcommand(c_isap)) {
            json req = read_request(ctx);
            std::tie(result, code) = cmd_is_ap(req, ctx);
        } else {
            json req = read_request(ctx);
            if (app.got_subcommand(c_field)) std::tie(result, code) = cmd_field_info(req, ctx);
            else if (app.got_subcommand(c_eval)) std::tie(result, code) = cmd_eval(req, ctx);
            else if (app.got_subcommand(c_compose)) std::tie(result, code) = cmd_compose(req, ctx);
            else if (app.got_subcommand(c_ismrd)) std::tie(result, code) = cmd_is_mrd(req, ctx);
            else if (app.got_subcommand(c_mind)) std::tie(result, code) = cmd_min_distance(req, ctx);
            else if (app.got_subcommand(c_dual)) std::tie(result, code) = cmd_dual(req, ctx);
            else if (app.got_subcommand(c_ideal)) std::tie(result, code) = cmd_idealisers(req, ctx);
            else if (app.got_subcommand(c_transf)) std::tie(result, code) = cmd_transform(req, ctx);
            else if (app.got_subcommand(c_lift)) std::tie(result, code) = cmd_lift(req, ctx);
            else if (app.got_subcommand(c_probe)) std::tie(result, code) = cmd_probe(req, ctx, m_max);
            else if (app.got_subcommand(c_mdet)) std::tie(result, code) = cmd_moore_det(req, ctx);
            else if (app.got_subcommand(c_ismoore)) std::tie(result, code) = cmd_is_moore(req, ctx, method);
            else if (app.got_subcommand(c_index)) std::tie(result, code) = cmd_index(req, ctx);
            else if (app.got_subcommand(c_norm)) std::tie(result, code) = cmd_normalize(req, ctx);
            else if (app.got_subcommand(c_variety)) std::tie(result, code) = cmd_variety(req, ctx, variety_sub);
            else if (app.got_subcommand(c_fp)) std::tie(result, code) = cmd_fingerprint(req, ctx);
            else throw invalid_error("unknown subcommand");
        }
        return emit(ctx, "ok", result, code, t0);
    } catch (const guard_error& e) {
        return emit(ctx, "guard-exceeded", json{{"error", e.what()}}, 3, t0);
    } catch (const invalid_error& e) {
        return emit(ctx, "invalid", json{{"error", e.what()}}, 4, t0);
    } catch (const std::exception& e) {
        return emit(ctx, "internal", json{{"error", e.what()}}, 1, t0);
    }
}
