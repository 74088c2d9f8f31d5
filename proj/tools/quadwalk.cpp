// quadwalk: classify weighted quarter-plane walk models and verify the
// algebraic / D-finite / non-D-finite trichotomy empirically.
//
// Subcommands: classify, crossvalidate, enumerate, group, orbitsum, curve,
// periods, guess, scan, check. All emit JSON on stdout. Exit codes:
// 0 success, 2 INCONSISTENT cross-validation, 1 error.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>

#include "quadwalk/classify.hpp"

using nlohmann::json;
using namespace quadwalk;

namespace {

WalkModel resolve_model(const std::string& model_path, const std::string& builtin) {
    if (!builtin.empty()) return builtin_model(builtin);
    if (model_path.empty()) throw ParseError("pass --model FILE or --builtin NAME");
    std::ifstream in(model_path);
    if (!in) throw ParseError("cannot open model file '" + model_path + "'");
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return load_model(text);
}

json model_json(const WalkModel& m) {
    json w = json::object();
    for (const auto& [s, d] : m.weights)
        w[std::to_string(s.first) + "," + std::to_string(s.second)] = rat_to_string(d);
    return json{{"name", m.name},
                {"weights", w},
                {"original_total", rat_to_string(m.original_total)}};
}

json poly2_terms(const Poly2& p) {
    json terms = json::array();
    for (const auto& [e, c] : p.terms())
        terms.push_back(json{{"e1", e.i}, {"e2", e.j}, {"c", rat_to_string(c)}});
    return terms;
}

json ratfunc_json(const RatFunc2& f) {
    return json{{"num", poly2_terms(f.num())}, {"den", poly2_terms(f.den())},
                {"text", f.to_string()}};
}

json group_json(const GroupResult& g) {
    json out;
    out["verdict"] = g.finite ? "finite" : "infinite";
    out["sigma_order_checked"] = g.sigma_order_checked;
    if (g.degree_blowup) out["degree_blowup"] = true;
    if (g.finite) {
        out["order"] = g.order;
        json words = json::array();
        for (const GroupElement& e : g.elements) words.push_back(e.word_string());
        out["element_words"] = words;
    }
    return out;
}

json classification_json(const Classification& c) {
    json out;
    out["class"] = to_string(c.tag);
    out["curve_class"] = c.curve.tag == CurveClass::Degenerate ? "Degenerate"
                         : c.curve.tag == CurveClass::GenusZero ? "GenusZero"
                                                                : "Elliptic";
    out["curve_detail"] = c.curve.detail;
    if (c.group) out["group"] = group_json(*c.group);
    if (c.orbit_sum_zero) {
        out["orbit_sum_zero"] = *c.orbit_sum_zero;
        out["orbit_sum"] = c.orbit_sum_text;
    }
    return out;
}

json guess_json(const GuessResult& g) {
    json out;
    out["found"] = g.found;
    out["terms_used"] = g.terms_used;
    out["guard"] = g.guard;
    if (g.found) {
        out["validated_on_guard"] = g.validated_on_guard;
        const auto& table = g.ode ? g.ode->coeffs : g.algebraic->coeffs;
        json rel = json::array();
        for (const auto& row : table) {
            json r = json::array();
            for (const Rat& v : row) r.push_back(rat_to_string(v));
            rel.push_back(r);
        }
        out["relation"] = rel;
        if (g.ode) { out["order"] = g.ode->order; out["degree"] = g.ode->degree; }
        else { out["deg_f"] = g.algebraic->deg_f; out["deg_t"] = g.algebraic->deg_t; }
    } else {
        out["searched_bounds"] = json{{"first", g.max_first}, {"second", g.max_second}};
    }
    return out;
}

json proj_json(const ProjPoint& p) {
    if (p.at_infinity) return json{{"infinity", true}};
    return json{{"value", p.value}};
}

int cmd_exit = 0;

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"quarter-plane walk model classifier"};
    app.require_subcommand(1);

    std::string model_path, builtin;
    auto add_model_opts = [&](CLI::App* sub) {
        sub->add_option("--model", model_path, "model JSON file");
        sub->add_option("--builtin", builtin,
                        "builtin model (simple, kreweras, gessel, single-ne, fig2-1..4)");
    };

    json out;

    auto* c_classify = app.add_subcommand("classify", "exact decision-table classification");
    add_model_opts(c_classify);
    c_classify->callback([&]() {
        WalkModel m = resolve_model(model_path, builtin);
        Classification c = classify(m);
        out = classification_json(c);
        out["model"] = model_json(m);
    });

    auto* c_cross = app.add_subcommand("crossvalidate",
                                       "classification vs guesser outcomes (exit 2 on mismatch)");
    add_model_opts(c_cross);
    Budget budget;
    c_cross->add_option("--terms", budget.series_terms, "series terms (default 100)");
    c_cross->add_option("--ode-order", budget.ode_max_order, "max ODE order");
    c_cross->add_option("--ode-degree", budget.ode_max_degree, "max ODE coefficient degree");
    c_cross->add_option("--alg-degf", budget.alg_max_deg_f, "max algebraic degree in F");
    c_cross->add_option("--alg-degt", budget.alg_max_deg_t, "max algebraic degree in t");
    c_cross->add_option("--guard", budget.guard, "held-out guard terms");
    c_cross->callback([&]() {
        WalkModel m = resolve_model(model_path, builtin);
        CrossReport rep = crossvalidate(m, budget);
        out["classification"] = classification_json(rep.classification);
        out["verdict"] = rep.verdict == Consistency::Consistent ? "CONSISTENT"
                         : rep.verdict == Consistency::Inconsistent ? "INCONSISTENT"
                                                                    : "NO_PREDICTION";
        out["note"] = rep.note;
        out["specialization"] = json{{"x", rat_to_string(rep.spec_x)},
                                     {"y", rat_to_string(rep.spec_y)}};
        if (rep.ode.terms_used) out["ode"] = guess_json(rep.ode);
        if (rep.algebraic.terms_used) out["algebraic"] = guess_json(rep.algebraic);
        if (rep.verdict == Consistency::Inconsistent) cmd_exit = 2;
    });

    auto* c_enum = app.add_subcommand("enumerate", "exact series coefficients of Q(x,y,t)");
    add_model_opts(c_enum);
    int enum_n = 20;
    bool full_grids = false;
    c_enum->add_option("-n,--terms", enum_n, "number of steps (default 20)");
    c_enum->add_flag("--grids", full_grids, "emit full coefficient grids");
    c_enum->callback([&]() {
        WalkModel m = resolve_model(model_path, builtin);
        SeriesTable table(m, enum_n);
        json ns = json::array(), totals = json::array();
        for (int n = 0; n <= enum_n; ++n) {
            ns.push_back(n);
            totals.push_back(rat_to_string(table.total(n)));
        }
        out = json{{"model", model_json(m)}, {"n", ns}, {"total", totals}};
        if (full_grids) {
            json grids = json::array();
            for (int n = 0; n <= enum_n; ++n) {
                json g = json::object();
                for (int i = 0; i <= n; ++i)
                    for (int j = 0; j <= n; ++j) {
                        Rat c = table.at(n, i, j);
                        if (!is_zero(c))
                            g[std::to_string(i) + "," + std::to_string(j)] = rat_to_string(c);
                    }
                grids.push_back(g);
            }
            out["grids"] = grids;
        }
    });

    auto* c_group = app.add_subcommand("group", "group of the walk and orbit-sum");
    add_model_opts(c_group);
    c_group->callback([&]() {
        WalkModel m = resolve_model(model_path, builtin);
        auto [i1, i2] = involutions(m);
        GroupResult g = decide_finiteness(i1, i2);
        out = group_json(g);
        out["model"] = model_json(m);
        out["iota1"] = json{{"x", ratfunc_json(i1.map_x)}, {"y", ratfunc_json(i1.map_y)}};
        out["iota2"] = json{{"x", ratfunc_json(i2.map_x)}, {"y", ratfunc_json(i2.map_y)}};
        if (g.finite) {
            OrbitSum os = orbit_sum(g);
            out["orbit_sum"] = ratfunc_json(os.value);
            out["orbit_sum_zero"] = os.is_zero();
        }
    });

    auto* c_osum = app.add_subcommand("orbitsum", "exact orbit-sum of xy (finite groups)");
    add_model_opts(c_osum);
    c_osum->callback([&]() {
        WalkModel m = resolve_model(model_path, builtin);
        auto [i1, i2] = involutions(m);
        GroupResult g = decide_finiteness(i1, i2);
        if (!g.finite) throw Error("orbit-sum is defined here only for finite groups");
        OrbitSum os = orbit_sum(g);
        out = json{{"model", model_json(m)},
                   {"order", g.order},
                   {"orbit_sum", ratfunc_json(os.value)},
                   {"orbit_sum_zero", os.is_zero()}};
    });

    auto* c_curve = app.add_subcommand("curve", "kernel curve class and discriminants");
    add_model_opts(c_curve);
    std::string curve_t;
    c_curve->add_option("--t", curve_t, "also report branch points at t = p/q");
    c_curve->callback([&]() {
        WalkModel m = resolve_model(model_path, builtin);
        Kernel k(m);
        CurveClass cc = classify_curve(k);
        out["model"] = model_json(m);
        out["class"] = cc.tag == CurveClass::Degenerate ? "Degenerate"
                       : cc.tag == CurveClass::GenusZero ? "GenusZero"
                                                         : "Elliptic";
        out["detail"] = cc.detail;
        out["D1"] = poly2_terms(k.disc_x());
        out["D2"] = poly2_terms(k.disc_y());
        if (!curve_t.empty()) {
            BranchPoints bp = branch_points(k, rat_from_string(curve_t));
            json a = json::array(), b = json::array();
            for (const ProjPoint& p : bp.a) a.push_back(proj_json(p));
            for (const ProjPoint& p : bp.b) b.push_back(proj_json(p));
            out["branch_points"] = json{{"t", bp.t},
                                        {"a", a},
                                        {"b", b},
                                        {"a_designated", bp.a_finite_index},
                                        {"b_designated", bp.b_finite_index},
                                        {"root_at_minus_one", bp.root_at_minus_one}};
        }
    });

    auto* c_periods = app.add_subcommand("periods", "elliptic periods and ratio detection");
    add_model_opts(c_periods);
    std::string periods_t = "1/2";
    c_periods->add_option("--t", periods_t, "t as p/q (default 1/2)");
    c_periods->callback([&]() {
        WalkModel m = resolve_model(model_path, builtin);
        Kernel k(m);
        CurveClass cc = classify_curve(k);
        if (cc.tag != CurveClass::Elliptic)
            throw Error("periods are defined for elliptic models only (this one is " +
                        std::string(cc.tag == CurveClass::Degenerate ? "degenerate" : "genus zero") + ")");
        EllipticContext ctx = EllipticContext::create(k, rat_from_string(periods_t));
        const PeriodSet& ps = ctx.period_set();
        const BranchPoints& bp = ctx.branch();
        json a = json::array(), b = json::array();
        for (const ProjPoint& p : bp.a) a.push_back(proj_json(p));
        for (const ProjPoint& p : bp.b) b.push_back(proj_json(p));
        out["model"] = model_json(m);
        out["t"] = ps.t;
        out["branch_points"] = json{{"a", a}, {"b", b}};
        out["omega1"] = ps.omega1;
        out["omega2"] = ps.omega2;
        out["omega3"] = ps.omega3;
        out["omega3_branch"] = ps.omega3_branch;
        out["quadrature_error"] = ps.quadrature_error;
        out["uniformization_roots"] = json{{"a_index", ctx.a_index()}, {"b_index", ctx.b_index()}};
        auto ratio = detect_rational_ratio(ps);
        if (ratio)
            out["ratio"] = json{{"k", ratio->first}, {"l", ratio->second}};
        else
            out["ratio"] = nullptr;
        double worst = 0;
        for (double al : {0.17, 0.39, 0.63}) {
            UniformizationSample s = ctx.uniformize(Complex(al * ps.omega2, 0.21 * ps.omega1));
            worst = std::max(worst, s.kernel_residual);
        }
        out["uniformization_residual"] = worst;
    });

    auto* c_guess = app.add_subcommand("guess", "guess an ODE or algebraic equation");
    add_model_opts(c_guess);
    std::string mode = "ode", gx = "1", gy = "1";
    int g_n = 100, g_order = 6, g_degree = 12, g_guard = 10;
    c_guess->add_option("--mode", mode, "ode | algebraic");
    c_guess->add_option("--n", g_n, "series terms");
    c_guess->add_option("--order", g_order, "max order (ode) / max degree in F (algebraic)");
    c_guess->add_option("--degree", g_degree, "max coefficient degree in t");
    c_guess->add_option("--guard", g_guard, "held-out guard terms");
    c_guess->add_option("--x", gx, "specialization x = p/q");
    c_guess->add_option("--y", gy, "specialization y = p/q");
    c_guess->callback([&]() {
        WalkModel m = resolve_model(model_path, builtin);
        SeriesTable table(m, g_n);
        std::vector<Rat> series = table.specialize(rat_from_string(gx), rat_from_string(gy));
        GuessResult g = mode == "algebraic" ? guess_algebraic(series, g_order, g_degree, g_guard)
                        : mode == "ode" ? guess_ode(series, g_order, g_degree, g_guard)
                                        : throw ParseError("mode must be ode or algebraic");
        out = guess_json(g);
        out["model"] = model_json(m);
        out["mode"] = mode;
        out["x"] = gx;
        out["y"] = gy;
    });

    auto* c_scan = app.add_subcommand("scan", "classify all 255 unweighted step sets");
    int workers = 0;
    c_scan->add_option("--workers", workers, "worker threads (default: QUADWALK_WORKERS or hw)");
    c_scan->callback([&]() {
        Atlas atlas = scan_unweighted(workers);
        json entries = json::array();
        for (const AtlasEntry& e : atlas.entries)
            entries.push_back(json{{"mask", e.step_mask},
                                   {"steps", e.steps},
                                   {"class", to_string(e.tag)},
                                   {"group_order", e.group_order},
                                   {"orbit_sum_zero", e.orbit_sum_zero}});
        json hist = json::object();
        for (const auto& [order, count] : atlas.order_histogram)
            hist[order == 0 ? "infinite" : std::to_string(order)] = count;
        out = json{{"entries", entries},
                   {"curve_counts", atlas.curve_counts},
                   {"group_order_histogram", hist},
                   {"orbit_sum_zero_models", atlas.orbit_sum_zero_models}};
    });

    auto* c_check = app.add_subcommand("check", "run the per-model invariant suite");
    add_model_opts(c_check);
    int check_order = 15;
    c_check->add_option("--order", check_order, "functional-equation truncation order");
    c_check->callback([&]() {
        WalkModel m = resolve_model(model_path, builtin);
        CheckReport rep = run_checks(m, check_order);
        json items = json::array();
        for (const CheckItem& item : rep.items)
            items.push_back(json{{"name", item.name}, {"pass", item.pass}, {"value", item.value}});
        out = json{{"model", model_json(m)}, {"items", items}, {"all_pass", rep.all_pass}};
        if (!rep.all_pass) cmd_exit = 2;
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    std::cout << out.dump(2) << "\n";
    return cmd_exit;
}
