// xmod: command-line front end for the crossed-module workbench.
//
// Subcommands: check | aut | bispace | cocycle | cohomology | obstruction |
//              exactseq | structures
//
// Reports go to stdout as JSON with stable key order ("schema": 1); --human
// prints a flat table instead. Exit codes: 0 ok, 1 mathematical negative
// (not equivalent, nonzero class, no solutions, sequence not exact),
// 2 usage or validation error.

#include <chrono>
#include <iostream>

#include <CLI11.hpp>

#include "xmod/json_io.hpp"

namespace {

using xmod::Json;

struct ReportContext {
    std::string command;
    bool human = false;
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
};

void print_human(const Json& j, const std::string& prefix = "") {
    for (auto it = j.begin(); it != j.end(); ++it) {
        std::string key = prefix.empty() ? it.key() : prefix + "." + it.key();
        if (it->is_object())
            print_human(*it, key);
        else
            std::cout << "  " << key << " = " << it->dump() << "\n";
    }
}

int emit(const ReportContext& ctx, bool ok, Json payload, Json witnesses = Json::array(),
         int fail_code = 1) {
    auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - ctx.start)
                       .count();
    Json report;
    report["schema"] = 1;
    report["command"] = ctx.command;
    report["status"] = ok ? "ok" : "fail";
    report["payload"] = std::move(payload);
    report["witnesses"] = std::move(witnesses);
    report["timing_ms"] = elapsed;
    if (ctx.human) {
        std::cout << ctx.command << ": " << (ok ? "ok" : "fail") << "\n";
        print_human(report["payload"]);
        for (const auto& w : report["witnesses"]) std::cout << "  witness: " << w.dump() << "\n";
    } else {
        std::cout << report.dump(2) << "\n";
    }
    return ok ? 0 : fail_code;
}

int emit_error(const ReportContext& ctx, const xmod::Diagnostic& d) {
    Json payload;
    payload["error"] = d.code;
    payload["message"] = d.message;
    Json w = Json::array();
    for (long long v : d.witness) w.push_back(v);
    return emit(ctx, false, std::move(payload), std::move(w), 2);
}

Json diag_json(const xmod::Diagnostic& d) {
    Json j;
    j["error"] = d.code;
    j["message"] = d.message;
    j["witness"] = d.witness;
    return j;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite crossed-module workbench"};
    app.require_subcommand(1);

    std::vector<std::string> workspace_files;
    bool human = false;
    app.add_option("--workspace", workspace_files, "extra workspace document files")
        ->expected(-1);
    app.add_flag("--human", human, "table output instead of JSON");

    // check
    std::string check_name;
    auto* cmd_check = app.add_subcommand("check", "validate a named object");
    cmd_check->add_option("name", check_name, "object name")->required();

    // aut
    std::string aut_group;
    int max_order = 64;
    auto* cmd_aut = app.add_subcommand("aut", "enumerate automorphisms of a group");
    cmd_aut->add_option("group", aut_group, "group name")->required();
    cmd_aut->add_option("--max-order", max_order, "automorphism search cap");

    // bispace
    std::string bi_xm;
    int bi_standard = -1;
    auto* cmd_bi = app.add_subcommand("bispace", "bispace classification over a crossed module");
    cmd_bi->add_option("--xm", bi_xm, "crossed module name")->required();
    cmd_bi->add_option("--standard", bi_standard, "describe T(xi) instead");

    // cocycle
    std::string co_check, co_trivial, co_xm, co_nerve;
    std::vector<std::string> co_equiv;
    bool co_enumerate = false;
    long long max_enum = 10'000'000;
    auto* cmd_co = app.add_subcommand("cocycle", "validate, compare or enumerate cocycles");
    cmd_co->add_option("--check", co_check, "validate a named cocycle");
    cmd_co->add_option("--is-trivial", co_trivial, "test a named cocycle for triviality");
    cmd_co->add_option("--equivalent", co_equiv, "two cocycle names to compare")->expected(2);
    cmd_co->add_flag("--enumerate", co_enumerate, "enumerate all gauge classes");
    cmd_co->add_option("--xm", co_xm, "crossed module (for --enumerate)");
    cmd_co->add_option("--nerve", co_nerve, "nerve (for --enumerate)");
    cmd_co->add_option("--max-enum", max_enum, "enumeration budget");

    // cohomology
    std::string ch_nerve, ch_coeff, ch_labeling;
    int ch_deg = 1;
    auto* cmd_ch = app.add_subcommand("cohomology", "abelian Cech cohomology of a nerve");
    cmd_ch->add_option("--nerve", ch_nerve, "nerve name")->required();
    cmd_ch->add_option("--coeff", ch_coeff, "abelian coefficient group name")->required();
    cmd_ch->add_option("--deg", ch_deg, "degree, 1 or 2")->required();
    cmd_ch->add_option("--labeling", ch_labeling,
                       "degree-1 cocycle to test for coboundary membership");

    // obstruction
    std::string ob_xm, ob_nerve, ob_tau;
    auto* cmd_ob = app.add_subcommand("obstruction", "lifting obstruction of a t(G)-cocycle");
    cmd_ob->add_option("--xm", ob_xm, "crossed module name")->required();
    cmd_ob->add_option("--nerve", ob_nerve, "nerve name")->required();
    cmd_ob->add_option("--tau", ob_tau, "edge labeling name")->required();

    // exactseq
    std::string ex_xm, ex_nerve;
    auto* cmd_ex = app.add_subcommand("exactseq", "verify the four-term exact sequence");
    cmd_ex->add_option("--xm", ex_xm, "crossed module name")->required();
    cmd_ex->add_option("--nerve", ex_nerve, "nerve name")->required();
    cmd_ex->add_option("--max-enum", max_enum, "enumeration budget");

    // structures
    std::string st_xm, st_nerve, st_g;
    auto* cmd_st = app.add_subcommand("structures", "bibundle structures on a G-cocycle");
    cmd_st->add_option("--xm", st_xm, "crossed module name")->required();
    cmd_st->add_option("--nerve", st_nerve, "nerve name")->required();
    cmd_st->add_option("--g", st_g, "edge labeling name")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    }

    ReportContext ctx;
    ctx.human = human;
    ctx.command = app.get_subcommands().front()->get_name();

    auto load = xmod::load_workspace(workspace_files);
    if (!load.ok()) {
        Json payload;
        payload["error"] = "workspace";
        payload["message"] = "workspace failed to load";
        Json w = Json::array();
        for (const auto& d : load.diagnostics) w.push_back(diag_json(d));
        return emit(ctx, false, std::move(payload), std::move(w), 2);
    }
    const xmod::Workspace& ws = load.workspace;

    try {
        if (*cmd_check) {
            Json payload;
            payload["name"] = check_name;
            if (auto it = ws.crossed_modules.find(check_name); it != ws.crossed_modules.end()) {
                const auto& xm = *it->second;
                // re-run the validator so the report really exercises the axioms
                auto again = xmod::validate_crossed_module(xm.G, xm.H, xm.t, xm.alpha);
                if (!again.ok()) return emit_error(ctx, again.error());
                payload["kind"] = "crossed_module";
                payload["G_order"] = xm.G->order;
                payload["H_order"] = xm.H->order;
                payload["G1_order"] = xm.G1.size();
                payload["tG_order"] = xm.tG.size();
                payload["pi0_order"] = xm.pi0.group->order;
                payload["pi1_order"] = xm.pi1.size();
                auto zg = xmod::center(xm.G);
                bool central = true;
                for (int v : xm.G1.elements) central = central && zg.contains(v);
                payload["G1_central"] = central;
                payload["tG_normal"] = xmod::is_normal(xm.tG);
                payload["axioms"] = "pass";
                return emit(ctx, true, std::move(payload));
            }
            if (auto it = ws.groups.find(check_name); it != ws.groups.end()) {
                auto again = xmod::validate_group(it->second->order, it->second->mul,
                                                  it->second->labels);
                if (!again.ok()) return emit_error(ctx, again.error());
                payload["kind"] = "group";
                payload["order"] = it->second->order;
                payload["abelian"] = it->second->abelian();
                return emit(ctx, true, std::move(payload));
            }
            if (auto it = ws.nerves.find(check_name); it != ws.nerves.end()) {
                payload["kind"] = "nerve";
                payload["vertices"] = it->second->vertices;
                payload["edges"] = it->second->edge_count();
                payload["triangles"] = it->second->triangle_count();
                payload["components"] = it->second->components;
                payload["euler_characteristic"] = it->second->euler_characteristic();
                return emit(ctx, true, std::move(payload));
            }
            if (auto it = ws.cocycles.find(check_name); it != ws.cocycles.end()) {
                auto again = xmod::validate_cocycle(it->second.nerve, it->second.xm, it->second.g,
                                                    it->second.h);
                if (!again.ok()) return emit_error(ctx, again.error());
                payload["kind"] = "cocycle";
                payload["type"] = xmod::type_map(it->second).values;
                return emit(ctx, true, std::move(payload));
            }
            if (auto it = ws.bispaces.find(check_name); it != ws.bispaces.end()) {
                auto again = xmod::validate_bispace(it->second.xm, it->second.points,
                                                    it->second.raction, it->second.psi);
                if (!again.ok()) return emit_error(ctx, again.error());
                payload["kind"] = "bispace";
                payload["points"] = it->second.points;
                payload["type"] = xmod::type_of(it->second).coset;
                return emit(ctx, true, std::move(payload));
            }
            if (auto it = ws.labelings.find(check_name); it != ws.labelings.end()) {
                payload["kind"] = "labeling";
                payload["nerve"] = it->second.nerve;
                payload["edges"] = it->second.values.size();
                return emit(ctx, true, std::move(payload));
            }
            return emit_error(ctx, xmod::make_diag("unresolved", "no object named '" +
                                                                     check_name + "'"));
        }

        if (*cmd_aut) {
            auto it = ws.groups.find(aut_group);
            if (it == ws.groups.end())
                return emit_error(ctx, xmod::make_diag("unresolved", "no group named '" +
                                                                         aut_group + "'"));
            auto aut = xmod::enumerate_automorphisms(it->second, max_order);
            if (!aut.ok()) return emit_error(ctx, aut.error());
            Json payload;
            payload["group"] = aut_group;
            payload["aut_order"] = aut.value().group->order;
            payload["inn_order"] = aut.value().inner.size();
            payload["out_order"] = static_cast<int>(aut.value().outer_reps.size());
            payload["automorphisms"] = aut.value().autos;
            return emit(ctx, true, std::move(payload));
        }

        if (*cmd_bi) {
            auto it = ws.crossed_modules.find(bi_xm);
            if (it == ws.crossed_modules.end())
                return emit_error(ctx, xmod::make_diag("unresolved", "no crossed module named '" +
                                                                         bi_xm + "'"));
            Json payload;
            payload["xm"] = bi_xm;
            if (bi_standard >= 0) {
                if (bi_standard >= it->second->H->order)
                    return emit_error(ctx, xmod::make_diag("out-of-range", "xi out of range"));
                auto b = xmod::standard_bispace(it->second, bi_standard);
                payload["standard"] = bi_standard;
                payload["type"] = xmod::type_of(b).coset;
                payload["psi"] = b.psi;
                return emit(ctx, true, std::move(payload));
            }
            auto p = xmod::pi0_group(it->second);
            Json classes = Json::array();
            for (size_t c = 0; c < p.xi.size(); ++c) {
                Json cls;
                cls["xi"] = p.xi[c];
                cls["type"] = static_cast<int>(c);
                classes.push_back(cls);
            }
            payload["classes"] = classes;
            payload["group_order"] = p.group->order;
            payload["matches_pi0"] = p.matches_pi0;
            return emit(ctx, p.matches_pi0, std::move(payload));
        }

        if (*cmd_co) {
            int modes = (!co_check.empty()) + (!co_trivial.empty()) + (!co_equiv.empty()) +
                        (co_enumerate ? 1 : 0);
            if (modes != 1)
                return emit_error(ctx, xmod::make_diag(
                                           "usage",
                                           "pass exactly one of --check, --is-trivial, "
                                           "--equivalent, --enumerate"));
            auto named = [&](const std::string& name) -> const xmod::BibundleCocycle* {
                auto it = ws.cocycles.find(name);
                return it == ws.cocycles.end() ? nullptr : &it->second;
            };
            if (!co_check.empty()) {
                const auto* c = named(co_check);
                if (!c)
                    return emit_error(ctx, xmod::make_diag("unresolved", "no cocycle named '" +
                                                                             co_check + "'"));
                auto again = xmod::validate_cocycle(c->nerve, c->xm, c->g, c->h);
                if (!again.ok()) return emit_error(ctx, again.error());
                Json payload;
                payload["name"] = co_check;
                payload["valid"] = true;
                payload["type"] = xmod::type_map(*c).values;
                return emit(ctx, true, std::move(payload));
            }
            if (!co_trivial.empty()) {
                const auto* c = named(co_trivial);
                if (!c)
                    return emit_error(ctx, xmod::make_diag("unresolved", "no cocycle named '" +
                                                                             co_trivial + "'"));
                auto gauge = xmod::is_trivial(*c);
                Json payload;
                payload["name"] = co_trivial;
                payload["trivial"] = gauge.has_value();
                if (gauge) payload["gauge"] = gauge->k;
                return emit(ctx, gauge.has_value(), std::move(payload),
                            gauge ? Json::array() : Json::array({"no central section"}));
            }
            if (!co_equiv.empty()) {
                const auto* a = named(co_equiv[0]);
                const auto* b = named(co_equiv[1]);
                if (!a || !b)
                    return emit_error(ctx, xmod::make_diag("unresolved", "unknown cocycle name"));
                auto gauge = xmod::equivalent(*a, *b);
                Json payload;
                payload["first"] = co_equiv[0];
                payload["second"] = co_equiv[1];
                payload["equivalent"] = gauge.has_value();
                if (gauge) payload["gauge"] = gauge->k;
                return emit(ctx, gauge.has_value(), std::move(payload),
                            gauge ? Json::array() : Json::array({"not equivalent"}));
            }
            // --enumerate
            auto xit = ws.crossed_modules.find(co_xm);
            auto nit = ws.nerves.find(co_nerve);
            if (xit == ws.crossed_modules.end() || nit == ws.nerves.end())
                return emit_error(ctx, xmod::make_diag("unresolved",
                                                       "--enumerate needs valid --xm and --nerve"));
            auto cat = xmod::enumerate_pi0(nit->second, xit->second, max_enum);
            if (!cat.ok()) return emit_error(ctx, cat.error());
            Json payload;
            payload["xm"] = co_xm;
            payload["nerve"] = co_nerve;
            payload["classes"] = cat.value().size();
            payload["types"] = cat.value().types;
            payload["group_order"] = cat.value().group->order;
            payload["duals"] = cat.value().dual_class;
            return emit(ctx, true, std::move(payload));
        }

        if (*cmd_ch) {
            auto nit = ws.nerves.find(ch_nerve);
            if (nit == ws.nerves.end())
                return emit_error(ctx, xmod::make_diag("unresolved", "no nerve named '" +
                                                                         ch_nerve + "'"));
            auto git = ws.groups.find(ch_coeff);
            if (git == ws.groups.end())
                return emit_error(ctx, xmod::make_diag("unresolved", "no group named '" +
                                                                         ch_coeff + "'"));
            auto dec = xmod::cyclic_decomposition(git->second);
            if (!dec.ok()) return emit_error(ctx, dec.error());
            auto cx = xmod::build_complex(nit->second, dec.value());
            auto h = xmod::cohomology(cx, ch_deg);
            if (!h.ok()) return emit_error(ctx, h.error());
            Json payload;
            payload["nerve"] = ch_nerve;
            payload["coeff"] = ch_coeff;
            payload["degree"] = ch_deg;
            payload["invariant_factors"] = h.value().factors;
            payload["order"] = h.value().order();
            if (!ch_labeling.empty()) {
                // decide coboundary membership of a named degree-1 cochain
                if (ch_deg != 1)
                    return emit_error(ctx, xmod::make_diag(
                                               "usage", "--labeling only supports --deg 1"));
                auto lit = ws.labelings.find(ch_labeling);
                if (lit == ws.labelings.end())
                    return emit_error(ctx, xmod::make_diag("unresolved", "no labeling named '" +
                                                                             ch_labeling + "'"));
                auto cls = xmod::classify_cocycle(cx, 1, lit->second.values);
                if (!cls.ok()) return emit_error(ctx, cls.error());
                payload["labeling"] = ch_labeling;
                payload["coboundary"] = cls.value().is_zero;
                Json witnesses = Json::array();
                if (cls.value().is_zero)
                    payload["primitive"] = cls.value().witness;
                else
                    witnesses.push_back("no primitive exists: SNF congruence system insolvable");
                return emit(ctx, cls.value().is_zero, std::move(payload), std::move(witnesses));
            }
            return emit(ctx, true, std::move(payload));
        }

        if (*cmd_ob) {
            auto xit = ws.crossed_modules.find(ob_xm);
            auto nit = ws.nerves.find(ob_nerve);
            auto tit = ws.labelings.find(ob_tau);
            if (xit == ws.crossed_modules.end() || nit == ws.nerves.end() ||
                tit == ws.labelings.end())
                return emit_error(ctx, xmod::make_diag("unresolved", "unknown name"));
            auto ob = xmod::lifting_obstruction(nit->second, xit->second, tit->second.values);
            if (!ob.ok()) return emit_error(ctx, ob.error());
            const auto& r = ob.value();
            auto h2 = xmod::cohomology(r.cochains, 2).value();
            Json payload;
            payload["xm"] = ob_xm;
            payload["nerve"] = ob_nerve;
            payload["tau"] = ob_tau;
            payload["zero"] = r.cls.is_zero;
            payload["representative"] = r.cls.representative;
            payload["H2_invariant_factors"] = h2.factors;
            Json witnesses = Json::array();
            if (r.cls.is_zero) {
                payload["primitive"] = r.cls.witness;
                payload["corrected_lift"] = *r.corrected;
            } else {
                witnesses.push_back("no primitive exists: SNF congruence system insolvable");
            }
            return emit(ctx, r.cls.is_zero, std::move(payload), std::move(witnesses));
        }

        if (*cmd_ex) {
            auto xit = ws.crossed_modules.find(ex_xm);
            auto nit = ws.nerves.find(ex_nerve);
            if (xit == ws.crossed_modules.end() || nit == ws.nerves.end())
                return emit_error(ctx, xmod::make_diag("unresolved", "unknown name"));
            auto rep = xmod::exact_sequence_report(nit->second, xit->second, max_enum);
            if (!rep.ok()) return emit_error(ctx, rep.error());
            const auto& r = rep.value();
            Json payload;
            payload["xm"] = ex_xm;
            payload["nerve"] = ex_nerve;
            payload["H1_order"] = r.h1_order;
            payload["H1_invariant_factors"] = r.h1_factors;
            payload["H2_order"] = r.h2_order;
            payload["H2_invariant_factors"] = r.h2_factors;
            payload["pi0_bibun"] = r.bibun_classes;
            payload["map_order"] = r.map_order;
            payload["ker_eps"] = r.ker_eps;
            payload["iota_injective"] = r.iota_injective;
            payload["ker_type_eq_im_iota"] = r.ker_type_eq_im_iota;
            payload["im_type_eq_ker_eps"] = r.im_type_eq_ker_eps;
            payload["cardinality_identity"] = r.cardinality_identity;
            payload["epsilon_homomorphism"] = r.epsilon_homomorphism;
            payload["exact"] = r.exact;
            Json witnesses = Json::array();
            for (const auto& f : r.failures) witnesses.push_back(f);
            return emit(ctx, r.exact, std::move(payload), std::move(witnesses));
        }

        if (*cmd_st) {
            auto xit = ws.crossed_modules.find(st_xm);
            auto nit = ws.nerves.find(st_nerve);
            auto git = ws.labelings.find(st_g);
            if (xit == ws.crossed_modules.end() || nit == ws.nerves.end() ||
                git == ws.labelings.end())
                return emit_error(ctx, xmod::make_diag("unresolved", "unknown name"));
            auto st = xmod::bibundle_structures(nit->second, xit->second, git->second.values);
            if (!st.ok()) return emit_error(ctx, st.error());
            const auto& r = st.value();
            Json payload;
            payload["xm"] = st_xm;
            payload["nerve"] = st_nerve;
            payload["g"] = st_g;
            payload["count"] = r.solutions.size();
            payload["solutions"] = r.solutions;
            Json witnesses = Json::array();
            if (r.failing_cycle) {
                Json w;
                w["edge"] = {(*r.failing_cycle)[0], (*r.failing_cycle)[1]};
                w["holonomy_defect"] = (*r.failing_cycle)[2];
                witnesses.push_back(w);
            }
            return emit(ctx, !r.solutions.empty(), std::move(payload), std::move(witnesses));
        }
    } catch (const std::exception& e) {
        return emit_error(ctx, xmod::make_diag("exception", e.what()));
    }
    return 2;
}
