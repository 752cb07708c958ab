// wdcolor: weak-diameter colorings of graph powers from structural witnesses.
//
// Subcommands:
//   color   tw | layered | construction | apex pipelines
//   verify  re-check a coloring against a claimed bound
//   bounds  evaluate the certified-bound recurrences
//   gen     deterministic corpus generators
//   oracle  exhaustive minimum weak diameter on tiny graphs
//   bench   scaling runs, CSV output
//
// Exit codes: 0 certified, 2 input/validation error, 3 certification failure,
// 4 escalation exhausted.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "wd/centered.hpp"
#include "wd/construction.hpp"
#include "wd/formats.hpp"
#include "wd/generators.hpp"
#include "wd/heuristic_td.hpp"
#include "wd/layered_color.hpp"
#include "wd/oracle.hpp"
#include "wd/tree_color.hpp"

namespace {

constexpr const char* kVersion = "wdcolor 1.0.0";

using nlohmann::json;

json bound_json(const wd::Bound& b) {
    if (b <= wd::Bound(std::numeric_limits<std::int64_t>::max()))
        return json(wd::bound_to_i64_saturating(b));
    return json(wd::bound_str(b));
}

json report_json(const wd::CertificateReport& rep) {
    json j;
    j["bound_claimed"] = bound_json(rep.bound_claimed);
    j["in_g_hops"] = rep.in_g_hops;
    j["pass"] = rep.pass;
    j["worst"] = rep.worst;
    j["components"] = json::array();
    for (const auto& rec : rep.components) {
        json c;
        c["color"] = rec.color - 1;
        c["size"] = rec.size;
        c["weak_diameter"] = rec.wd_power == wd::kInfDist
                                 ? json("inf")
                                 : json(rec.wd_power);
        c["weak_diameter_g"] = rec.wd_g;
        c["witness"] = {rec.witness.first, rec.witness.second};
        if (rec.truncated) c["truncated"] = true;
        j["components"].push_back(std::move(c));
    }
    return j;
}

json plan_json(const wd::StripPlan& plan) {
    json j;
    j["strip_layers"] = plan.strip_layers;
    j["margin_even"] = plan.margin_even;
    j["margin_odd"] = plan.margin_odd;
    j["ell_secondary"] = plan.ell_secondary;
    j["d_even"] = plan.d_even;
    j["d_odd"] = plan.d_odd;
    j["escalation"] = plan.escalation;
    return j;
}

void write_outputs(const std::string& prefix, const wd::Coloring& coloring,
                   json cert, const std::string& command, double ms) {
    cert["tool"] = kVersion;
    cert["command"] = command;
    cert["timing_ms"] = ms;
    std::ostringstream cs;
    cs << cert.dump(2) << '\n';
    wd::save_text(prefix + ".cert.json", cs.str());
    std::ostringstream col;
    wd::write_coloring_json(col, coloring);
    wd::save_text(prefix + ".coloring.json", col.str());
}

std::string echo_command(int argc, char** argv) {
    std::string s;
    for (int i = 0; i < argc; ++i) {
        if (i) s += ' ';
        s += argv[i];
    }
    return s;
}

struct Timer {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    double ms() const {
        return std::chrono::duration<double, std::milli>(
                   std::chrono::steady_clock::now() - t0)
            .count();
    }
};

int run_color(const std::string& mode, const std::string& gr_path,
              const std::string& td_path, const std::string& layers_path,
              const std::string& construction_path, const std::string& apices_csv,
              int ell, int w, int m, long long bound_override, int escalation_cap,
              int threads, const std::string& out_prefix, bool g_hops,
              const std::string& command) {
    Timer timer;
    wd::Graph g = wd::load_gr(gr_path);

    if (mode == "tw") {
        if (w <= 0) {
            std::cerr << "error: --mode tw requires -w\n";
            return 2;
        }
        std::optional<wd::RootedTreeDecomposition> rtd;
        if (!td_path.empty()) rtd = wd::load_td(td_path, g.vertex_count());
        auto res = wd::color_bounded_treewidth(g, ell, w, rtd);
        wd::Bound bound =
            bound_override >= 0 ? wd::Bound(bound_override) : res.bound;
        auto rep = wd::certify(g, res.coloring, bound, g_hops, threads,
                               bound_override < 0);
        json cert = report_json(rep);
        cert["mode"] = "tw";
        cert["w"] = w;
        cert["width_used"] = res.width;
        write_outputs(out_prefix, res.coloring, cert, command, timer.ms());
        std::cout << (rep.pass ? "certified" : "FAILED") << " bound="
                  << wd::bound_str(bound)
                  << " worst=" << rep.worst_wd() << "\n";
        return rep.pass ? 0 : 3;
    }

    if (mode == "layered") {
        if (td_path.empty() || layers_path.empty()) {
            std::cerr << "error: --mode layered requires --td and --layers\n";
            return 2;
        }
        auto rtd = wd::load_td(td_path, g.vertex_count());
        auto ly = wd::load_layering(layers_path, g.vertex_count());
        int lw = wd::layered_width(g, rtd, ly);
        int w_used = w > 0 ? w : lw;
        wd::LayeredOptions opt;
        opt.escalation_cap = escalation_cap;
        opt.threads = threads;
        auto res = wd::color_layered(g, ell, rtd, ly, w_used, opt);
        json cert = report_json(res.report);
        cert["mode"] = "layered";
        cert["strip_plan"] = plan_json(res.plan);
        cert["escalations"] = res.escalations;
        cert["achieved"] = res.achieved;
        write_outputs(out_prefix, res.coloring, cert, command, timer.ms());
        std::cout << (res.certified ? "certified" : "ESCALATION EXHAUSTED")
                  << " bound=" << wd::bound_str(res.bound_claimed)
                  << " achieved=" << res.achieved
                  << " escalations=" << res.escalations << "\n";
        return res.certified ? 0 : 4;
    }

    if (mode == "construction") {
        if (td_path.empty() || construction_path.empty()) {
            std::cerr
                << "error: --mode construction requires --td and --construction\n";
            return 2;
        }
        auto rtd = wd::load_td(td_path, g.vertex_count());
        std::ifstream cf(construction_path);
        if (!cf) {
            std::cerr << "error: cannot open " << construction_path << "\n";
            return 2;
        }
        auto meta = wd::parse_construction_json(cf);
        if (meta.root > 0) {
            if (meta.root > rtd.node_count()) {
                std::cerr << "error: construction root out of range\n";
                return 2;
            }
            rtd.reroot(meta.root - 1);
        }
        int max_bag = 0;
        for (const auto& b : rtd.bags)
            max_bag = std::max(max_bag, static_cast<int>(b.size()));
        wd::Construction con;
        con.eta = meta.eta;
        con.theta = meta.theta;
        auto make_colorer = [&](const std::string& name) {
            if (name == "vertex_cover")
                return wd::make_vertex_cover_colorer(std::max(meta.theta, max_bag));
            if (name == "trivial_small")
                return wd::make_trivial_small_colorer(
                    std::max(meta.theta + 1, max_bag));
            throw wd::ConstructionError("unknown colorer: " + name);
        };
        con.colorer_f = make_colorer(meta.colorer_f);
        con.colorer_fprime = make_colorer(meta.colorer_fprime);
        con.rtd = std::move(rtd);
        auto res = wd::color_construction(
            g, con, ell, std::max(m, 2), {},
            std::vector<int>(g.vertex_count(), 0));
        wd::Bound bound =
            bound_override >= 0 ? wd::Bound(bound_override) : res.bound;
        auto rep = wd::certify(g, res.coloring, bound, g_hops, threads,
                               bound_override < 0);
        json cert = report_json(rep);
        cert["mode"] = "construction";
        cert["eta"] = meta.eta;
        cert["theta"] = meta.theta;
        write_outputs(out_prefix, res.coloring, cert, command, timer.ms());
        std::cout << (rep.pass ? "certified" : "FAILED")
                  << " bound=" << wd::bound_str(bound)
                  << " worst=" << rep.worst_wd() << "\n";
        return rep.pass ? 0 : 3;
    }

    if (mode == "apex") {
        if (td_path.empty() || layers_path.empty() || apices_csv.empty()) {
            std::cerr
                << "error: --mode apex requires --td, --layers and --apices\n";
            return 2;
        }
        wd::VertexSet apices;
        {
            std::stringstream ss(apices_csv);
            std::string tok;
            while (std::getline(ss, tok, ',')) {
                int v = std::stoi(tok);
                if (v < 1 || v > g.vertex_count()) {
                    std::cerr << "error: apex id out of range (1-based)\n";
                    return 2;
                }
                apices.push_back(v - 1);
            }
            std::sort(apices.begin(), apices.end());
            apices.erase(std::unique(apices.begin(), apices.end()), apices.end());
        }
        const int n_minus = g.vertex_count() - static_cast<int>(apices.size());
        auto rtd = wd::load_td(td_path, n_minus);
        auto ly = wd::load_layering(layers_path, n_minus);
        int lw_w = w > 0 ? w : 0;
        wd::LayeredOptions opt;
        opt.escalation_cap = escalation_cap;
        opt.threads = threads;
        if (lw_w == 0) {
            // measure the layered width on g - apices
            wd::VertexSet rest;
            for (int v = 0, i = 0; v < g.vertex_count(); ++v) {
                if (i < static_cast<int>(apices.size()) && apices[i] == v) {
                    ++i;
                    continue;
                }
                rest.push_back(v);
            }
            auto sub = wd::induced_subgraph(g, rest);
            lw_w = wd::layered_width(sub.graph, rtd, ly);
        }
        auto res = wd::color_apex_layered(g, apices, ell, rtd, ly, lw_w, opt);
        wd::Bound bound =
            bound_override >= 0 ? wd::Bound(bound_override) : res.bound;
        auto rep = wd::certify(g, res.coloring, bound, g_hops, threads,
                               bound_override < 0);
        json cert = report_json(rep);
        cert["mode"] = "apex";
        cert["apices"] = apices_csv;
        cert["strip_plan"] = plan_json(res.layered.plan);
        cert["layered_measured"] = bound_json(res.layered_measured);
        write_outputs(out_prefix, res.coloring, cert, command, timer.ms());
        std::cout << (rep.pass ? "certified" : "FAILED")
                  << " bound=" << wd::bound_str(bound)
                  << " worst=" << rep.worst_wd() << "\n";
        return rep.pass ? 0 : 3;
    }

    std::cerr << "error: unknown mode " << mode << "\n";
    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{kVersion};
    app.require_subcommand(1);
    std::string command = echo_command(argc, argv);

    // color
    auto* color = app.add_subcommand("color", "color a graph power");
    std::string mode = "tw", gr_path, td_path, layers_path, construction_path,
                apices_csv, out_prefix = "out";
    int ell = 1, w = 0, m = 2, escalation_cap = 4, threads = 1;
    long long bound_override = -1;
    bool g_hops = false;
    color->add_option("--mode", mode, "tw|layered|construction|apex");
    color->add_option("graph", gr_path, "PACE .gr file")->required();
    color->add_option("--td", td_path, "PACE .td witness");
    color->add_option("--layers", layers_path, "layering JSON");
    color->add_option("--construction", construction_path, "construction JSON");
    color->add_option("--apices", apices_csv, "comma-separated 1-based apex ids");
    color->add_option("--ell", ell, "power scale")->check(CLI::PositiveNumber);
    color->add_option("-w", w, "width parameter");
    color->add_option("-m", m, "palette size (construction mode)");
    color->add_option("--bound", bound_override, "override the claimed bound");
    color->add_option("--escalation-cap", escalation_cap, "layered escalations");
    color->add_option("--threads", threads, "certification workers");
    color->add_option("-o,--out", out_prefix, "output prefix");
    color->add_flag("--g-hops", g_hops, "check the bound in G hops");

    // verify
    auto* verify = app.add_subcommand("verify", "re-check a coloring");
    std::string v_gr, v_coloring;
    long long v_bound = 0;
    int v_threads = 1;
    bool v_g_hops = false;
    verify->add_option("graph", v_gr, "PACE .gr file")->required();
    verify->add_option("coloring", v_coloring, "coloring JSON")->required();
    verify->add_option("--bound", v_bound, "claimed bound")->required();
    verify->add_option("--threads", v_threads, "certification workers");
    verify->add_flag("--g-hops", v_g_hops, "check the bound in G hops");

    // bounds
    auto* bounds = app.add_subcommand("bounds", "evaluate bound recurrences");
    int b_theta = 1, b_ell = 1, b_eta = 0, b_k = -1, b_r = 0;
    long long b_n = 1, b_nf = 1;
    bounds->add_option("--theta", b_theta)->required();
    bounds->add_option("--ell", b_ell)->required();
    bounds->add_option("--N", b_n);
    bounds->add_option("--NFplus", b_nf);
    bounds->add_option("--eta", b_eta);
    bounds->add_option("--k", b_k, "also print the combination bound for k,r");
    bounds->add_option("--r", b_r);

    // gen
    auto* gen = app.add_subcommand("gen", "generate corpus instances");
    std::string g_family = "path", g_out = "gen";
    int g_n = 10, g_rows = 5, g_cols = 5, g_k = 2;
    double g_keep = 0.5;
    std::uint64_t g_seed = 1;
    gen->add_option("--family", g_family,
                    "path|cycle|grid|tree|partial_ktree|layered_random|apexed");
    gen->add_option("--n", g_n);
    gen->add_option("--rows", g_rows);
    gen->add_option("--cols", g_cols);
    gen->add_option("--k", g_k);
    gen->add_option("--keep", g_keep);
    gen->add_option("--seed", g_seed);
    gen->add_option("-o,--out", g_out, "output prefix")->required();

    // oracle
    auto* oracle = app.add_subcommand("oracle", "exhaustive tiny-instance oracle");
    std::string o_gr, o_out;
    int o_ell = 1, o_m = 2;
    oracle->add_option("graph", o_gr)->required();
    oracle->add_option("--ell", o_ell)->check(CLI::PositiveNumber);
    oracle->add_option("-m", o_m)->check(CLI::PositiveNumber);
    oracle->add_option("-o,--out", o_out, "write the witness coloring JSON");
    int o_threads = 1;
    oracle->add_option("--threads", o_threads, "search workers");

    // bench
    auto* bench = app.add_subcommand("bench", "tree-width pipeline scaling");
    std::string be_sizes = "100,1000", be_out;
    int be_w = 2, be_ell = 1, be_seeds = 3;
    double be_keep = 0.5;
    bench->add_option("--w", be_w);
    bench->add_option("--ell", be_ell);
    bench->add_option("--sizes", be_sizes, "comma-separated vertex counts");
    bench->add_option("--seeds", be_seeds);
    bench->add_option("--keep", be_keep);
    bench->add_option("-o,--out", be_out, "CSV path (default stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (color->parsed())
            return run_color(mode, gr_path, td_path, layers_path,
                             construction_path, apices_csv, ell, w, m,
                             bound_override, escalation_cap, threads, out_prefix,
                             g_hops, command);

        if (verify->parsed()) {
            Timer timer;
            wd::Graph g = wd::load_gr(v_gr);
            wd::Coloring c = wd::load_coloring(v_coloring, g.vertex_count());
            auto rep = wd::certify(g, c, wd::Bound(v_bound), v_g_hops, v_threads);
            json out = report_json(rep);
            out["tool"] = kVersion;
            out["command"] = command;
            out["timing_ms"] = timer.ms();
            std::cout << out.dump(2) << "\n";
            if (rep.worst >= 0) {
                const auto& rec = rep.components[rep.worst];
                std::cerr << "worst component: color=" << rec.color - 1
                          << " size=" << rec.size << " wd="
                          << (rec.wd_power == wd::kInfDist
                                  ? std::string("inf")
                                  : std::to_string(rec.wd_power))
                          << " witness=(" << rec.witness.first << ","
                          << rec.witness.second << ")\n";
            }
            return rep.pass ? 0 : 3;
        }

        if (bounds->parsed()) {
            if (b_k >= 0)
                std::cout << "f(" << b_k << "," << b_r << "," << b_ell << ","
                          << b_n << ") = "
                          << wd::bound_str(wd::bound_combine(b_k, b_r, b_ell,
                                                             wd::Bound(b_n)))
                          << "\n";
            auto parts = wd::tree_extension_parts(b_theta, b_ell, wd::Bound(b_n),
                                                  wd::Bound(b_nf));
            std::cout << "f1(N) = " << wd::bound_str(parts.f1_of_n)
                      << "  N_theta = " << wd::bound_str(parts.n_theta)
                      << "  N'_theta = " << wd::bound_str(parts.n_theta_prime)
                      << "\n";
            for (int e = 0; e <= b_eta; ++e)
                std::cout << "f*(" << e << ") = "
                          << wd::bound_str(wd::bound_tree_extension(
                                 e, b_theta, b_ell, wd::Bound(b_n),
                                 wd::Bound(b_nf)))
                          << "\n";
            return 0;
        }

        if (gen->parsed()) {
            wd::GenSpec spec;
            spec.family = wd::family_from_name(g_family);
            spec.n = g_n;
            spec.rows = g_rows;
            spec.cols = g_cols;
            spec.k = g_k;
            spec.keep = g_keep;
            spec.seed = g_seed;
            auto gen_out = wd::generate(spec);
            {
                std::ostringstream os;
                wd::write_gr(os, gen_out.graph);
                wd::save_text(g_out + ".gr", os.str());
            }
            int witness_n = gen_out.graph.vertex_count() -
                            static_cast<int>(gen_out.apices.size());
            if (gen_out.rtd) {
                std::ostringstream os;
                wd::write_td(os, *gen_out.rtd, witness_n);
                wd::save_text(g_out + ".td", os.str());
            }
            if (gen_out.layering) {
                std::ostringstream os;
                wd::write_layering_json(os, *gen_out.layering);
                wd::save_text(g_out + ".layers.json", os.str());
            }
            if (!gen_out.apices.empty()) {
                std::string csv;
                for (size_t i = 0; i < gen_out.apices.size(); ++i) {
                    if (i) csv += ',';
                    csv += std::to_string(gen_out.apices[i] + 1);
                }
                wd::save_text(g_out + ".apices", csv + "\n");
            }
            {
                json spec_echo;
                spec_echo["family"] = g_family;
                spec_echo["n"] = g_n;
                spec_echo["rows"] = g_rows;
                spec_echo["cols"] = g_cols;
                spec_echo["k"] = g_k;
                spec_echo["keep"] = g_keep;
                spec_echo["seed"] = g_seed;
                wd::save_text(g_out + ".genspec.json", spec_echo.dump() + "\n");
            }
            std::cout << "wrote " << g_out << ".gr (n="
                      << gen_out.graph.vertex_count()
                      << ", m=" << gen_out.graph.edge_count() << ")\n";
            return 0;
        }

        if (oracle->parsed()) {
            wd::Graph g = wd::load_gr(o_gr);
            auto res = wd::brute_min_weak_diameter(g, o_ell, o_m, 16, o_threads);
            std::cout << "D_min = " << res.d_min << "\n";
            if (!o_out.empty()) {
                std::ostringstream os;
                wd::write_coloring_json(os, res.witness);
                wd::save_text(o_out, os.str());
            }
            return 0;
        }

        if (bench->parsed()) {
            std::ostringstream csv;
            csv << "n,time_ms,pass\n";
            std::stringstream ss(be_sizes);
            std::string tok;
            bool all_pass = true;
            while (std::getline(ss, tok, ',')) {
                int n = std::stoi(tok);
                for (int s = 1; s <= be_seeds; ++s) {
                    wd::GenSpec spec;
                    spec.family = wd::GenSpec::kPartialKtree;
                    spec.n = n;
                    spec.k = be_w;
                    spec.keep = be_keep;
                    spec.seed = static_cast<std::uint64_t>(s);
                    auto inst = wd::generate(spec);
                    Timer t;
                    auto res = wd::color_bounded_treewidth(inst.graph, be_ell,
                                                           be_w, inst.rtd);
                    auto rep = wd::certify(inst.graph, res.coloring, res.bound,
                                           false, 1, true);
                    all_pass = all_pass && rep.pass;
                    csv << n << ',' << t.ms() << ',' << (rep.pass ? 1 : 0)
                        << "\n";
                }
            }
            if (be_out.empty())
                std::cout << csv.str();
            else
                wd::save_text(be_out, csv.str());
            return all_pass ? 0 : 3;
        }
    } catch (const wd::FormatError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
