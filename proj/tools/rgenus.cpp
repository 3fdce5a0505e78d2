// rgenus: command-line front end for the genus library.
//
// Exit codes: 0 ok, 1 failed suite or computation (budget, cap, tolerance),
// 2 usage or invalid input.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "rgenus/asymptotics.hpp"
#include "rgenus/census.hpp"
#include "rgenus/embedding.hpp"
#include "rgenus/error.hpp"
#include "rgenus/fragile.hpp"
#include "rgenus/graph.hpp"
#include "rgenus/harness.hpp"
#include "rgenus/random.hpp"

using namespace rgenus;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Globals {
    std::uint64_t seed = 0;
    unsigned jobs = 0;
    std::string format = "json";
};

Graph load_graph(const std::string& path) {
    if (path == "-") return read_edge_list(std::cin);
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open " + path);
    return read_edge_list(in);
}

// CSV for a flat JSON object: one header line, one value line.
std::string flat_csv(const Json& j) {
    std::ostringstream head, row;
    bool first = true;
    for (const auto& [key, value] : j.items()) {
        if (value.is_object() || value.is_array()) continue;
        head << (first ? "" : ",") << key;
        row << (first ? "" : ",");
        if (value.is_string()) row << value.get<std::string>();
        else if (!value.is_null()) row << value.dump();
        first = false;
    }
    return head.str() + "\n" + row.str() + "\n";
}

// Writes to `out` if given, else to $RGENUS_OUT_DIR/<fallback> when that is
// set, else to stdout.
void emit(const std::string& text, const std::string& out, const std::string& fallback) {
    std::string path = out;
    if (path.empty() && std::getenv("RGENUS_OUT_DIR")) path = (std::filesystem::path(default_output_dir()) / fallback).string();
    if (path.empty() || path == "-") {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream f(path);
    if (!f) throw UsageError("cannot write " + path);
    f << text;
    if (!text.empty() && text.back() != '\n') f << '\n';
}

void emit_json(const Json& j, const Globals& g, const std::string& out, const std::string& name) {
    emit(g.format == "csv" ? flat_csv(j) : j.dump(2), out, name + (g.format == "csv" ? ".csv" : ".json"));
}

Json series_json(const std::string& name, double arg, double tol, const SeriesEval& e) {
    return Json{{"function", name},       {"arg", arg},
                {"tol", tol},             {"value", e.value},
                {"truncation_index", e.truncation_index}, {"tail_bound", e.tail_bound}};
}

Json prediction_json(std::uint64_t n, std::uint64_t m, const RegimePrediction& p) {
    Json j{{"n", n}, {"m", m}, {"regime", to_string(p.regime)}, {"lo", p.lo}, {"hi", p.hi}};
    j["lambda"] = p.lambda ? Json(*p.lambda) : Json(nullptr);
    j["s"] = p.s ? Json(*p.s) : Json(nullptr);
    j["j"] = p.j ? Json(*p.j) : Json(nullptr);
    return j;
}

void save_config(const ExperimentConfig& c, const std::string& path) {
    if (path.empty()) return;
    std::ofstream f(path);
    if (!f) throw UsageError("cannot write " + path);
    f << config_to_json(c).dump(2) << '\n';
}

int run_config(ExperimentConfig c, const Globals& g) {
    c.validate();
    const std::string fmt = c.format;
    if (c.command == "mc-kappa") {
        const Report r = run_mc_kappa(c);
        emit(fmt == "csv" ? rows_csv(r) : r.to_json().dump(2), c.output, "mc_kappa." + fmt);
    } else if (c.command == "curve") {
        emit(run_genus_curve(c), c.output, "curve.csv");
    } else if (c.command == "census") {
        const Report r = run_census(c);
        emit(fmt == "csv" ? census_curve_csv(r) : r.to_json().dump(2), c.output, "census." + fmt);
    } else if (c.command == "fragile") {
        const Report r = run_fragile(c);
        emit(fmt == "csv" ? rows_csv(r) : r.to_json().dump(2), c.output, "fragile." + fmt);
    } else if (c.command == "suite") {
        const Report r = run_suite(c);
        emit(r.to_json().dump(2), c.output, "suite_" + c.suite + ".json");
        for (const auto& v : r.body["verdicts"])
            std::cerr << (v["pass"].get<bool>() ? "PASS " : "FAIL ") << v["criterion"].get<std::string>() << ' '
                      << v["name"].get<std::string>() << '\n';
        return r.passed() ? 0 : 1;
    } else {
        throw UsageError("unknown command '" + c.command + "' in config");
    }
    (void)g;
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Genus machinery for Erdos-Renyi random graphs"};
    app.require_subcommand(1);
    app.fallthrough();
    Globals g;
    app.add_option("--seed", g.seed, "master seed");
    app.add_option("--jobs", g.jobs, "worker threads (0: all cores)");
    app.add_option("--format", g.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));

    int exit_code = 0;
    std::function<void()> action;

    // generate
    auto* gen = app.add_subcommand("generate", "sample a random graph and print its edge list");
    std::string model = "gnm", gen_input, gen_out, r_out;
    std::uint64_t gen_n = 0, gen_m = 0, gen_k = 0, gen_trial = 0;
    double gen_p = 0.0;
    gen->add_option("--model", model, "gnm | gnp | process | perturb")
        ->check(CLI::IsMember({"gnm", "gnp", "process", "perturb"}));
    gen->add_option("--n", gen_n, "vertices");
    gen->add_option("--m", gen_m, "edges (gnm) or process prefix length");
    gen->add_option("--p", gen_p, "edge probability (gnp)");
    gen->add_option("--k", gen_k, "random edges to add (perturb)");
    gen->add_option("--input", gen_input, "base graph (perturb)");
    gen->add_option("--trial", gen_trial, "trial index");
    gen->add_option("--out", gen_out, "edge-list output (default stdout)");
    gen->add_option("--r-out", r_out, "perturb: the random edges in insertion order");
    gen->callback([&] {
        action = [&] {
            const Seed seed{g.seed, gen_trial};
            Graph out;
            if (model == "gnm") out = gnm(gen_n, gen_m, seed);
            else if (model == "gnp") out = gnp(gen_n, gen_p, seed);
            else if (model == "process") {
                EdgeProcess p(gen_n, seed);
                out = Graph(gen_n, p.take(gen_m));
            } else {
                const Graph h = load_graph(gen_input);
                const Perturbation pr = perturb(h, gen_k, seed);
                out = pr.graph;
                if (!r_out.empty()) {
                    std::ofstream f(r_out);
                    f << h.order() << ' ' << pr.random_edges.size() << '\n';
                    for (const auto& e : pr.random_edges) f << e.u << ' ' << e.v << '\n';
                }
            }
            std::ostringstream text;
            write_edge_list(text, out);
            emit(text.str(), gen_out, "graph.edgelist");
        };
    });

    // genus exact | bounds
    auto* genus = app.add_subcommand("genus", "exact genus or genus bounds of an edge-list graph");
    genus->require_subcommand(1);
    std::string genus_input, genus_out;
    std::uint64_t budget = kDefaultGenusBudget, cap = kDefaultCycleCap;
    unsigned ell = 4;
    auto* exact = genus->add_subcommand("exact", "minimum genus over all rotation systems");
    exact->add_option("--input", genus_input, "edge-list file or -")->required();
    exact->add_option("--budget", budget, "search nodes per block");
    exact->add_option("--out", genus_out);
    exact->callback([&] {
        action = [&] {
            const Graph gr = load_graph(genus_input);
            const ExactGenus eg = exact_genus(gr, budget);
            emit_json(Json{{"genus", eg.genus}, {"f", eg.f_min}, {"visited", eg.visited}}, g, genus_out, "genus");
        };
    });
    auto* bounds = genus->add_subcommand("bounds", "Euler-formula lower and upper bounds");
    bounds->add_option("--input", genus_input, "edge-list file or -")->required();
    bounds->add_option("--ell", ell, "short-cycle length")->check(CLI::Range(3u, 1000000u));
    bounds->add_option("--cap", cap, "cycle enumeration cap");
    bounds->add_option("--out", genus_out);
    bounds->callback([&] {
        action = [&] {
            const Graph gr = load_graph(genus_input);
            const GenusBounds b = genus_bounds(gr, ell, cap);
            Json j{{"n", gr.order()}, {"m", gr.size()}, {"kappa", components(gr).kappa}, {"ell", ell}};
            j["bounds"] = {{"lower", b.lower}, {"upper", b.upper}, {"lower_method", b.lower_method},
                           {"upper_method", b.upper_method}};
            if (g.format == "csv") {
                j["lower"] = b.lower;
                j["upper"] = b.upper;
            }
            emit_json(j, g, genus_out, "bounds");
        };
    });

    // asym u | u-prime | mu | lambda-i | mu-curve
    auto* asym = app.add_subcommand("asym", "limit functions u, u', mu, lambda(i)");
    std::string fn;
    double arg = 0.0, tol = 1e-10, lmin = 0.5, lmax = 20.0, lstep = 0.1;
    std::string asym_out;
    asym->add_option("function", fn, "u | u-prime | mu | lambda-i | mu-curve")
        ->required()
        ->check(CLI::IsMember({"u", "u-prime", "mu", "lambda-i", "mu-curve"}));
    asym->add_option("--arg", arg, "argument c, lambda or i");
    asym->add_option("--tol", tol, "absolute tolerance");
    asym->add_option("--min", lmin, "mu-curve: first lambda");
    asym->add_option("--max", lmax, "mu-curve: last lambda");
    asym->add_option("--step", lstep, "mu-curve: lambda step");
    asym->add_option("--out", asym_out);
    asym->callback([&] {
        action = [&] {
            if (fn == "mu-curve") return emit(mu_curve_csv(lmin, lmax, lstep, tol), asym_out, "mu_curve.csv");
            Json j;
            if (fn == "u") j = series_json(fn, arg, tol, u(arg, tol));
            else if (fn == "u-prime") j = series_json(fn, arg, tol, u_prime(arg, tol));
            else if (fn == "mu") j = series_json(fn, arg, tol, mu(arg, tol));
            else j = Json{{"function", fn}, {"arg", arg}, {"tol", tol}, {"value", lambda_i(arg, tol)}};
            emit_json(j, g, asym_out, "asym");
        };
    });

    // predict
    auto* predict = app.add_subcommand("predict", "regime and predicted genus of G(n, m)");
    std::uint64_t pn = 0, pm = 0;
    RegimeThresholds th;
    predict->add_option("--n", pn)->required();
    predict->add_option("--m", pm)->required();
    predict->add_option("--window-factor", th.critical_window_factor);
    predict->add_option("--supercritical-fraction", th.supercritical_max_fraction);
    predict->add_option("--near-linear-exponent", th.near_linear_max_exponent);
    predict->add_option("--boundary-band", th.boundary_band);
    predict->add_option("--dense-fraction", th.dense_fraction);
    predict->callback([&] { action = [&] { emit_json(prediction_json(pn, pm, predict_genus(pn, pm, th)), g, "", "predict"); }; });

    // contiguity
    auto* contig = app.add_subcommand("contiguity", "contiguity of S_g with G(n) or G(n, m)");
    std::uint64_t cn = 0;
    std::optional<std::uint64_t> cm;
    double cg = 0.0, eps = 0.1;
    contig->add_option("--n", cn)->required();
    contig->add_option("--m", cm);
    contig->add_option("--g", cg)->required();
    contig->add_option("--eps", eps);
    contig->callback([&] {
        action = [&] {
            const Contiguity v = contiguity_verdict(cn, cm, cg, eps, th);
            Json j{{"n", cn}, {"m", cm ? Json(*cm) : Json(nullptr)}, {"g", cg}, {"eps", eps}, {"verdict", to_string(v)}};
            emit_json(j, g, "", "contiguity");
        };
    });

    // experiment commands share one config
    ExperimentConfig cfg;
    std::string save_path;
    auto common = [&](CLI::App* sub) {
        sub->add_option("--trials", cfg.trials);
        sub->add_option("--out", cfg.output, "report path (default stdout or $RGENUS_OUT_DIR)");
        sub->add_option("--save-config", save_path, "also write the run's config as JSON");
        sub->add_option("--cap", cfg.cap, "cycle enumeration cap");
        sub->add_option("--tol", cfg.tol);
    };
    auto finish = [&](const std::string& command) {
        cfg.command = command;
        cfg.seed = g.seed;
        cfg.jobs = g.jobs;
        cfg.format = g.format;
        save_config(cfg, save_path);
        exit_code = run_config(cfg, g);
    };

    auto* census = app.add_subcommand("census", "slightly supercritical census");
    census->require_subcommand(1);
    auto* superc = census->add_subcommand("supercritical", "giant 2-core statistics of G(n, n/2 + s)");
    superc->add_option("--n", cfg.n)->required();
    superc->add_option("--s", cfg.s_values, "one or more s")->required();
    superc->add_option("--ell", cfg.ell);
    superc->add_option("--lower-max-ell", cfg.lower_max_ell, "best lower bound over 3..L");
    superc->add_option("--a", cfg.a, "neighbourhood cap parameter for fact9_check (default (1/2) ln(s^3/n^2))");
    superc->add_option("--z-i", cfg.z_i, "Z(n, i) parameter");
    common(superc);
    superc->callback([&] { action = [&] { finish("census"); }; });

    auto* mc = app.add_subcommand("mc", "Monte Carlo experiments");
    mc->require_subcommand(1);
    auto* kappa = mc->add_subcommand("kappa", "components after floor(lambda n) edges");
    kappa->add_option("--n", cfg.n)->required();
    kappa->add_option("--lambda", cfg.lambdas, "one or more lambda")->required();
    common(kappa);
    kappa->callback([&] { action = [&] { finish("mc-kappa"); }; });

    auto* curve = app.add_subcommand("curve", "g/m versus m (CSV)");
    curve->add_option("--n", cfg.n)->required();
    curve->add_option("--m", cfg.m_grid, "m values (default: log grid)");
    curve->add_option("--ell", cfg.ell);
    common(curve);
    curve->callback([&] { action = [&] { finish("curve"); }; });

    auto* fragile = app.add_subcommand("fragile", "perturbation of a bounded-degree graph");
    fragile->add_option("--input", cfg.input, "base graph edge list");
    fragile->add_option("--base", cfg.base, "path | cycle | grid | random-tree")
        ->check(CLI::IsMember({"path", "cycle", "grid", "random-tree"}));
    fragile->add_option("--n", cfg.n, "base graph order");
    fragile->add_option("--delta", cfg.delta)->required();
    fragile->add_option("--k", cfg.k)->required();
    fragile->add_option("--ell", cfg.ell);
    common(fragile);
    fragile->callback([&] { action = [&] { finish("fragile"); }; });

    auto* suite = app.add_subcommand("suite", "run a named acceptance suite");
    suite->add_option("name", cfg.suite)->required();
    suite->add_option("--out", cfg.output);
    suite->callback([&] {
        action = [&] {
            const auto& names = suite_names();
            if (std::find(names.begin(), names.end(), cfg.suite) == names.end())
                throw UsageError("unknown suite '" + cfg.suite + "'");
            finish("suite");
        };
    });

    auto* run = app.add_subcommand("run", "rerun an experiment from a saved config");
    std::string config_path;
    std::string run_out;
    run->add_option("--config", config_path)->required();
    run->add_option("--out", run_out, "override the config's output path");
    run->callback([&] {
        action = [&] {
            std::ifstream in(config_path);
            if (!in) throw UsageError("cannot open " + config_path);
            Json j;
            try {
                j = Json::parse(in);
            } catch (const nlohmann::json::exception& e) {
                throw UsageError(std::string("bad config: ") + e.what());
            }
            ExperimentConfig loaded = config_from_json(j);
            if (!run_out.empty()) loaded.output = run_out;
            exit_code = run_config(loaded, g);
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (action) action();
    } catch (const UsageError& e) {
        std::cerr << "rgenus: " << e.what() << '\n';
        return 2;
    } catch (const GraphError& e) {
        std::cerr << "rgenus: invalid graph: " << e.what() << '\n';
        return 2;
    } catch (const DomainError& e) {
        std::cerr << "rgenus: " << e.what() << '\n';
        return 2;
    } catch (const BudgetExceeded& e) {
        std::cerr << "rgenus: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "rgenus: " << e.what() << '\n';
        return 1;
    }
    return exit_code;
}
