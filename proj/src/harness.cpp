#include "rgenus/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <exception>
#include <fstream>
#include <istream>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

#include "rgenus/asymptotics.hpp"
#include "rgenus/census.hpp"
#include "rgenus/embedding.hpp"
#include "rgenus/error.hpp"
#include "rgenus/fragile.hpp"
#include "rgenus/random.hpp"

namespace rgenus {

extern const char* const kBundledCorpus;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string utc_timestamp() {
    const std::time_t now = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

std::string fmt(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.10g", x);
    return buf;
}

double mean_of(const std::vector<double>& xs) {
    if (xs.empty()) return 0.0;
    double sum = 0.0;
    for (double x : xs) sum += x;
    return sum / static_cast<double>(xs.size());
}

Json verdict(const std::string& criterion, const std::string& name, bool pass, Json measured) {
    Json v;
    v["criterion"] = criterion;
    v["name"] = name;
    v["pass"] = pass;
    v["measured"] = std::move(measured);
    return v;
}

Json supercritical_json(const SupercriticalReport& r) {
    Json j;
    j["n"] = r.n;
    j["m"] = r.m;
    j["s"] = r.s;
    j["giant_vertices"] = r.giant_vertices;
    j["core_vertices"] = r.core_vertices;
    j["core_edges"] = r.core_edges;
    j["core_excess"] = r.core_excess;
    j["core_components"] = r.core_components;
    j["short_cycle_count"] = r.short_cycle_count;
    j["Z_value"] = r.z_value ? Json(*r.z_value) : Json(nullptr);
    j["x_param"] = r.x_param;
    j["fact8"] = r.fact8 ? Json(*r.fact8) : Json(nullptr);
    j["fact9"] = r.fact9 ? Json(*r.fact9) : Json(nullptr);
    j["genus_lower"] = r.genus_lower;
    j["genus_lower_ell"] = r.genus_lower_ell;
    j["genus_upper"] = r.genus_upper;
    j["predicted"] = r.predicted;
    return j;
}

Json fragile_json(const FragileReport& r) {
    Json j;
    j["n"] = r.n;
    j["k"] = r.k;
    j["Delta"] = r.delta;
    j["l"] = r.l;
    j["t"] = r.t;
    j["s"] = r.s;
    j["dense_branch"] = r.dense_branch;
    j["t_min"] = r.t_min;
    j["t_max"] = r.t_max;
    j["t_in_range"] = r.t_in_range;
    j["gamma_edges"] = r.gamma_edges;
    j["good_edge_count"] = r.good_edge_count;
    j["genus_lower_gamma"] = r.genus_lower_gamma;
    j["lower_ell"] = r.lower_ell;
    j["upper_bound"] = r.upper_bound;
    return j;
}

void attach_rows(Report& report, const std::vector<TrialRow>& rows) {
    Json out = Json::array();
    Json walls = Json::array();
    for (const auto& row : rows) {
        out.push_back(row_to_json(row));
        walls.push_back(row.wall_seconds);
    }
    report.body["rows"] = std::move(out);
    report.metadata["wall_seconds"] = std::move(walls);
}

Report new_report(const ExperimentConfig& config) {
    Report r;
    r.body["config"] = config_to_json(config);
    r.metadata["timestamp"] = utc_timestamp();
    r.metadata["jobs"] = resolve_jobs(config.jobs);
    return r;
}

}  // namespace

// ---------------------------------------------------------------- config

void ExperimentConfig::validate() const {
    if (trials < 1) throw DomainError("trials must be at least 1");
    if (!(tol > 0.0) || !std::isfinite(tol)) throw DomainError("tol must be positive");
    if (cap < 1) throw DomainError("cap must be at least 1");
    if (ell < 3) throw DomainError("ell must be at least 3");
    if (format != "json" && format != "csv") throw DomainError("format must be json or csv");
    for (double l : lambdas)
        if (!(l >= 0.0) || !std::isfinite(l)) throw DomainError("lambda values must be finite and >= 0");
    if (a && !(*a > 0.0)) throw DomainError("a must be positive");
    if (!(z_i >= 0.0)) throw DomainError("z_i must be >= 0");
    if (delta < 1) throw DomainError("Delta must be at least 1");
    if (m && n > 0 && *m > pair_count(n)) throw DomainError("m exceeds C(n,2)");
}

Json config_to_json(const ExperimentConfig& c) {
    Json j;
    j["command"] = c.command;
    j["suite"] = c.suite;
    j["n"] = c.n;
    j["m"] = c.m ? Json(*c.m) : Json(nullptr);
    j["s_values"] = c.s_values;
    j["k"] = c.k ? Json(*c.k) : Json(nullptr);
    j["lambdas"] = c.lambdas;
    j["m_grid"] = c.m_grid;
    j["trials"] = c.trials;
    j["seed"] = c.seed;
    j["jobs"] = c.jobs;
    j["tol"] = c.tol;
    j["cap"] = c.cap;
    j["ell"] = c.ell;
    j["lower_max_ell"] = c.lower_max_ell;
    j["a"] = c.a ? Json(*c.a) : Json(nullptr);
    j["z_i"] = c.z_i;
    j["delta"] = c.delta;
    j["base"] = c.base;
    j["input"] = c.input;
    j["output"] = c.output;
    j["format"] = c.format;
    return j;
}

ExperimentConfig config_from_json(const Json& j) {
    if (!j.is_object()) throw DomainError("config must be a JSON object");
    ExperimentConfig c;
    for (const auto& [key, value] : j.items()) {
        try {
            if (key == "command") c.command = value.get<std::string>();
            else if (key == "suite") c.suite = value.get<std::string>();
            else if (key == "n") c.n = value.get<std::uint64_t>();
            else if (key == "m") c.m = value.is_null() ? std::nullopt : std::optional(value.get<std::uint64_t>());
            else if (key == "s_values") c.s_values = value.get<std::vector<std::uint64_t>>();
            else if (key == "k") c.k = value.is_null() ? std::nullopt : std::optional(value.get<std::uint64_t>());
            else if (key == "lambdas") c.lambdas = value.get<std::vector<double>>();
            else if (key == "m_grid") c.m_grid = value.get<std::vector<std::uint64_t>>();
            else if (key == "trials") c.trials = value.get<std::uint64_t>();
            else if (key == "seed") c.seed = value.get<std::uint64_t>();
            else if (key == "jobs") c.jobs = value.get<unsigned>();
            else if (key == "tol") c.tol = value.get<double>();
            else if (key == "cap") c.cap = value.get<std::uint64_t>();
            else if (key == "ell") c.ell = value.get<unsigned>();
            else if (key == "lower_max_ell") c.lower_max_ell = value.get<unsigned>();
            else if (key == "a") c.a = value.is_null() ? std::nullopt : std::optional(value.get<double>());
            else if (key == "z_i") c.z_i = value.get<double>();
            else if (key == "delta") c.delta = value.get<std::uint64_t>();
            else if (key == "base") c.base = value.get<std::string>();
            else if (key == "input") c.input = value.get<std::string>();
            else if (key == "output") c.output = value.get<std::string>();
            else if (key == "format") c.format = value.get<std::string>();
            else throw DomainError("unknown config key '" + key + "'");
        } catch (const nlohmann::json::exception& e) {
            throw DomainError("config key '" + key + "': " + e.what());
        }
    }
    c.validate();
    return c;
}

// ---------------------------------------------------------------- trials

Json row_to_json(const TrialRow& row) {
    Json j;
    j["trial_index"] = row.trial_index;
    j["seed"] = {{"master", row.master_seed}, {"trial_index", row.trial_index}};
    j["stats"] = row.stats;
    return j;
}

unsigned resolve_jobs(unsigned jobs) {
    if (jobs > 0) return jobs;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? hw : 1;
}

std::vector<TrialRow> run_trials(std::uint64_t count, unsigned jobs, std::uint64_t master_seed,
                                 const std::function<Json(std::uint64_t)>& trial) {
    std::vector<TrialRow> rows(count);
    std::vector<std::exception_ptr> errors(count);
    std::atomic<std::uint64_t> next{0};
    auto worker = [&] {
        for (std::uint64_t i = next++; i < count; i = next++) {
            const auto start = Clock::now();
            rows[i].trial_index = i;
            rows[i].master_seed = master_seed;
            try {
                rows[i].stats = trial(i);
            } catch (...) {
                errors[i] = std::current_exception();
            }
            rows[i].wall_seconds = seconds_since(start);
        }
    };
    const unsigned threads = static_cast<unsigned>(std::min<std::uint64_t>(resolve_jobs(jobs), count));
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);
    return rows;
}

Json Report::to_json() const {
    Json j;
    j["report"] = body;
    j["metadata"] = metadata;
    return j;
}

bool Report::passed() const {
    if (!body.contains("verdicts")) return true;
    for (const auto& v : body["verdicts"])
        if (!v["pass"].get<bool>()) return false;
    return true;
}

std::string rows_csv(const Report& report) {
    std::ostringstream out;
    const Json& rows = report.body.at("rows");
    out << "trial_index,master_seed";
    std::vector<std::string> keys;
    if (!rows.empty())
        for (const auto& [key, _] : rows.front()["stats"].items()) keys.push_back(key);
    for (const auto& k : keys) out << ',' << k;
    out << '\n';
    for (const auto& row : rows) {
        out << row["trial_index"].get<std::uint64_t>() << ',' << row["seed"]["master"].get<std::uint64_t>();
        for (const auto& k : keys) {
            const Json& v = row["stats"][k];
            out << ',';
            if (v.is_null()) continue;
            if (v.is_number_float()) out << fmt(v.get<double>());
            else if (v.is_string()) out << v.get<std::string>();
            else out << v.dump();
        }
        out << '\n';
    }
    return out.str();
}

// ---------------------------------------------------------------- experiments

Report run_mc_kappa(const ExperimentConfig& config) {
    config.validate();
    if (config.n < 1) throw DomainError("mc kappa needs n >= 1");
    if (config.lambdas.empty()) throw DomainError("mc kappa needs at least one lambda");
    const std::uint64_t n = config.n;
    const double max_lambda = *std::max_element(config.lambdas.begin(), config.lambdas.end());
    const std::uint64_t steps = static_cast<std::uint64_t>(std::floor(max_lambda * static_cast<double>(n)));
    std::vector<double> predicted;
    for (double l : config.lambdas) predicted.push_back(u(2.0 * l, config.tol).value);

    Report report = new_report(config);
    auto rows = run_trials(config.trials, config.jobs, config.seed, [&](std::uint64_t t) {
        const auto traj = kappa_trajectory(n, Seed{config.seed, t}, steps);
        Json per = Json::array();
        for (std::size_t i = 0; i < config.lambdas.size(); ++i) {
            const auto step = static_cast<std::uint64_t>(std::floor(config.lambdas[i] * static_cast<double>(n)));
            const std::size_t kappa = traj[std::min<std::uint64_t>(step, traj.size() - 1)];
            const double ratio = static_cast<double>(kappa) / static_cast<double>(n);
            per.push_back({{"lambda", config.lambdas[i]},
                           {"step", step},
                           {"kappa", kappa},
                           {"kappa_over_n", ratio},
                           {"predicted", predicted[i]},
                           {"deviation", ratio - predicted[i]}});
        }
        return Json{{"points", per}};
    });

    // One row per (lambda, trial).
    Json flat = Json::array();
    Json summary = Json::array();
    std::vector<std::vector<double>> ratios(config.lambdas.size());
    for (const auto& row : rows)
        for (std::size_t i = 0; i < config.lambdas.size(); ++i) {
            Json r;
            r["trial_index"] = row.trial_index;
            r["seed"] = {{"master", row.master_seed}, {"trial_index", row.trial_index}};
            r["stats"] = row.stats["points"][i];
            flat.push_back(r);
            ratios[i].push_back(row.stats["points"][i]["kappa_over_n"].get<double>());
        }
    for (std::size_t i = 0; i < config.lambdas.size(); ++i) {
        double max_dev = 0.0;
        for (double r : ratios[i]) max_dev = std::max(max_dev, std::fabs(r - predicted[i]));
        summary.push_back({{"lambda", config.lambdas[i]},
                           {"predicted", predicted[i]},
                           {"mean_kappa_over_n", mean_of(ratios[i])},
                           {"max_abs_deviation", max_dev}});
    }
    report.body["rows"] = flat;
    report.body["summary"] = summary;
    Json walls = Json::array();
    for (const auto& row : rows) walls.push_back(row.wall_seconds);
    report.metadata["wall_seconds"] = walls;
    return report;
}

std::string run_genus_curve(const ExperimentConfig& config) {
    config.validate();
    if (config.n < 2) throw DomainError("curve needs n >= 2");
    const std::uint64_t n = config.n;
    const double nd = static_cast<double>(n);
    std::vector<std::uint64_t> grid = config.m_grid;
    if (grid.empty()) {
        const double lo = std::max(1.0, nd / 4.0);
        const double hi = std::min(static_cast<double>(pair_count(n)), 20.0 * nd);
        const int points = 24;
        for (int i = 0; i < points; ++i) {
            const double m = lo * std::pow(hi / lo, static_cast<double>(i) / (points - 1));
            grid.push_back(static_cast<std::uint64_t>(std::llround(m)));
        }
        grid.push_back(3 * n <= pair_count(n) ? 3 * n : pair_count(n));
        std::sort(grid.begin(), grid.end());
        grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
    }
    for (auto m : grid)
        if (m > pair_count(n)) throw DomainError("m exceeds C(n,2)");

    std::ostringstream out;
    out << "m,lower_ratio,upper_ratio,predicted_ratio\n";
    for (std::size_t gi = 0; gi < grid.size(); ++gi) {
        const std::uint64_t m = grid[gi];
        auto rows = run_trials(config.trials, config.jobs, config.seed, [&](std::uint64_t t) {
            const Graph g = gnm(n, m, Seed{config.seed, gi * config.trials + t});
            std::int64_t lower;
            try {
                lower = best_genus_lower_bound(g, config.ell, config.cap).value;
            } catch (const CycleCapExceeded&) {
                lower = genus_lower_bound_density(g);
            }
            return Json{{"lower", lower}, {"upper", genus_upper_bound(g)}};
        });
        std::vector<double> lo, up;
        for (const auto& r : rows) {
            lo.push_back(r.stats["lower"].get<double>());
            up.push_back(r.stats["upper"].get<double>());
        }
        const double md = std::max<double>(1.0, static_cast<double>(m));
        const double predicted = predict_genus(n, m, {}, config.tol).midpoint();
        out << m << ',' << fmt(mean_of(lo) / md) << ',' << fmt(mean_of(up) / md) << ',' << fmt(predicted / md)
            << '\n';
    }
    return out.str();
}

std::string mu_curve_csv(double lambda_min, double lambda_max, double step, double tol) {
    if (!(step > 0.0) || !(lambda_max >= lambda_min) || !(lambda_min >= 0.0))
        throw DomainError("mu curve needs 0 <= min <= max and step > 0");
    std::ostringstream out;
    out << "lambda,mu\n";
    const auto count = static_cast<std::uint64_t>(std::floor((lambda_max - lambda_min) / step + 1e-9));
    for (std::uint64_t i = 0; i <= count; ++i) {
        const double l = lambda_min + static_cast<double>(i) * step;
        out << fmt(l) << ',' << fmt(mu(l, tol).value) << '\n';
    }
    return out.str();
}

Report run_census(const ExperimentConfig& config) {
    config.validate();
    if (config.n < 1 || config.s_values.empty()) throw DomainError("census needs n and at least one s");
    SupercriticalOptions opt;
    opt.ell = config.ell;
    opt.z_i = config.z_i;
    opt.a = config.a;
    opt.lower_max_ell = config.lower_max_ell;
    opt.cap = config.cap;
    Report report = new_report(config);
    std::vector<TrialRow> all;
    Json summary = Json::array();
    for (std::size_t si = 0; si < config.s_values.size(); ++si) {
        const std::uint64_t s = config.s_values[si];
        if (!supercritical_in_range(config.n, s))
            report.metadata["warnings"].push_back("s = " + std::to_string(s) + " is outside (n^{2/3}, n/2)");
        auto rows = run_trials(config.trials, config.jobs, config.seed, [&](std::uint64_t t) {
            return supercritical_json(
                supercritical_report(config.n, s, Seed{config.seed, si * config.trials + t}, opt));
        });
        std::vector<double> excess, lower, upper;
        for (auto& r : rows) {
            r.trial_index += si * config.trials;
            excess.push_back(r.stats["core_excess"].get<double>());
            lower.push_back(r.stats["genus_lower"].get<double>());
            upper.push_back(r.stats["genus_upper"].get<double>());
            all.push_back(r);
        }
        const double nd = static_cast<double>(config.n);
        const double sd = static_cast<double>(s);
        summary.push_back({{"s", s},
                           {"mean_excess", mean_of(excess)},
                           {"predicted_excess", 16.0 / 3.0 * sd * sd * sd / (nd * nd)},
                           {"mean_lower", mean_of(lower)},
                           {"mean_upper", mean_of(upper)},
                           {"predicted_genus", 8.0 * sd * sd * sd / (3.0 * nd * nd)}});
    }
    attach_rows(report, all);
    report.body["summary"] = summary;
    return report;
}

std::string census_curve_csv(const Report& census) {
    std::ostringstream out;
    out << "s,mean_excess,predicted_excess,mean_lower,mean_upper,predicted_genus\n";
    for (const auto& row : census.body.at("summary")) {
        out << row["s"].get<std::uint64_t>() << ',' << fmt(row["mean_excess"].get<double>()) << ','
            << fmt(row["predicted_excess"].get<double>()) << ',' << fmt(row["mean_lower"].get<double>()) << ','
            << fmt(row["mean_upper"].get<double>()) << ',' << fmt(row["predicted_genus"].get<double>()) << '\n';
    }
    return out.str();
}

Graph fragile_base(const ExperimentConfig& config) {
    if (!config.input.empty()) {
        std::ifstream in(config.input);
        if (!in) throw DomainError("cannot open " + config.input);
        return read_edge_list(in);
    }
    const std::size_t n = config.n;
    if (n < 1) throw DomainError("base graph needs n >= 1");
    if (config.base == "path") return path_graph(n);
    if (config.base == "cycle") return cycle_graph(n);
    if (config.base == "grid") {
        const auto rows = std::max<std::size_t>(1, static_cast<std::size_t>(std::sqrt(static_cast<double>(n))));
        return grid_graph(rows, n / rows);
    }
    if (config.base == "random-tree") return random_tree(n, config.delta, Seed{config.seed, 0});
    throw DomainError("unknown base graph '" + config.base + "'");
}

Report run_fragile(const ExperimentConfig& config) {
    config.validate();
    if (!config.k) throw DomainError("fragile needs k");
    const Graph h = fragile_base(config);
    const auto d = fragile_decomposition(h, config.delta, *config.k);
    Report report = new_report(config);
    auto rows = run_trials(config.trials, config.jobs, config.seed, [&](std::uint64_t t) {
        return fragile_json(
            fragile_experiment(h, config.delta, *config.k, Seed{config.seed, t}, config.ell, d ? &*d : nullptr));
    });
    std::vector<double> gamma, lower, upper;
    std::uint64_t reached_t = 0, positive = 0, in_range = 0;
    for (const auto& r : rows) {
        gamma.push_back(r.stats["gamma_edges"].get<double>());
        lower.push_back(r.stats["genus_lower_gamma"].get<double>());
        upper.push_back(r.stats["upper_bound"].get<double>());
        if (r.stats["gamma_edges"].get<std::uint64_t>() >= r.stats["t"].get<std::uint64_t>()) ++reached_t;
        if (r.stats["genus_lower_gamma"].get<std::int64_t>() > 0) ++positive;
        if (r.stats["t_in_range"].get<bool>()) ++in_range;
    }
    attach_rows(report, rows);
    report.body["summary"] = {{"base_vertices", h.order()},
                              {"base_edges", h.size()},
                              {"mean_gamma_edges", mean_of(gamma)},
                              {"trials_gamma_edges_at_least_t", reached_t},
                              {"trials_lower_positive", positive},
                              {"trials_t_in_range", in_range},
                              {"mean_genus_lower_gamma", mean_of(lower)},
                              {"max_upper_bound", upper.empty() ? 0.0 : *std::max_element(upper.begin(), upper.end())}};
    return report;
}

// ---------------------------------------------------------------- suites

namespace {

Graph complete_graph(std::size_t n) {
    std::vector<Edge> e;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) e.push_back({static_cast<Vertex>(i), static_cast<Vertex>(j)});
    return Graph(n, std::move(e));
}

Json suite_asymptotics(Report& report) {
    Json verdicts = Json::array();
    auto start = Clock::now();
    double max_err = 0.0;
    for (int i = 0; i <= 100; ++i) {
        const double c = i / 100.0;
        max_err = std::max(max_err, std::fabs(u(c, 1e-10).value - (1.0 - c / 2.0)));
    }
    double secs = seconds_since(start);
    report.metadata["seconds"]["1"] = secs;
    verdicts.push_back(verdict("1", "u(c) = 1 - c/2 on [0,1]", max_err < 1e-9 && secs < 1.0,
                               {{"max_abs_error", max_err}, {"runtime_limit_seconds", 1.0}}));

    start = Clock::now();
    const double mu_half = mu(0.5, 1e-12).value;
    double min_step = 1e300;
    double prev = mu_half;
    for (int i = 6; i <= 200; ++i) {
        const double cur = mu(i / 10.0, 1e-12).value;
        min_step = std::min(min_step, cur - prev);
        prev = cur;
    }
    const double mu20 = prev;
    double max_fd = 0.0;
    for (double c : {0.8, 1.5, 3.0}) {
        const double h = 1e-5;
        const double fd = (u(c + h, 1e-14).value - u(c - h, 1e-14).value) / (2 * h);
        max_fd = std::max(max_fd, std::fabs(u_prime(c, 1e-12).value - fd));
    }
    secs = seconds_since(start);
    report.metadata["seconds"]["2"] = secs;
    const bool ok2 = std::fabs(mu_half) < 1e-9 && min_step > -1e-12 && mu20 > 0.45 && mu20 < 0.5 && max_fd < 1e-6 &&
                     secs < 5.0;
    verdicts.push_back(verdict("2", "mu and u' properties", ok2,
                               {{"mu_half", mu_half},
                                {"min_successive_difference", min_step},
                                {"mu_20", mu20},
                                {"max_finite_difference_gap", max_fd},
                                {"runtime_limit_seconds", 5.0}}));

    const double l0 = lambda_i(0.0, 1e-8), l1 = lambda_i(1.0, 1e-8), l2 = lambda_i(2.0, 1e-8);
    verdicts.push_back(verdict("lambda_i", "lambda_i(0) = 0 < lambda_i(1) < lambda_i(2)",
                               l0 == 0.0 && l1 > 0.0 && l2 > l1,
                               {{"lambda_1", l1}, {"lambda_2", l2}}));
    return verdicts;
}

Json suite_mc_kappa(Report& report, const ExperimentConfig& base) {
    ExperimentConfig c = base;
    c.command = "mc-kappa";
    c.n = 100000;
    c.lambdas = {0.25, 0.5, 1.0, 2.0};
    c.trials = 10;
    const auto start = Clock::now();
    const Report mc = run_mc_kappa(c);
    const double secs = seconds_since(start);
    report.metadata["seconds"]["3"] = secs;
    double worst = 0.0;
    for (const auto& s : mc.body["summary"]) worst = std::max(worst, s["max_abs_deviation"].get<double>());
    report.body["mc_kappa_summary"] = mc.body["summary"];
    return Json::array({verdict("3", "kappa concentration at n = 10^5", worst < 0.01 && secs < 30.0,
                                {{"max_abs_deviation", worst}, {"runtime_limit_seconds", 30.0}})});
}

Json suite_supercritical(Report& report, const ExperimentConfig& base) {
    ExperimentConfig c = base;
    c.command = "census";
    c.n = 1000000;
    c.s_values = {31623};
    c.trials = 10;
    c.ell = 4;
    c.lower_max_ell = 120;
    const auto start = Clock::now();
    const Report census = run_census(c);
    const double secs = seconds_since(start);
    report.metadata["seconds"]["5"] = secs;
    const Json& s = census.body["summary"][0];
    const double excess = s["mean_excess"].get<double>();
    const double pred_excess = s["predicted_excess"].get<double>();
    const double pred = s["predicted_genus"].get<double>();
    const double upper = s["mean_upper"].get<double>();
    const double lower = s["mean_lower"].get<double>();
    report.body["census_summary"] = census.body["summary"];
    Json v = Json::array();
    v.push_back(verdict("5a", "mean giant-2-core excess within 25% of (16/3)s^3/n^2",
                        std::fabs(excess - pred_excess) <= 0.25 * pred_excess && secs < 300.0,
                        {{"mean_excess", excess}, {"predicted", pred_excess}}));
    v.push_back(verdict("5b", "mean genus upper bound within 25% of 8s^3/(3n^2) plus excess/6",
                        std::fabs(upper - pred) <= 0.25 * pred + excess / 6.0,
                        {{"mean_upper", upper}, {"predicted", pred}}));
    v.push_back(verdict("5c", "mean genus lower bound >= 0.3 * 8s^3/(3n^2)", lower >= 0.3 * pred,
                        {{"mean_lower", lower}, {"required", 0.3 * pred}, {"max_ell", c.lower_max_ell}}));
    return v;
}

Json suite_linear(Report& report, const ExperimentConfig& base) {
    const std::uint64_t n = 2000, m = 6000, trials = 20;
    const double mu3 = mu(3.0, 1e-12).value;
    const auto start = Clock::now();
    auto rows = run_trials(trials, base.jobs, base.seed, [&](std::uint64_t t) {
        const Graph g = gnm(n, m, Seed{base.seed, t});
        return Json{{"upper", genus_upper_bound(g)}, {"lower", genus_lower_bound_short_cycles(g, 4)}};
    });
    const double secs = seconds_since(start);
    report.metadata["seconds"]["6"] = secs;
    double worst_upper = 0.0, min_lower = 1e300;
    for (const auto& r : rows) {
        worst_upper = std::max(worst_upper, std::fabs(r.stats["upper"].get<double>() / m - mu3));
        min_lower = std::min(min_lower, r.stats["lower"].get<double>() / m);
    }
    return Json::array({verdict("6", "linear regime sandwich at n = 2000, m = 6000",
                                worst_upper <= 0.02 && min_lower >= 0.3 * mu3 && secs < 60.0,
                                {{"mu_3", mu3}, {"max_upper_gap", worst_upper}, {"min_lower_ratio", min_lower}})});
}

Json suite_fragile(Report& report, const ExperimentConfig& base) {
    ExperimentConfig c = base;
    c.command = "fragile";
    c.n = 100000;
    c.base = "path";
    c.input.clear();
    c.delta = 2;
    c.k = 5000;
    c.trials = 10;
    c.ell = 4;
    const auto start = Clock::now();
    const Report fr = run_fragile(c);
    const double secs = seconds_since(start);
    report.metadata["seconds"]["7"] = secs;
    bool l_ok = true, t_ok = true, upper_ok = true;
    double t_sum = 0.0;
    for (const auto& r : fr.body["rows"]) {
        const Json& st = r["stats"];
        l_ok = l_ok && st["l"].get<std::uint64_t>() == 120;
        const auto t = st["t"].get<std::uint64_t>();
        t_ok = t_ok && t >= 208 && t <= 416;
        upper_ok = upper_ok && st["upper_bound"].get<std::int64_t>() <= 5000;
        t_sum += static_cast<double>(t);
    }
    const Json& s = fr.body["summary"];
    const double mean_t = t_sum / 10.0;
    const bool ok = l_ok && t_ok && upper_ok && s["trials_gamma_edges_at_least_t"].get<std::uint64_t>() >= 9 &&
                    s["trials_lower_positive"].get<std::uint64_t>() >= 9 &&
                    s["mean_genus_lower_gamma"].get<double>() >= 0.02 * mean_t && secs < 120.0;
    report.body["fragile_summary"] = s;
    return Json::array({verdict("7", "fragile genus on the path P_{10^5}", ok,
                                {{"l_is_120", l_ok}, {"t_in_range", t_ok}, {"upper_at_most_k", upper_ok},
                                 {"summary", s}})});
}

Json suite_oracle(Report& report) {
    Json v = Json::array();
    struct Fixture {
        std::string name;
        Graph g;
        std::int64_t genus;
        std::optional<std::int64_t> faces;
    };
    std::vector<Edge> c5{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}};
    std::vector<Edge> c5plus = c5;
    c5plus.push_back({0, 2});
    std::vector<Edge> k5minus;
    const Graph k5 = complete_graph(5);
    for (const auto& e : k5.edges())
        if (!(e.u == 0 && e.v == 1)) k5minus.push_back(e);
    std::vector<Edge> k33;
    for (Vertex a = 0; a < 3; ++a)
        for (Vertex b = 3; b < 6; ++b) k33.push_back({a, b});
    std::vector<Edge> q3;
    for (Vertex a = 0; a < 8; ++a)
        for (int bit = 0; bit < 3; ++bit) {
            const Vertex b = a ^ (1u << bit);
            if (a < b) q3.push_back({a, b});
        }
    std::vector<Fixture> fixtures{{"K5", complete_graph(5), 1, 5},      {"C5", Graph(5, c5), 0, 2},
                                  {"C5+e", Graph(5, c5plus), 0, 3},     {"K5-e", Graph(5, k5minus), 0, 6},
                                  {"K3,3", Graph(6, k33), 1, std::nullopt}, {"K6", complete_graph(6), 1, std::nullopt},
                                  {"Q3", Graph(8, q3), 0, std::nullopt}};
    bool all = true;
    Json measured = Json::object();
    const auto start = Clock::now();
    double k6_secs = 0.0;
    for (const auto& f : fixtures) {
        const auto t0 = Clock::now();
        const ExactGenus eg = exact_genus(f.g);
        if (f.name == "K6") k6_secs = seconds_since(t0);
        const bool ok = eg.genus == f.genus && (!f.faces || eg.f_min == *f.faces) &&
                        genus_lower_bound_density(f.g) <= eg.genus;
        all = all && ok;
        measured[f.name] = {{"genus", eg.genus}, {"f", eg.f_min}, {"ok", ok}};
    }
    report.metadata["seconds"]["4"] = seconds_since(start);
    v.push_back(verdict("4", "exact genus fixtures", all && k6_secs < 60.0, measured));

    const auto corpus = load_default_corpus();
    std::uint64_t mismatches = 0;
    for (const auto& entry : corpus)
        if (exact_genus(entry.graph).genus != entry.genus) ++mismatches;
    v.push_back(verdict("corpus", "bundled corpus genera reproduced", mismatches == 0 && !corpus.empty(),
                        {{"graphs", corpus.size()}, {"mismatches", mismatches}}));
    return v;
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"asymptotics", "mc-kappa", "supercritical", "linear", "fragile",
                                                "oracle"};
    return names;
}

Report run_suite(const ExperimentConfig& config) {
    const auto& names = suite_names();
    if (std::find(names.begin(), names.end(), config.suite) == names.end())
        throw DomainError("unknown suite '" + config.suite + "'");
    Report report = new_report(config);
    report.body["suite"] = config.suite;
    Json verdicts;
    if (config.suite == "asymptotics") verdicts = suite_asymptotics(report);
    else if (config.suite == "mc-kappa") verdicts = suite_mc_kappa(report, config);
    else if (config.suite == "supercritical") verdicts = suite_supercritical(report, config);
    else if (config.suite == "linear") verdicts = suite_linear(report, config);
    else if (config.suite == "fragile") verdicts = suite_fragile(report, config);
    else verdicts = suite_oracle(report);
    report.body["verdicts"] = verdicts;
    report.body["pass"] = report.passed();
    return report;
}

// ---------------------------------------------------------------- corpus

std::vector<CorpusEntry> read_corpus(std::istream& in) {
    std::vector<CorpusEntry> out;
    std::string line;
    std::optional<CorpusEntry> current;
    std::ostringstream block;
    auto flush = [&] {
        if (!current) return;
        std::istringstream text(block.str());
        current->graph = read_edge_list(text);
        out.push_back(std::move(*current));
        current.reset();
        block.str("");
        block.clear();
    };
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        if (line.rfind("graph ", 0) == 0) {
            flush();
            std::istringstream head(line);
            std::string word, name, genus_word;
            std::int64_t genus = -1;
            if (!(head >> word >> name >> genus_word >> genus) || genus_word != "genus" || genus < 0)
                throw GraphError("corpus: malformed header '" + line + "'");
            current = CorpusEntry{name, genus, Graph()};
            continue;
        }
        if (!current) throw GraphError("corpus: edge data before the first header");
        block << line << '\n';
    }
    flush();
    return out;
}

std::vector<CorpusEntry> load_default_corpus() {
    std::istringstream in(kBundledCorpus);
    return read_corpus(in);
}

std::string default_output_dir() {
    const char* dir = std::getenv("RGENUS_OUT_DIR");
    return dir && *dir ? dir : ".";
}

}  // namespace rgenus
