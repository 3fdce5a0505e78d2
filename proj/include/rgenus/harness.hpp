#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "rgenus/graph.hpp"

namespace rgenus {

using Json = nlohmann::ordered_json;

/// Everything needed to rerun an experiment. Round-trips through JSON.
struct ExperimentConfig {
    std::string command;  // mc-kappa | curve | census | fragile | suite
    std::string suite;    // for command == "suite"
    std::uint64_t n = 0;
    std::optional<std::uint64_t> m;
    std::vector<std::uint64_t> s_values;
    std::optional<std::uint64_t> k;
    std::vector<double> lambdas;
    std::vector<std::uint64_t> m_grid;
    std::uint64_t trials = 1;
    std::uint64_t seed = 0;
    unsigned jobs = 0;  // 0: hardware concurrency
    double tol = 1e-10;
    std::uint64_t cap = kDefaultCycleCap;
    unsigned ell = 4;
    unsigned lower_max_ell = 0;  // census: best lower bound over 3..lower_max_ell when > 0
    std::optional<double> a;
    double z_i = 1.0;
    std::uint64_t delta = 2;
    std::string base = "path";
    std::string input;
    std::string output;
    std::string format = "json";  // json | csv

    /// Throws DomainError on out-of-range parameters.
    void validate() const;
};

Json config_to_json(const ExperimentConfig& c);
/// Missing keys keep their defaults; unknown keys are rejected.
ExperimentConfig config_from_json(const Json& j);

/// Per-trial output. `stats` holds the measured quantities; wall time is kept
/// apart so that the deterministic part of a report is reproducible.
struct TrialRow {
    std::uint64_t trial_index = 0;
    std::uint64_t master_seed = 0;
    Json stats = Json::object();
    double wall_seconds = 0.0;
};

Json row_to_json(const TrialRow& row);

unsigned resolve_jobs(unsigned jobs);

/// Runs trial(i) for i in [0, count) on up to `jobs` threads and returns the
/// rows in index order. The first exception (by index) is rethrown.
std::vector<TrialRow> run_trials(std::uint64_t count, unsigned jobs, std::uint64_t master_seed,
                                 const std::function<Json(std::uint64_t)>& trial);

struct Report {
    Json body = Json::object();      // deterministic given config and seed
    Json metadata = Json::object();  // timestamps, wall times, thread count

    Json to_json() const;
    /// True when every verdict in body["verdicts"] passed (or there are none).
    bool passed() const;
};

/// kappa after floor(lambda n) steps of the edge process, one process per
/// trial shared by all lambdas, against the prediction u(2 lambda) n.
Report run_mc_kappa(const ExperimentConfig& config);

/// CSV with header m,lower_ratio,upper_ratio,predicted_ratio; bounds are
/// trial means over gnm(n, m).
std::string run_genus_curve(const ExperimentConfig& config);

/// CSV of the mu curve: lambda,mu.
std::string mu_curve_csv(double lambda_min, double lambda_max, double step, double tol);

/// Giant-2-core census over trials, for each s in config.s_values.
Report run_census(const ExperimentConfig& config);

/// CSV of census summaries: s,mean_excess,predicted_excess,mean_lower,mean_upper,predicted_genus.
std::string census_curve_csv(const Report& census);

/// Trial rows as CSV: trial_index,master_seed and then the stats keys of the
/// first row.
std::string rows_csv(const Report& report);

/// Perturbation experiment over trials on the base graph named by
/// config.base (or read from config.input).
Report run_fragile(const ExperimentConfig& config);

/// The base graph of a fragile run.
Graph fragile_base(const ExperimentConfig& config);

/// Names accepted by run_suite.
const std::vector<std::string>& suite_names();

/// Runs a named acceptance suite. Throws DomainError for unknown names.
Report run_suite(const ExperimentConfig& config);

/// Connected graphs with known genus, as stored in the bundled corpus file:
/// blocks "graph <name> genus <g>" followed by an edge list.
struct CorpusEntry {
    std::string name;
    std::int64_t genus = 0;
    Graph graph;
};
std::vector<CorpusEntry> read_corpus(std::istream& in);
std::vector<CorpusEntry> load_default_corpus();

/// Directory for reports when --out is not given: $RGENUS_OUT_DIR, else ".".
std::string default_output_dir();

}  // namespace rgenus
