#ifndef RANDIC_EXPERIMENTS_HPP
#define RANDIC_EXPERIMENTS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "randic/graph.hpp"

namespace randic {

enum class GraphType { erdos_renyi, geometric, scale_free };

enum class Outcome { connected, disconnected, no_connected_realization };

/// One trial: generate, test connected-realizability, minimize, classify the
/// optimum's connectivity, repair with the two-switch heuristic when
/// disconnected. Absent fields mean the corresponding stage did not run
/// (no optimization for no_connected_realization, no heuristic for connected
/// optima).
struct ExperimentRecord {
    GraphType graph_type = GraphType::erdos_renyi;
    int n = 0;
    std::uint64_t seed = 0;  // per-trial seed; replaying it reproduces everything
    std::int64_t r_original = 0;
    std::optional<std::int64_t> r_min;
    std::optional<std::int64_t> r_after_heuristic;
    Outcome outcome = Outcome::connected;
    std::optional<double> pct_orig_vs_min;
    std::optional<double> pct_heur_vs_min;
};

/// Ensemble parameters. Generator knobs default to p = 4.25/n,
/// r = sqrt(6/(pi*n)) and min_degree = 2 when unset.
struct ExperimentParams {
    GraphType type = GraphType::erdos_renyi;
    int n = 0;
    int trials = 0;
    std::uint64_t seed = 0;
    std::optional<double> p;
    std::optional<double> r;
    std::optional<int> min_degree;
};

double default_edge_probability(int n);
double default_radius(int n);
constexpr int kDefaultMinDegree = 2;

/// Runs one trial with its own random stream seeded by trial_seed; the
/// heuristic, when needed, continues the same stream.
ExperimentRecord run_trial(GraphType type, int n, std::uint64_t trial_seed, double p, double r,
                           int min_degree);

/// Runs `trials` independent trials, trial t seeded with seed + t. Trials run
/// on a worker pool (capped by the RANDIC_THREADS environment variable) and
/// are merged by trial index, so parallelism never changes the output.
std::vector<ExperimentRecord> run_ensemble(const ExperimentParams& params);

/// Box-plot statistics: quartiles use linear interpolation between order
/// statistics (the common "type 7" rule).
struct BoxStats {
    std::size_t count = 0;
    double min = 0, q1 = 0, median = 0, q3 = 0, max = 0, mean = 0;
};

struct Summary {
    int connected = 0;
    int disconnected = 0;
    int no_connected_realization = 0;
    std::optional<BoxStats> orig_vs_min;   // over every optimized trial
    std::optional<BoxStats> heur_vs_min;   // over trials that ran the heuristic
};

Summary summarize(const std::vector<ExperimentRecord>& records);

BoxStats box_stats(std::vector<double> values);

// CSV emission; header rows always included, absent fields are empty cells.
std::string records_to_csv(const std::vector<ExperimentRecord>& records);
std::string summary_to_csv(const Summary& summary);
std::string boxplot_to_csv(const Summary& summary);

std::string to_string(GraphType type);
std::string to_string(Outcome outcome);

}  // namespace randic

#endif
