#include "randic/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <numbers>
#include <stdexcept>
#include <thread>

#include "randic/connect.hpp"
#include "randic/generators.hpp"
#include "randic/graphic.hpp"
#include "randic/optimize.hpp"
#include "randic/randic_index.hpp"

namespace randic {

double default_edge_probability(int n) { return 4.25 / n; }

double default_radius(int n) { return std::sqrt(6.0 / (std::numbers::pi * n)); }

ExperimentRecord run_trial(GraphType type, int n, std::uint64_t trial_seed, double p, double r,
                           int min_degree) {
    Rng rng(trial_seed);
    SimpleGraph g;
    switch (type) {
        case GraphType::erdos_renyi:
            g = erdos_renyi(n, p, rng);
            break;
        case GraphType::geometric:
            g = geometric(n, r, rng);
            break;
        case GraphType::scale_free:
            g = scale_free(n, min_degree, rng);
            break;
    }

    ExperimentRecord rec;
    rec.graph_type = type;
    rec.n = n;
    rec.seed = trial_seed;
    rec.r_original = randic_index_exact(g);

    DegreeSequence d = degree_sequence(g);
    if (!has_connected_realization(d)) {
        rec.outcome = Outcome::no_connected_realization;
        return rec;
    }

    OptimizationResult opt = minimize_randic(d);
    rec.r_min = opt.index_value;
    rec.pct_orig_vs_min =
        percent_difference(static_cast<double>(rec.r_original), static_cast<double>(opt.index_value));
    if (opt.connected) {
        rec.outcome = Outcome::connected;
        return rec;
    }

    rec.outcome = Outcome::disconnected;
    ConnectResult repaired = connect_by_two_switches(opt.realization, rng);
    rec.r_after_heuristic = randic_index_exact(repaired.graph);
    rec.pct_heur_vs_min = percent_difference(static_cast<double>(*rec.r_after_heuristic),
                                             static_cast<double>(opt.index_value));
    return rec;
}

namespace {

int worker_count(int trials) {
    unsigned hw = std::thread::hardware_concurrency();
    int workers = hw == 0 ? 1 : static_cast<int>(hw);
    if (const char* env = std::getenv("RANDIC_THREADS")) {
        int cap = std::atoi(env);
        if (cap >= 1) workers = std::min(workers, cap);
    }
    return std::max(1, std::min(workers, trials));
}

}  // namespace

std::vector<ExperimentRecord> run_ensemble(const ExperimentParams& params) {
    if (params.trials < 1) throw std::invalid_argument("trials must be at least 1");
    const double p = params.p.value_or(default_edge_probability(params.n));
    const double r = params.r.value_or(default_radius(params.n));
    const int min_degree = params.min_degree.value_or(kDefaultMinDegree);

    std::vector<ExperimentRecord> records(static_cast<size_t>(params.trials));
    std::atomic<int> next{0};
    auto work = [&] {
        for (;;) {
            int t = next.fetch_add(1);
            if (t >= params.trials) return;
            records[static_cast<size_t>(t)] =
                run_trial(params.type, params.n, params.seed + static_cast<std::uint64_t>(t), p,
                          r, min_degree);
        }
    };
    const int workers = worker_count(params.trials);
    if (workers == 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (int i = 0; i < workers; ++i) pool.emplace_back(work);
        for (auto& th : pool) th.join();
    }
    return records;
}

BoxStats box_stats(std::vector<double> values) {
    if (values.empty()) throw std::invalid_argument("no values");
    std::sort(values.begin(), values.end());
    auto quantile = [&](double q) {
        double pos = q * static_cast<double>(values.size() - 1);
        size_t lo = static_cast<size_t>(pos);
        size_t hi = std::min(lo + 1, values.size() - 1);
        double frac = pos - static_cast<double>(lo);
        return values[lo] * (1.0 - frac) + values[hi] * frac;
    };
    BoxStats s;
    s.count = values.size();
    s.min = values.front();
    s.max = values.back();
    s.q1 = quantile(0.25);
    s.median = quantile(0.5);
    s.q3 = quantile(0.75);
    double sum = 0.0;
    for (double v : values) sum += v;
    s.mean = sum / static_cast<double>(values.size());
    return s;
}

Summary summarize(const std::vector<ExperimentRecord>& records) {
    if (records.empty()) throw std::invalid_argument("no records");
    Summary s;
    std::vector<double> orig, heur;
    for (const auto& rec : records) {
        switch (rec.outcome) {
            case Outcome::connected:
                ++s.connected;
                break;
            case Outcome::disconnected:
                ++s.disconnected;
                break;
            case Outcome::no_connected_realization:
                ++s.no_connected_realization;
                break;
        }
        if (rec.pct_orig_vs_min) orig.push_back(*rec.pct_orig_vs_min);
        if (rec.pct_heur_vs_min) heur.push_back(*rec.pct_heur_vs_min);
    }
    if (!orig.empty()) s.orig_vs_min = box_stats(std::move(orig));
    if (!heur.empty()) s.heur_vs_min = box_stats(std::move(heur));
    return s;
}

std::string to_string(GraphType type) {
    switch (type) {
        case GraphType::erdos_renyi:
            return "er";
        case GraphType::geometric:
            return "geo";
        case GraphType::scale_free:
            return "sf";
    }
    return "?";
}

std::string to_string(Outcome outcome) {
    switch (outcome) {
        case Outcome::connected:
            return "connected";
        case Outcome::disconnected:
            return "disconnected";
        case Outcome::no_connected_realization:
            return "no_connected_realization";
    }
    return "?";
}

namespace {

std::string fmt_double(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.10g", x);
    return buf;
}

}  // namespace

std::string records_to_csv(const std::vector<ExperimentRecord>& records) {
    std::string out =
        "graph_type,n,seed,R_original,R_min,R_after_heuristic,outcome,pct_orig_vs_min,"
        "pct_heur_vs_min\n";
    for (const auto& r : records) {
        out += to_string(r.graph_type);
        out += ',' + std::to_string(r.n);
        out += ',' + std::to_string(r.seed);
        out += ',' + std::to_string(r.r_original);
        out += ',';
        if (r.r_min) out += std::to_string(*r.r_min);
        out += ',';
        if (r.r_after_heuristic) out += std::to_string(*r.r_after_heuristic);
        out += ',' + to_string(r.outcome);
        out += ',';
        if (r.pct_orig_vs_min) out += fmt_double(*r.pct_orig_vs_min);
        out += ',';
        if (r.pct_heur_vs_min) out += fmt_double(*r.pct_heur_vs_min);
        out += '\n';
    }
    return out;
}

std::string summary_to_csv(const Summary& s) {
    std::string out = "connected,disconnected,no_connected_realization,mean_pct_orig_vs_min,"
                      "mean_pct_heur_vs_min\n";
    out += std::to_string(s.connected);
    out += ',' + std::to_string(s.disconnected);
    out += ',' + std::to_string(s.no_connected_realization);
    out += ',';
    if (s.orig_vs_min) out += fmt_double(s.orig_vs_min->mean);
    out += ',';
    if (s.heur_vs_min) out += fmt_double(s.heur_vs_min->mean);
    out += '\n';
    return out;
}

std::string boxplot_to_csv(const Summary& s) {
    std::string out = "population,count,min,q1,median,q3,max,mean\n";
    auto row = [&](const char* name, const std::optional<BoxStats>& b) {
        out += name;
        if (b) {
            out += ',' + std::to_string(b->count);
            for (double v : {b->min, b->q1, b->median, b->q3, b->max, b->mean})
                out += ',' + fmt_double(v);
        } else {
            out += ",0,,,,,,";  // empty population, noted explicitly
        }
        out += '\n';
    };
    row("orig_vs_min", s.orig_vs_min);
    row("heur_vs_min", s.heur_vs_min);
    return out;
}

}  // namespace randic
