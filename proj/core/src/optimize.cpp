#include "randic/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "randic/graphic.hpp"

namespace randic {

namespace {

SimpleGraph complete_graph(int n) {
    std::vector<Edge> edges;
    edges.reserve(static_cast<size_t>(n) * (static_cast<size_t>(n) - 1) / 2);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    return SimpleGraph(n, std::move(edges));
}

struct Stripped {
    DegreeSequence degrees;       // positive entries only
    std::vector<int> node_of;     // stripped index -> original node
};

Stripped strip_zero_degrees(const DegreeSequence& d) {
    Stripped out;
    for (size_t i = 0; i < d.size(); ++i) {
        if (d[i] > 0) {
            out.degrees.push_back(d[i]);
            out.node_of.push_back(static_cast<int>(i));
        }
    }
    return out;
}

OptimizationResult optimize(const DegreeSequence& d, Objective objective) {
    if (!is_graphic(d)) throw std::invalid_argument("degree sequence is not graphic");
    const int n = static_cast<int>(d.size());
    Stripped core = strip_zero_degrees(d);

    std::vector<Edge> realization_edges;
    double matched_weight = 0.0;
    if (!core.degrees.empty()) {
        MatchingInstance inst = build_instance(core.degrees, Objective::minimize);
        auto matching = objective == Objective::minimize ? solve_min_bmatching(inst)
                                                         : solve_max_bmatching(inst);
        if (!matching)
            throw std::logic_error("b-matching infeasible for a graphic degree sequence");
        matched_weight = matching->weight;
        for (auto [u, v] : matching->edges)
            realization_edges.emplace_back(core.node_of[static_cast<size_t>(u)],
                                           core.node_of[static_cast<size_t>(v)]);
    }

    OptimizationResult result;
    result.realization = SimpleGraph(n, std::move(realization_edges));
    result.objective = objective;
    result.index_value = randic_index_exact(result.realization);
    result.connected = is_connected(result.realization);
    if (degree_sequence(result.realization) != d)
        throw std::logic_error("realization degree sequence mismatch");
    if (static_cast<double>(result.index_value) != matched_weight)
        throw std::logic_error("realization index differs from matching weight");
    return result;
}

}  // namespace

MatchingInstance build_instance(const DegreeSequence& d, Objective objective) {
    const int n = static_cast<int>(d.size());
    for (int v : d)
        if (v < 1)
            throw std::invalid_argument("build_instance requires every degree >= 1");
    if (!is_graphic(d)) throw std::invalid_argument("degree sequence is not graphic");

    MatchingInstance inst;
    inst.host = complete_graph(n);
    inst.b = d;
    inst.weights.reserve(inst.host.edges().size());
    if (objective == Objective::minimize) {
        for (auto [i, j] : inst.host.edges())
            inst.weights.push_back(static_cast<double>(d[static_cast<size_t>(i)]) *
                                   static_cast<double>(d[static_cast<size_t>(j)]));
    } else {
        std::vector<std::vector<double>> h(static_cast<size_t>(n),
                                           std::vector<double>(static_cast<size_t>(n), 0.0));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (i != j)
                    h[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                        static_cast<double>(d[static_cast<size_t>(i)]) *
                        static_cast<double>(d[static_cast<size_t>(j)]);
        auto h2 = max_transform(h);
        for (auto [i, j] : inst.host.edges())
            inst.weights.push_back(h2[static_cast<size_t>(i)][static_cast<size_t>(j)]);
    }
    return inst;
}

OptimizationResult minimize_randic(const DegreeSequence& d) {
    return optimize(d, Objective::minimize);
}

OptimizationResult maximize_randic(const DegreeSequence& d) {
    return optimize(d, Objective::maximize);
}

AlphaOptimizationResult optimize_randic_alpha(const DegreeSequence& d, double alpha,
                                              Objective objective) {
    if (alpha == 0.0) throw std::invalid_argument("alpha must be nonzero");
    if (!is_graphic(d)) throw std::invalid_argument("degree sequence is not graphic");
    const int n = static_cast<int>(d.size());
    Stripped core = strip_zero_degrees(d);

    std::vector<Edge> realization_edges;
    if (!core.degrees.empty()) {
        MatchingInstance inst;
        inst.host = complete_graph(static_cast<int>(core.degrees.size()));
        inst.b = core.degrees;
        for (auto [i, j] : inst.host.edges())
            inst.weights.push_back(
                std::pow(static_cast<double>(core.degrees[static_cast<size_t>(i)]) *
                             static_cast<double>(core.degrees[static_cast<size_t>(j)]),
                         alpha));
        auto matching = objective == Objective::minimize ? solve_min_bmatching(inst)
                                                         : solve_max_bmatching(inst);
        if (!matching)
            throw std::logic_error("b-matching infeasible for a graphic degree sequence");
        for (auto [u, v] : matching->edges)
            realization_edges.emplace_back(core.node_of[static_cast<size_t>(u)],
                                           core.node_of[static_cast<size_t>(v)]);
    }

    AlphaOptimizationResult result;
    result.realization = SimpleGraph(n, std::move(realization_edges));
    result.objective = objective;
    result.index_value = randic_index(result.realization, alpha);
    result.connected = is_connected(result.realization);
    if (degree_sequence(result.realization) != d)
        throw std::logic_error("realization degree sequence mismatch");
    return result;
}

std::optional<DirectedOptimizationResult> optimize_directed_randic(
    const DirectedDegreeSequence& d, Sign p, Sign q, Objective objective) {
    const int n = static_cast<int>(d.size());
    for (const auto& pair : d)
        if (pair.out < 0 || pair.in < 0)
            throw std::invalid_argument("negative degree entry");

    auto value = [&](int i, Sign s) {
        return s == Sign::plus ? d[static_cast<size_t>(i)].out : d[static_cast<size_t>(i)].in;
    };

    BipartiteInstance inst;
    inst.n_left = n;
    inst.n_right = n;
    for (int i = 0; i < n; ++i) {
        inst.b_left.push_back(d[static_cast<size_t>(i)].out);
        inst.b_right.push_back(d[static_cast<size_t>(i)].in);
        for (int j = 0; j < n; ++j)
            if (i != j)
                inst.edges.push_back(
                    {i, j, static_cast<double>(value(i, p)) * static_cast<double>(value(j, q))});
    }
    auto matching = objective == Objective::minimize ? solve_min_bipartite_bmatching(inst)
                                                     : solve_max_bipartite_bmatching(inst);
    if (!matching) return std::nullopt;

    std::vector<Arc> arcs(matching->edges.begin(), matching->edges.end());
    DirectedOptimizationResult result;
    result.realization = DiGraph(n, std::move(arcs));
    result.objective = objective;
    result.p = p;
    result.q = q;
    result.index_value = directed_randic(result.realization, p, q);
    if (directed_degree_sequence(result.realization) != d)
        throw std::logic_error("directed realization degree sequence mismatch");
    if (static_cast<double>(result.index_value) != matching->weight)
        throw std::logic_error("directed index differs from matching weight");
    return result;
}

double normalized_randic(const SimpleGraph& g) {
    if (g.node_count() == 0) throw std::invalid_argument("empty graph");
    DegreeSequence d = degree_sequence(g);
    if (std::all_of(d.begin(), d.end(), [](int x) { return x == 0; }))
        throw std::invalid_argument("all-zero degree sequence cannot be normalized");
    OptimizationResult best = maximize_randic(d);
    return static_cast<double>(randic_index_exact(g)) / static_cast<double>(best.index_value);
}

}  // namespace randic
