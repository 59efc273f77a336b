#include "randic/connect.hpp"

#include <algorithm>
#include <stdexcept>

#include "randic/graphic.hpp"

namespace randic {

namespace {

// edges of one component, in the graph's canonical edge order
std::vector<Edge> component_edges(const SimpleGraph& g, const std::vector<int>& comp_of,
                                  int comp_id) {
    std::vector<Edge> out;
    for (const auto& e : g.edges())
        if (comp_of[static_cast<size_t>(e.first)] == comp_id) out.push_back(e);
    return out;
}

}  // namespace

ConnectResult connect_by_two_switches(const SimpleGraph& g, Rng& rng) {
    for (int v = 0; v < g.node_count(); ++v)
        if (g.degree(v) == 0)
            throw std::invalid_argument("component without edges (isolated node " +
                                        std::to_string(v) + ")");
    if (!has_connected_realization(degree_sequence(g)))
        throw std::invalid_argument("degree sequence has no connected realization");

    // degrees never change below
    DegreeSequence deg = degree_sequence(g);
    ConnectResult result{g, 0};
    for (;;) {
        auto comps = connected_components(result.graph);
        if (comps.size() <= 1) break;

        // merge the two smallest components (ties by smallest node)
        std::vector<int> order(comps.size());
        for (size_t i = 0; i < comps.size(); ++i) order[i] = static_cast<int>(i);
        std::sort(order.begin(), order.end(), [&](int a, int b) {
            if (comps[static_cast<size_t>(a)].size() != comps[static_cast<size_t>(b)].size())
                return comps[static_cast<size_t>(a)].size() < comps[static_cast<size_t>(b)].size();
            return comps[static_cast<size_t>(a)].front() < comps[static_cast<size_t>(b)].front();
        });

        std::vector<int> comp_of(static_cast<size_t>(result.graph.node_count()), -1);
        for (size_t c = 0; c < comps.size(); ++c)
            for (int v : comps[c]) comp_of[static_cast<size_t>(v)] = static_cast<int>(c);

        auto first_edges = component_edges(result.graph, comp_of, order[0]);
        auto second_edges = component_edges(result.graph, comp_of, order[1]);
        auto [a, b] = first_edges[uniform_below(rng, first_edges.size())];
        auto [c, d] = second_edges[uniform_below(rng, second_edges.size())];

        // pick the replacement pairing with the smaller Randic contribution
        auto dd = [&](int u) { return static_cast<long long>(deg[static_cast<size_t>(u)]); };
        long long first_form = dd(a) * dd(d) + dd(c) * dd(b);
        long long second_form = dd(a) * dd(c) + dd(b) * dd(d);
        TwoSwitch s = second_form < first_form ? make_two_switch(a, b, d, c)
                                               : make_two_switch(a, b, c, d);
        result.graph = apply_two_switch(result.graph, s);
        ++result.switches_applied;
    }
    return result;
}

double percent_difference(double value, double reference) {
    if (reference <= 0.0) throw std::invalid_argument("reference must be positive");
    return 100.0 * (value - reference) / reference;
}

}  // namespace randic
