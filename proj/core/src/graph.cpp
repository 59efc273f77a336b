#include "randic/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace randic {

namespace {

void check_endpoint(int v, int n) {
    if (v < 0 || v >= n)
        throw std::invalid_argument("node " + std::to_string(v) + " out of range [0," +
                                    std::to_string(n) + ")");
}

}  // namespace

SimpleGraph::SimpleGraph(int n, std::vector<Edge> edges) : n_(n) {
    if (n < 0) throw std::invalid_argument("negative node count");
    for (auto& [u, v] : edges) {
        check_endpoint(u, n);
        check_endpoint(v, n);
        if (u == v) throw std::invalid_argument("self-loop at node " + std::to_string(u));
        if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
        throw std::invalid_argument("duplicate edge");
    edges_ = std::move(edges);
    adj_.assign(static_cast<size_t>(n), {});
    for (const auto& [u, v] : edges_) {
        adj_[static_cast<size_t>(u)].push_back(v);
        adj_[static_cast<size_t>(v)].push_back(u);
    }
    for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

bool SimpleGraph::has_edge(int u, int v) const {
    if (u < 0 || u >= n_ || v < 0 || v >= n_ || u == v) return false;
    const auto& nb = adj_[static_cast<size_t>(u)];
    return std::binary_search(nb.begin(), nb.end(), v);
}

DiGraph::DiGraph(int n, std::vector<Arc> arcs) : n_(n) {
    if (n < 0) throw std::invalid_argument("negative node count");
    for (const auto& [u, v] : arcs) {
        check_endpoint(u, n);
        check_endpoint(v, n);
        if (u == v) throw std::invalid_argument("self-loop at node " + std::to_string(u));
    }
    std::sort(arcs.begin(), arcs.end());
    if (std::adjacent_find(arcs.begin(), arcs.end()) != arcs.end())
        throw std::invalid_argument("parallel arc");
    arcs_ = std::move(arcs);
    out_.assign(static_cast<size_t>(n), {});
    in_.assign(static_cast<size_t>(n), {});
    for (const auto& [u, v] : arcs_) {
        out_[static_cast<size_t>(u)].push_back(v);
        in_[static_cast<size_t>(v)].push_back(u);
    }
    for (auto& nb : out_) std::sort(nb.begin(), nb.end());
    for (auto& nb : in_) std::sort(nb.begin(), nb.end());
}

bool DiGraph::has_arc(int u, int v) const {
    if (u < 0 || u >= n_ || v < 0 || v >= n_ || u == v) return false;
    const auto& nb = out_[static_cast<size_t>(u)];
    return std::binary_search(nb.begin(), nb.end(), v);
}

DegreeSequence degree_sequence(const SimpleGraph& g) {
    DegreeSequence d(static_cast<size_t>(g.node_count()));
    for (int v = 0; v < g.node_count(); ++v) d[static_cast<size_t>(v)] = g.degree(v);
    return d;
}

DirectedDegreeSequence directed_degree_sequence(const DiGraph& g) {
    DirectedDegreeSequence d(static_cast<size_t>(g.node_count()));
    for (int v = 0; v < g.node_count(); ++v)
        d[static_cast<size_t>(v)] = {g.out_degree(v), g.in_degree(v)};
    return d;
}

std::vector<std::vector<int>> connected_components(const SimpleGraph& g) {
    const int n = g.node_count();
    std::vector<int> comp(static_cast<size_t>(n), -1);
    std::vector<std::vector<int>> out;
    std::vector<int> stack;
    for (int s = 0; s < n; ++s) {
        if (comp[static_cast<size_t>(s)] != -1) continue;
        const int id = static_cast<int>(out.size());
        out.emplace_back();
        comp[static_cast<size_t>(s)] = id;
        stack.push_back(s);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            out[static_cast<size_t>(id)].push_back(v);
            for (int w : g.neighbors(v)) {
                if (comp[static_cast<size_t>(w)] == -1) {
                    comp[static_cast<size_t>(w)] = id;
                    stack.push_back(w);
                }
            }
        }
    }
    for (auto& c : out) std::sort(c.begin(), c.end());
    return out;
}

bool is_connected(const SimpleGraph& g) {
    return g.node_count() >= 1 && connected_components(g).size() == 1;
}

}  // namespace randic
