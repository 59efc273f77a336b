#ifndef RANDIC_GRAPH_HPP
#define RANDIC_GRAPH_HPP

#include <cstdint>
#include <utility>
#include <vector>

namespace randic {

using Edge = std::pair<int, int>;  // undirected, stored with first < second
using Arc = std::pair<int, int>;   // directed, (tail, head)

/// A degree sequence: entry i prescribes the degree of node i.
using DegreeSequence = std::vector<int>;

/// Out/in degree pair for one node of a directed graph.
struct DegreePair {
    int out = 0;
    int in = 0;
    friend bool operator==(const DegreePair&, const DegreePair&) = default;
};

using DirectedDegreeSequence = std::vector<DegreePair>;

/// Undirected simple graph on nodes 0..n-1. Immutable after construction:
/// the edge list is kept sorted and deduplicated, adjacency lists are sorted.
/// Self-loops and out-of-range endpoints are rejected at construction.
class SimpleGraph {
public:
    SimpleGraph() = default;
    explicit SimpleGraph(int n) : n_(n), adj_(static_cast<size_t>(n)) {}
    SimpleGraph(int n, std::vector<Edge> edges);

    int node_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<int>& neighbors(int v) const { return adj_[static_cast<size_t>(v)]; }
    int degree(int v) const { return static_cast<int>(adj_[static_cast<size_t>(v)].size()); }
    bool has_edge(int u, int v) const;

    friend bool operator==(const SimpleGraph& a, const SimpleGraph& b) {
        return a.n_ == b.n_ && a.edges_ == b.edges_;
    }

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> adj_;
};

/// Directed simple graph: arc set without self-loops or parallel arcs.
class DiGraph {
public:
    DiGraph() = default;
    explicit DiGraph(int n) : n_(n), out_(static_cast<size_t>(n)), in_(static_cast<size_t>(n)) {}
    DiGraph(int n, std::vector<Arc> arcs);

    int node_count() const { return n_; }
    int arc_count() const { return static_cast<int>(arcs_.size()); }
    const std::vector<Arc>& arcs() const { return arcs_; }
    const std::vector<int>& out_neighbors(int v) const { return out_[static_cast<size_t>(v)]; }
    const std::vector<int>& in_neighbors(int v) const { return in_[static_cast<size_t>(v)]; }
    int out_degree(int v) const { return static_cast<int>(out_[static_cast<size_t>(v)].size()); }
    int in_degree(int v) const { return static_cast<int>(in_[static_cast<size_t>(v)].size()); }
    bool has_arc(int u, int v) const;

    friend bool operator==(const DiGraph& a, const DiGraph& b) {
        return a.n_ == b.n_ && a.arcs_ == b.arcs_;
    }

private:
    int n_ = 0;
    std::vector<Arc> arcs_;
    std::vector<std::vector<int>> out_;
    std::vector<std::vector<int>> in_;
};

/// Degree of every node; sum equals twice the edge count.
DegreeSequence degree_sequence(const SimpleGraph& g);

/// Out/in degree pairs of every node.
DirectedDegreeSequence directed_degree_sequence(const DiGraph& g);

/// Maximal connected node sets; isolated nodes are singleton components.
/// Components are ordered by their smallest node, nodes ascending inside each.
std::vector<std::vector<int>> connected_components(const SimpleGraph& g);

/// True iff the graph has exactly one connected component (and n >= 1).
bool is_connected(const SimpleGraph& g);

}  // namespace randic

#endif
