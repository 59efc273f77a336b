#ifndef RANDIC_BMATCHING_HPP
#define RANDIC_BMATCHING_HPP

#include <optional>
#include <vector>

#include "randic/graph.hpp"

namespace randic {

/// Perfect b-matching instance: pick a subset M of host edges so that every
/// node i is incident to exactly b[i] chosen edges, minimizing total weight.
/// weights[k] belongs to host.edges()[k]. Weights are real; when every weight
/// is integral the solve is exact, otherwise weights are scaled by 10^6 and
/// rounded (documented approximation for the general-alpha pipeline).
struct MatchingInstance {
    SimpleGraph host;
    std::vector<double> weights;
    std::vector<int> b;
};

struct Matching {
    std::vector<Edge> edges;
    double weight = 0.0;
};

/// Bipartite variant with separate parts; edge (left, right) indices are
/// local to each part. Zero targets are allowed here (a node with b=0 simply
/// takes no edge).
struct BipartiteInstance {
    struct BipEdge {
        int left = 0;
        int right = 0;
        double w = 0.0;
    };
    int n_left = 0;
    int n_right = 0;
    std::vector<BipEdge> edges;
    std::vector<int> b_left;
    std::vector<int> b_right;
};

struct BipartiteMatching {
    std::vector<std::pair<int, int>> edges;  // (left, right)
    double weight = 0.0;
};

/// Exact minimum-weight perfect b-matching on a general host graph via a
/// node-splitting reduction to perfect 1-matching (each node becomes b_v
/// clones, each host edge a two-node gadget whose internal edge absorbs the
/// unselected case), solved with the blossom algorithm. Returns std::nullopt
/// when no perfect b-matching exists; malformed instances throw. The gadget
/// is refused (throw) when sum(b) + 2|E| exceeds node_budget.
std::optional<Matching> solve_min_bmatching(const MatchingInstance& inst,
                                            int node_budget = 200000);

/// Maximization via weight negation inside the same reduction.
std::optional<Matching> solve_max_bmatching(const MatchingInstance& inst,
                                            int node_budget = 200000);

/// Min-cost-flow backend for bipartite hosts. Infeasible (nullopt) when the
/// part sums differ or the flow cannot saturate.
std::optional<BipartiteMatching> solve_min_bipartite_bmatching(const BipartiteInstance& inst);
std::optional<BipartiteMatching> solve_max_bipartite_bmatching(const BipartiteInstance& inst);

/// Max<->min weight transform for fixed-cardinality matchings:
/// H2[i][j] = (1 + max H) - H[i][j] off the diagonal, 0 on it. A perfect
/// b-matching is minimum under H iff maximum under H2. H must be square,
/// symmetric, zero-diagonal and non-negative.
std::vector<std::vector<double>> max_transform(const std::vector<std::vector<double>>& h);

}  // namespace randic

#endif
