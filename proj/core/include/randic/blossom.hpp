#ifndef RANDIC_BLOSSOM_HPP
#define RANDIC_BLOSSOM_HPP

#include <cstdint>
#include <vector>

namespace randic {

struct WeightedEdge {
    int u = 0;
    int v = 0;
    std::int64_t w = 0;
};

struct PerfectMatchingResult {
    bool feasible = false;
    std::int64_t weight = 0;     // sum of matched edge weights
    std::vector<int> mate;       // mate[v], or -1 when infeasible
    // Vertex duals of the certified optimal dual solution, in the solver's
    // internal scale (all weights doubled, so slack(u,v) = 2w - y_u - y_v up
    // to blossom terms). Exposed for price-and-repair schemes on top.
    std::vector<std::int64_t> dual_y;
};

/// Exact minimum-weight perfect matching on a general graph (Edmonds'
/// blossom algorithm, primal-dual, integer arithmetic). Weights may be
/// negative; |w| is limited to 2^40 so that duals cannot overflow. Parallel
/// edges are tolerated. Returns feasible=false when no perfect matching
/// exists. On success the result is certified internally against the dual
/// solution (feasibility + complementary slackness + objective equality);
/// a certificate failure throws std::logic_error.
PerfectMatchingResult min_weight_perfect_matching(int n,
                                                  const std::vector<WeightedEdge>& edges);

}  // namespace randic

#endif
