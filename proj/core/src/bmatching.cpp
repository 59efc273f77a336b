#include "randic/bmatching.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <queue>
#include <stdexcept>

#include "randic/blossom.hpp"
#include "randic/graphic.hpp"

namespace randic {

namespace {

constexpr double kScaleFactor = 1e6;
constexpr double kMaxScaled = 1099511627776.0;  // 2^40

// Integer weights solve exactly; anything else is scaled by 10^6 and rounded.
std::vector<std::int64_t> to_integer_weights(const std::vector<double>& w, bool negate) {
    bool integral = true;
    for (double x : w) {
        if (!std::isfinite(x)) throw std::invalid_argument("non-finite edge weight");
        if (x != std::floor(x)) integral = false;
    }
    double factor = integral ? 1.0 : kScaleFactor;
    std::vector<std::int64_t> out;
    out.reserve(w.size());
    for (double x : w) {
        double scaled = x * factor;
        if (std::abs(scaled) > kMaxScaled)
            throw std::invalid_argument("edge weight too large after scaling");
        out.push_back(static_cast<std::int64_t>(std::llround(scaled)) * (negate ? -1 : 1));
    }
    return out;
}

void validate_instance(const MatchingInstance& inst) {
    const int n = inst.host.node_count();
    if (static_cast<int>(inst.b.size()) != n)
        throw std::invalid_argument("b vector length differs from node count");
    if (inst.weights.size() != inst.host.edges().size())
        throw std::invalid_argument("weight count differs from edge count");
    for (int v : inst.b)
        if (v < 1) throw std::invalid_argument("b entries must be positive");
}

std::optional<Matching> solve_general(const MatchingInstance& inst, bool maximize,
                                      int node_budget) {
    validate_instance(inst);
    const int n = inst.host.node_count();
    const auto& host_edges = inst.host.edges();
    const int m = static_cast<int>(host_edges.size());

    std::int64_t b_sum = std::accumulate(inst.b.begin(), inst.b.end(), std::int64_t{0});
    if (b_sum % 2 != 0) return std::nullopt;
    for (int v = 0; v < n; ++v)
        if (inst.b[static_cast<size_t>(v)] > inst.host.degree(v)) return std::nullopt;

    if (b_sum + 2 * static_cast<std::int64_t>(m) > node_budget)
        throw std::invalid_argument("instance exceeds the gadget node budget (" +
                                    std::to_string(node_budget) + " nodes)");

    std::vector<std::int64_t> w = to_integer_weights(inst.weights, maximize);

    // clones of node v occupy [clone_at[v], clone_at[v+1]); the i-th kept
    // edge owns gadget nodes clones + 2i and clones + 2i + 1
    std::vector<int> clone_at(static_cast<size_t>(n) + 1, 0);
    for (int v = 0; v < n; ++v)
        clone_at[static_cast<size_t>(v) + 1] = clone_at[static_cast<size_t>(v)] + inst.b[static_cast<size_t>(v)];
    const int clones = clone_at[static_cast<size_t>(n)];

    // Price and repair on dense hosts: solve over each node's cheapest
    // candidate edges, then certify every omitted edge against the duals. An
    // omitted edge (u,v) needs no gadget iff 2w >= maxY_u + maxY_v (its pair
    // nodes can then be matched internally with a tight internal edge), so
    // violated edges are re-added and the reduced instance re-solved. The
    // kept set is seeded with a Havel-Hakimi realization of b when the host
    // contains one, which makes the reduced instance feasible up front.
    std::vector<char> kept(static_cast<size_t>(m), 1);
    const bool sparsified = m > 600;
    std::vector<std::vector<int>> incident;
    int margin = 8;
    auto mark_cheapest = [&](int per_node_extra) {
        for (int v = 0; v < n; ++v) {
            auto& inc = incident[static_cast<size_t>(v)];
            size_t keep_n = std::min(
                inc.size(), static_cast<size_t>(inst.b[static_cast<size_t>(v)] + per_node_extra));
            std::partial_sort(inc.begin(), inc.begin() + static_cast<std::ptrdiff_t>(keep_n),
                              inc.end(), [&](int a, int c) {
                                  return w[static_cast<size_t>(a)] != w[static_cast<size_t>(c)]
                                             ? w[static_cast<size_t>(a)] < w[static_cast<size_t>(c)]
                                             : a < c;
                              });
            for (size_t i = 0; i < keep_n; ++i) kept[static_cast<size_t>(inc[i])] = 1;
        }
    };
    if (sparsified) {
        kept.assign(static_cast<size_t>(m), 0);
        incident.assign(static_cast<size_t>(n), {});
        for (int k = 0; k < m; ++k) {
            incident[static_cast<size_t>(host_edges[static_cast<size_t>(k)].first)].push_back(k);
            incident[static_cast<size_t>(host_edges[static_cast<size_t>(k)].second)].push_back(k);
        }
        mark_cheapest(margin);
        if (auto seed = havel_hakimi(inst.b)) {
            bool host_has_all = true;
            for (const auto& [u, v] : seed->edges()) host_has_all &= inst.host.has_edge(u, v);
            if (host_has_all) {
                for (const auto& e : seed->edges()) {
                    auto it = std::lower_bound(host_edges.begin(), host_edges.end(), e);
                    kept[static_cast<size_t>(it - host_edges.begin())] = 1;
                }
            }
        }
    }

    for (;;) {
        std::vector<int> kept_ids;
        for (int k = 0; k < m; ++k)
            if (kept[static_cast<size_t>(k)]) kept_ids.push_back(k);

        std::vector<WeightedEdge> gedges;
        const int gadget_n = clones + 2 * static_cast<int>(kept_ids.size());
        for (size_t i = 0; i < kept_ids.size(); ++i) {
            int k = kept_ids[i];
            auto [u, v] = host_edges[static_cast<size_t>(k)];
            int gu = clones + 2 * static_cast<int>(i);
            int gv = gu + 1;
            gedges.push_back({gu, gv, 0});
            for (int c = clone_at[static_cast<size_t>(u)]; c < clone_at[static_cast<size_t>(u) + 1]; ++c)
                gedges.push_back({c, gu, w[static_cast<size_t>(k)]});
            for (int c = clone_at[static_cast<size_t>(v)]; c < clone_at[static_cast<size_t>(v) + 1]; ++c)
                gedges.push_back({c, gv, 0});
        }

        PerfectMatchingResult pm = min_weight_perfect_matching(gadget_n, gedges);
        const bool all_kept = static_cast<int>(kept_ids.size()) == m;
        if (!pm.feasible) {
            if (all_kept) return std::nullopt;
            margin *= 2;  // sparsification broke feasibility; widen the keeps
            if (margin >= n) {
                kept.assign(static_cast<size_t>(m), 1);
            } else {
                mark_cheapest(margin);
            }
            continue;
        }

        if (!all_kept) {
            std::vector<std::int64_t> max_y(static_cast<size_t>(n),
                                            std::numeric_limits<std::int64_t>::min());
            for (int v = 0; v < n; ++v)
                for (int c = clone_at[static_cast<size_t>(v)]; c < clone_at[static_cast<size_t>(v) + 1]; ++c)
                    max_y[static_cast<size_t>(v)] =
                        std::max(max_y[static_cast<size_t>(v)], pm.dual_y[static_cast<size_t>(c)]);
            bool violated = false;
            for (int k = 0; k < m; ++k) {
                if (kept[static_cast<size_t>(k)]) continue;
                auto [u, v] = host_edges[static_cast<size_t>(k)];
                if (2 * w[static_cast<size_t>(k)] <
                    max_y[static_cast<size_t>(u)] + max_y[static_cast<size_t>(v)]) {
                    kept[static_cast<size_t>(k)] = 1;
                    violated = true;
                }
            }
            if (violated) continue;
        }

        Matching out;
        std::vector<int> got(static_cast<size_t>(n), 0);
        for (size_t i = 0; i < kept_ids.size(); ++i) {
            int gu = clones + 2 * static_cast<int>(i);
            if (pm.mate[static_cast<size_t>(gu)] == gu + 1) continue;  // edge unselected
            int k = kept_ids[i];
            auto [u, v] = host_edges[static_cast<size_t>(k)];
            out.edges.push_back({u, v});
            out.weight += inst.weights[static_cast<size_t>(k)];
            ++got[static_cast<size_t>(u)];
            ++got[static_cast<size_t>(v)];
        }
        for (int v = 0; v < n; ++v)
            if (got[static_cast<size_t>(v)] != inst.b[static_cast<size_t>(v)])
                throw std::logic_error("solver produced wrong matching degree");
        return out;
    }
}

// ---- bipartite backend: successive shortest paths ------------------------

struct FlowNetwork {
    struct FlowArc {
        int to;
        int cap;
        std::int64_t cost;
    };
    std::vector<FlowArc> arcs;  // reverse arc at index ^1
    std::vector<std::vector<int>> adj;

    explicit FlowNetwork(int n) : adj(static_cast<size_t>(n)) {}

    int add(int from, int to, int cap, std::int64_t cost) {
        int id = static_cast<int>(arcs.size());
        arcs.push_back({to, cap, cost});
        arcs.push_back({from, 0, -cost});
        adj[static_cast<size_t>(from)].push_back(id);
        adj[static_cast<size_t>(to)].push_back(id + 1);
        return id;
    }
};

void validate_bipartite(const BipartiteInstance& inst) {
    if (static_cast<int>(inst.b_left.size()) != inst.n_left ||
        static_cast<int>(inst.b_right.size()) != inst.n_right)
        throw std::invalid_argument("b vector length differs from part size");
    for (int v : inst.b_left)
        if (v < 0) throw std::invalid_argument("negative b entry");
    for (int v : inst.b_right)
        if (v < 0) throw std::invalid_argument("negative b entry");
    std::vector<char> seen(static_cast<size_t>(inst.n_left) * static_cast<size_t>(inst.n_right), 0);
    for (const auto& e : inst.edges) {
        if (e.left < 0 || e.left >= inst.n_left || e.right < 0 || e.right >= inst.n_right)
            throw std::invalid_argument("bipartite edge endpoint out of range");
        auto idx = static_cast<size_t>(e.left) * static_cast<size_t>(inst.n_right) +
                   static_cast<size_t>(e.right);
        if (seen[idx]) throw std::invalid_argument("duplicate bipartite edge");
        seen[idx] = 1;
    }
}

std::optional<BipartiteMatching> solve_bipartite(const BipartiteInstance& inst, bool maximize) {
    validate_bipartite(inst);
    std::int64_t left_sum = std::accumulate(inst.b_left.begin(), inst.b_left.end(), std::int64_t{0});
    std::int64_t right_sum =
        std::accumulate(inst.b_right.begin(), inst.b_right.end(), std::int64_t{0});
    if (left_sum != right_sum) return std::nullopt;

    std::vector<double> raw;
    raw.reserve(inst.edges.size());
    for (const auto& e : inst.edges) raw.push_back(e.w);
    std::vector<std::int64_t> w = to_integer_weights(raw, maximize);

    // every source->sink path crosses exactly one middle arc, so a constant
    // shift keeps Dijkstra costs non-negative without changing the argmin
    std::int64_t shift = 0;
    for (std::int64_t x : w) shift = std::min(shift, x);
    shift = -shift;

    const int n_nodes = inst.n_left + inst.n_right + 2;
    const int src = inst.n_left + inst.n_right;
    const int snk = src + 1;
    FlowNetwork net(n_nodes);
    for (int i = 0; i < inst.n_left; ++i)
        if (inst.b_left[static_cast<size_t>(i)] > 0) net.add(src, i, inst.b_left[static_cast<size_t>(i)], 0);
    for (int j = 0; j < inst.n_right; ++j)
        if (inst.b_right[static_cast<size_t>(j)] > 0)
            net.add(inst.n_left + j, snk, inst.b_right[static_cast<size_t>(j)], 0);
    std::vector<int> mid_arc(inst.edges.size());
    for (size_t k = 0; k < inst.edges.size(); ++k)
        mid_arc[k] = net.add(inst.edges[k].left, inst.n_left + inst.edges[k].right, 1,
                             w[k] + shift);

    // successive shortest paths with Johnson potentials
    std::vector<std::int64_t> pot(static_cast<size_t>(n_nodes), 0);
    std::vector<std::int64_t> dist(static_cast<size_t>(n_nodes));
    std::vector<int> via(static_cast<size_t>(n_nodes));
    std::int64_t flow = 0;
    constexpr std::int64_t kUnreached = std::numeric_limits<std::int64_t>::max() / 4;
    while (flow < left_sum) {
        std::fill(dist.begin(), dist.end(), kUnreached);
        std::fill(via.begin(), via.end(), -1);
        dist[static_cast<size_t>(src)] = 0;
        using Item = std::pair<std::int64_t, int>;
        std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
        pq.push({0, src});
        while (!pq.empty()) {
            auto [d, v] = pq.top();
            pq.pop();
            if (d != dist[static_cast<size_t>(v)]) continue;
            for (int id : net.adj[static_cast<size_t>(v)]) {
                const auto& a = net.arcs[static_cast<size_t>(id)];
                if (a.cap <= 0) continue;
                std::int64_t nd = d + a.cost + pot[static_cast<size_t>(v)] - pot[static_cast<size_t>(a.to)];
                if (nd < dist[static_cast<size_t>(a.to)]) {
                    dist[static_cast<size_t>(a.to)] = nd;
                    via[static_cast<size_t>(a.to)] = id;
                    pq.push({nd, a.to});
                }
            }
        }
        if (dist[static_cast<size_t>(snk)] >= kUnreached) return std::nullopt;  // cannot saturate
        for (int v = 0; v < n_nodes; ++v)
            if (dist[static_cast<size_t>(v)] < kUnreached) pot[static_cast<size_t>(v)] += dist[static_cast<size_t>(v)];
        int bottleneck = std::numeric_limits<int>::max();
        for (int v = snk; v != src;) {
            const auto& a = net.arcs[static_cast<size_t>(via[static_cast<size_t>(v)])];
            bottleneck = std::min(bottleneck, a.cap);
            v = net.arcs[static_cast<size_t>(via[static_cast<size_t>(v)] ^ 1)].to;
        }
        for (int v = snk; v != src;) {
            net.arcs[static_cast<size_t>(via[static_cast<size_t>(v)])].cap -= bottleneck;
            net.arcs[static_cast<size_t>(via[static_cast<size_t>(v)] ^ 1)].cap += bottleneck;
            v = net.arcs[static_cast<size_t>(via[static_cast<size_t>(v)] ^ 1)].to;
        }
        flow += bottleneck;
    }

    // optimality certificate: a feasible flow is minimum-cost iff the
    // residual graph has no negative cycle (Bellman-Ford from a virtual
    // super-source attached to every node)
    {
        std::vector<std::int64_t> d(static_cast<size_t>(n_nodes), 0);
        for (int round = 0; round <= n_nodes; ++round) {
            bool relaxed = false;
            for (int v = 0; v < n_nodes; ++v) {
                for (int id : net.adj[static_cast<size_t>(v)]) {
                    const auto& a = net.arcs[static_cast<size_t>(id)];
                    if (a.cap > 0 && d[static_cast<size_t>(v)] + a.cost < d[static_cast<size_t>(a.to)]) {
                        d[static_cast<size_t>(a.to)] = d[static_cast<size_t>(v)] + a.cost;
                        relaxed = true;
                    }
                }
            }
            if (!relaxed) break;
            if (round == n_nodes) throw std::logic_error("negative residual cycle after flow");
        }
    }

    BipartiteMatching out;
    std::vector<int> got_left(static_cast<size_t>(inst.n_left), 0);
    std::vector<int> got_right(static_cast<size_t>(inst.n_right), 0);
    for (size_t k = 0; k < inst.edges.size(); ++k) {
        if (net.arcs[static_cast<size_t>(mid_arc[k])].cap != 0) continue;  // no flow
        out.edges.emplace_back(inst.edges[k].left, inst.edges[k].right);
        out.weight += inst.edges[k].w;
        ++got_left[static_cast<size_t>(inst.edges[k].left)];
        ++got_right[static_cast<size_t>(inst.edges[k].right)];
    }
    if (got_left != inst.b_left || got_right != inst.b_right)
        throw std::logic_error("flow produced wrong matching degree");
    std::sort(out.edges.begin(), out.edges.end());
    return out;
}

}  // namespace

std::optional<Matching> solve_min_bmatching(const MatchingInstance& inst, int node_budget) {
    return solve_general(inst, false, node_budget);
}

std::optional<Matching> solve_max_bmatching(const MatchingInstance& inst, int node_budget) {
    return solve_general(inst, true, node_budget);
}

std::optional<BipartiteMatching> solve_min_bipartite_bmatching(const BipartiteInstance& inst) {
    return solve_bipartite(inst, false);
}

std::optional<BipartiteMatching> solve_max_bipartite_bmatching(const BipartiteInstance& inst) {
    return solve_bipartite(inst, true);
}

std::vector<std::vector<double>> max_transform(const std::vector<std::vector<double>>& h) {
    const size_t n = h.size();
    double hmax = 0.0;
    for (size_t i = 0; i < n; ++i) {
        if (h[i].size() != n) throw std::invalid_argument("weight matrix not square");
        if (h[i][i] != 0.0) throw std::invalid_argument("weight matrix diagonal must be zero");
        for (size_t j = 0; j < n; ++j) {
            if (h[i][j] < 0.0) throw std::invalid_argument("weight matrix entries must be non-negative");
            if (h[i][j] != h[j][i]) throw std::invalid_argument("weight matrix not symmetric");
            hmax = std::max(hmax, h[i][j]);
        }
    }
    std::vector<std::vector<double>> out(n, std::vector<double>(n, 0.0));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            if (i != j) out[i][j] = (1.0 + hmax) - h[i][j];
    return out;
}

}  // namespace randic
