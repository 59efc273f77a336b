#ifndef RANDIC_TEST_SUPPORT_HPP
#define RANDIC_TEST_SUPPORT_HPP

// Brute-force reference implementations and input generators shared by the
// unit and acceptance suites. Everything here is deliberately independent of
// the solver code paths it is used to check.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "randic/blossom.hpp"
#include "randic/bmatching.hpp"
#include "randic/graph.hpp"
#include "randic/rng.hpp"

namespace randic::test {

// minimum-weight perfect matching by trying every partner of the first
// unmatched vertex
inline std::optional<std::int64_t> brute_min_perfect_matching(
    int n, const std::vector<WeightedEdge>& edges) {
    std::vector<std::vector<std::pair<int, std::int64_t>>> adj(static_cast<size_t>(n));
    for (const auto& e : edges) {
        adj[static_cast<size_t>(e.u)].push_back({e.v, e.w});
        adj[static_cast<size_t>(e.v)].push_back({e.u, e.w});
    }
    std::vector<char> used(static_cast<size_t>(n), 0);
    std::optional<std::int64_t> best;
    std::function<void(std::int64_t)> rec = [&](std::int64_t acc) {
        int v = -1;
        for (int i = 0; i < n; ++i)
            if (!used[static_cast<size_t>(i)]) {
                v = i;
                break;
            }
        if (v == -1) {
            if (!best || acc < *best) best = acc;
            return;
        }
        used[static_cast<size_t>(v)] = 1;
        for (auto [to, w] : adj[static_cast<size_t>(v)]) {
            if (used[static_cast<size_t>(to)]) continue;
            used[static_cast<size_t>(to)] = 1;
            rec(acc + w);
            used[static_cast<size_t>(to)] = 0;
        }
        used[static_cast<size_t>(v)] = 0;
    };
    rec(0);
    return best;
}

// enumerates every perfect b-matching of the instance, feeding the chosen
// edge index set to visit
inline void for_each_perfect_bmatching(const MatchingInstance& inst,
                                       const std::function<void(const std::vector<int>&)>& visit) {
    const auto& edges = inst.host.edges();
    const int n = inst.host.node_count();
    std::vector<int> res = inst.b;
    std::vector<int> chosen;
    // remaining_degree[v] over edges not yet decided, for pruning
    std::vector<int> remaining(static_cast<size_t>(n), 0);
    for (const auto& [u, v] : edges) {
        ++remaining[static_cast<size_t>(u)];
        ++remaining[static_cast<size_t>(v)];
    }
    std::function<void(size_t)> rec = [&](size_t k) {
        if (k == edges.size()) {
            for (int v = 0; v < n; ++v)
                if (res[static_cast<size_t>(v)] != 0) return;
            visit(chosen);
            return;
        }
        auto [u, v] = edges[k];
        --remaining[static_cast<size_t>(u)];
        --remaining[static_cast<size_t>(v)];
        // skip edge k
        if (res[static_cast<size_t>(u)] <= remaining[static_cast<size_t>(u)] &&
            res[static_cast<size_t>(v)] <= remaining[static_cast<size_t>(v)])
            rec(k + 1);
        // take edge k
        if (res[static_cast<size_t>(u)] > 0 && res[static_cast<size_t>(v)] > 0) {
            --res[static_cast<size_t>(u)];
            --res[static_cast<size_t>(v)];
            chosen.push_back(static_cast<int>(k));
            rec(k + 1);
            chosen.pop_back();
            ++res[static_cast<size_t>(u)];
            ++res[static_cast<size_t>(v)];
        }
        ++remaining[static_cast<size_t>(u)];
        ++remaining[static_cast<size_t>(v)];
    };
    rec(0);
}

inline std::optional<double> brute_min_bmatching_weight(const MatchingInstance& inst) {
    std::optional<double> best;
    for_each_perfect_bmatching(inst, [&](const std::vector<int>& chosen) {
        double w = 0;
        for (int k : chosen) w += inst.weights[static_cast<size_t>(k)];
        if (!best || w < *best) best = w;
    });
    return best;
}

inline std::optional<double> brute_max_bmatching_weight(const MatchingInstance& inst) {
    std::optional<double> best;
    for_each_perfect_bmatching(inst, [&](const std::vector<int>& chosen) {
        double w = 0;
        for (int k : chosen) w += inst.weights[static_cast<size_t>(k)];
        if (!best || w > *best) best = w;
    });
    return best;
}

// all non-increasing sequences of the given length over {0..max_entry}
inline std::vector<DegreeSequence> all_monotone_sequences(int length, int max_entry) {
    std::vector<DegreeSequence> out;
    DegreeSequence cur;
    std::function<void(int, int)> rec = [&](int pos, int cap) {
        if (pos == length) {
            out.push_back(cur);
            return;
        }
        for (int v = cap; v >= 0; --v) {
            cur.push_back(v);
            rec(pos + 1, v);
            cur.pop_back();
        }
    };
    rec(0, max_entry);
    return out;
}

// random graph -> its degree sequence is graphic by construction
inline DegreeSequence random_graphic_sequence(int n, int max_degree, Rng& rng) {
    for (;;) {
        std::vector<Edge> edges;
        std::vector<int> deg(static_cast<size_t>(n), 0);
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) {
                if (deg[static_cast<size_t>(i)] >= max_degree ||
                    deg[static_cast<size_t>(j)] >= max_degree)
                    continue;
                if (uniform_below(rng, 2) == 1) {
                    edges.emplace_back(i, j);
                    ++deg[static_cast<size_t>(i)];
                    ++deg[static_cast<size_t>(j)];
                }
            }
        }
        bool any = false;
        for (int v : deg) any |= v > 0;
        if (any) return deg;
    }
}

}  // namespace randic::test

#endif
