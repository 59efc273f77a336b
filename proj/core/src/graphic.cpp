#include "randic/graphic.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace randic {

TwoSwitch make_two_switch(int a, int b, int c, int d) {
    auto norm = [](int u, int v) { return u < v ? Edge{u, v} : Edge{v, u}; };
    return {norm(a, b), norm(c, d), norm(a, d), norm(c, b)};
}

std::optional<SimpleGraph> havel_hakimi(const DegreeSequence& d, Rng* rng) {
    const int n = static_cast<int>(d.size());
    for (int v : d)
        if (v < 0) throw std::invalid_argument("negative degree entry");

    std::vector<int> res = d;
    std::vector<Edge> edges;
    std::int64_t sum = std::accumulate(d.begin(), d.end(), std::int64_t{0});
    edges.reserve(static_cast<size_t>(sum / 2));

    // larger residual first, ties to the lowest node index
    auto cmp = [&](int u, int v) {
        return res[static_cast<size_t>(u)] != res[static_cast<size_t>(v)]
                   ? res[static_cast<size_t>(u)] > res[static_cast<size_t>(v)]
                   : u < v;
    };

    std::vector<int> alive;
    for (;;) {
        alive.clear();
        for (int v = 0; v < n; ++v)
            if (res[static_cast<size_t>(v)] > 0) alive.push_back(v);
        if (alive.empty()) break;

        int i;
        if (rng) {
            i = alive[uniform_below(*rng, alive.size())];
        } else {
            i = *std::min_element(alive.begin(), alive.end(), cmp);
        }
        const int k = res[static_cast<size_t>(i)];
        res[static_cast<size_t>(i)] = 0;

        alive.erase(std::find(alive.begin(), alive.end(), i));
        if (static_cast<int>(alive.size()) < k) return std::nullopt;
        std::nth_element(alive.begin(), alive.begin() + (k - 1), alive.end(), cmp);
        for (int t = 0; t < k; ++t) {
            int p = alive[static_cast<size_t>(t)];
            --res[static_cast<size_t>(p)];
            edges.emplace_back(std::min(i, p), std::max(i, p));
        }
    }
    return SimpleGraph(n, std::move(edges));
}

bool is_graphic(const DegreeSequence& d) {
    for (int v : d)
        if (v < 0) return false;
    return havel_hakimi(d).has_value();
}

bool erdos_gallai(const DegreeSequence& d) {
    const int n = static_cast<int>(d.size());
    for (int v : d)
        if (v < 0) return false;
    std::vector<std::int64_t> s(d.begin(), d.end());
    std::sort(s.begin(), s.end(), std::greater<>());
    if (!s.empty() && s[0] > n - 1) return false;

    std::vector<std::int64_t> prefix(static_cast<size_t>(n) + 1, 0);
    for (int i = 0; i < n; ++i) prefix[static_cast<size_t>(i) + 1] = prefix[static_cast<size_t>(i)] + s[static_cast<size_t>(i)];
    if (prefix[static_cast<size_t>(n)] % 2 != 0) return false;

    for (int k = 1; k <= n; ++k) {
        // entries past position k contribute min(d_i, k); d is sorted desc
        auto it = std::partition_point(s.begin() + k, s.end(),
                                       [&](std::int64_t x) { return x >= k; });
        auto cnt_ge = static_cast<std::int64_t>(it - (s.begin() + k));
        std::int64_t tail = static_cast<std::int64_t>(k) * cnt_ge +
                            (prefix[static_cast<size_t>(n)] - prefix[static_cast<size_t>(k) + static_cast<size_t>(cnt_ge)]);
        if (prefix[static_cast<size_t>(k)] > static_cast<std::int64_t>(k) * (k - 1) + tail) return false;
    }
    return true;
}

bool has_connected_realization(const DegreeSequence& d) {
    const int n = static_cast<int>(d.size());
    if (n == 0) return false;
    if (n == 1) return d[0] == 0;
    std::int64_t sum = 0;
    for (int v : d) {
        if (v < 1) return false;
        sum += v;
    }
    if (sum < 2 * (static_cast<std::int64_t>(n) - 1)) return false;
    return is_graphic(d);
}

namespace {

bool switch_nodes_distinct(const TwoSwitch& s) {
    int nodes[4] = {s.remove_first.first, s.remove_first.second, s.remove_second.first,
                    s.remove_second.second};
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (nodes[i] == nodes[j]) return false;
    return true;
}

std::string edge_str(const Edge& e) {
    return "(" + std::to_string(e.first) + "," + std::to_string(e.second) + ")";
}

}  // namespace

SimpleGraph apply_two_switch(const SimpleGraph& g, const TwoSwitch& s) {
    if (!switch_nodes_distinct(s))
        throw std::invalid_argument("two-switch endpoints are not four distinct nodes");
    for (const Edge& e : {s.remove_first, s.remove_second})
        if (!g.has_edge(e.first, e.second))
            throw std::invalid_argument("two-switch removes absent edge " + edge_str(e));
    for (const Edge& e : {s.add_first, s.add_second})
        if (g.has_edge(e.first, e.second))
            throw std::invalid_argument("two-switch adds existing edge " + edge_str(e));

    std::vector<Edge> edges = g.edges();
    auto drop = [&](const Edge& e) {
        edges.erase(std::find(edges.begin(), edges.end(), e));
    };
    drop(s.remove_first);
    drop(s.remove_second);
    edges.push_back(s.add_first);
    edges.push_back(s.add_second);
    return SimpleGraph(g.node_count(), std::move(edges));
}

SimpleGraph random_two_switch(const SimpleGraph& g, Rng& rng) {
    const auto& edges = g.edges();
    const size_t m = edges.size();
    if (m < 2) return g;
    const size_t budget = 4 * m;
    for (size_t attempt = 0; attempt < budget; ++attempt) {
        size_t i = uniform_below(rng, m);
        size_t j = uniform_below(rng, m - 1);
        if (j >= i) ++j;
        auto [a, b] = edges[i];
        auto [c, d] = edges[j];
        if (uniform_below(rng, 2) == 1) std::swap(c, d);
        TwoSwitch s = make_two_switch(a, b, c, d);
        if (!switch_nodes_distinct(s)) continue;
        if (g.has_edge(s.add_first.first, s.add_first.second)) continue;
        if (g.has_edge(s.add_second.first, s.add_second.second)) continue;
        return apply_two_switch(g, s);
    }
    return g;
}

std::vector<TwoSwitch> enumerate_two_switches(const SimpleGraph& g) {
    std::vector<TwoSwitch> out;
    const auto& edges = g.edges();
    for (size_t i = 0; i < edges.size(); ++i) {
        for (size_t j = i + 1; j < edges.size(); ++j) {
            auto [a, b] = edges[i];
            for (auto [c, d] : {edges[j], Edge{edges[j].second, edges[j].first}}) {
                TwoSwitch s = make_two_switch(a, b, c, d);
                if (!switch_nodes_distinct(s)) continue;
                if (g.has_edge(s.add_first.first, s.add_first.second)) continue;
                if (g.has_edge(s.add_second.first, s.add_second.second)) continue;
                out.push_back(s);
            }
        }
    }
    return out;
}

}  // namespace randic
