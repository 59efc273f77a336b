#include "randic/generators.hpp"

#include <algorithm>
#include <stdexcept>

namespace randic {

SimpleGraph erdos_renyi(int n, double p, Rng& rng) {
    if (n < 1) throw std::invalid_argument("n must be at least 1");
    if (p < 0.0 || p > 1.0) throw std::invalid_argument("p must be in [0,1]");
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (uniform_unit(rng) < p) edges.emplace_back(i, j);
    return SimpleGraph(n, std::move(edges));
}

SimpleGraph geometric_from_points(const std::vector<std::pair<double, double>>& points,
                                  double r) {
    if (r < 0.0) throw std::invalid_argument("radius must be non-negative");
    const int n = static_cast<int>(points.size());
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            double dx = points[static_cast<size_t>(i)].first - points[static_cast<size_t>(j)].first;
            double dy = points[static_cast<size_t>(i)].second - points[static_cast<size_t>(j)].second;
            if (dx * dx + dy * dy <= r * r) edges.emplace_back(i, j);
        }
    }
    return SimpleGraph(n, std::move(edges));
}

SimpleGraph geometric(int n, double r, Rng& rng) {
    if (n < 1) throw std::invalid_argument("n must be at least 1");
    std::vector<std::pair<double, double>> points;
    points.reserve(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        double x = uniform_unit(rng);
        double y = uniform_unit(rng);
        points.emplace_back(x, y);
    }
    return geometric_from_points(points, r);
}

SimpleGraph scale_free(int n, int min_degree, Rng& rng) {
    if (min_degree < 1) throw std::invalid_argument("min_degree must be at least 1");
    if (n <= min_degree) throw std::invalid_argument("n must exceed min_degree");
    std::vector<Edge> edges;
    std::vector<int> endpoints;  // every edge contributes both ends; sampling
                                 // an entry is degree-proportional
    for (int i = 0; i <= min_degree; ++i) {
        for (int j = i + 1; j <= min_degree; ++j) {
            edges.emplace_back(i, j);
            endpoints.push_back(i);
            endpoints.push_back(j);
        }
    }
    std::vector<int> targets;
    for (int v = min_degree + 1; v < n; ++v) {
        targets.clear();
        while (static_cast<int>(targets.size()) < min_degree) {
            int t = endpoints[uniform_below(rng, endpoints.size())];
            if (std::find(targets.begin(), targets.end(), t) == targets.end())
                targets.push_back(t);
        }
        for (int t : targets) {
            edges.emplace_back(t, v);
            endpoints.push_back(t);
            endpoints.push_back(v);
        }
    }
    return SimpleGraph(n, std::move(edges));
}

}  // namespace randic
