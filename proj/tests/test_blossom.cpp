#include <doctest.h>

#include "randic/blossom.hpp"
#include "randic/rng.hpp"
#include "test_support.hpp"

using namespace randic;

TEST_CASE("perfect matching on a single edge") {
    auto r = min_weight_perfect_matching(2, {{0, 1, 5}});
    REQUIRE(r.feasible);
    CHECK(r.weight == 5);
    CHECK(r.mate[0] == 1);
    CHECK(r.mate[1] == 0);
}

TEST_CASE("odd vertex count is infeasible") {
    auto r = min_weight_perfect_matching(3, {{0, 1, 1}, {1, 2, 1}, {0, 2, 1}});
    CHECK_FALSE(r.feasible);
}

TEST_CASE("odd components are infeasible") {
    // two disjoint triangles: even vertex count, yet each component is odd
    std::vector<WeightedEdge> edges = {{0, 1, 1}, {1, 2, 1}, {0, 2, 1},
                                       {3, 4, 1}, {4, 5, 1}, {3, 5, 1}};
    CHECK_FALSE(min_weight_perfect_matching(6, edges).feasible);

    auto path = min_weight_perfect_matching(4, {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}, {0, 2, 7}});
    REQUIRE(path.feasible);
    CHECK(path.weight == 2);
    CHECK_FALSE(min_weight_perfect_matching(4, {{0, 1, 1}, {1, 2, 1}}).feasible);
}

TEST_CASE("forced blossom: odd cycle with pendant") {
    // triangle 0-1-2 plus pendants 3 (on 0) and 4,5 edge; optimum must use
    // the pendant edges and one triangle edge
    std::vector<WeightedEdge> edges = {{0, 1, 10}, {1, 2, 1}, {0, 2, 10},
                                       {0, 3, 2},  {4, 5, 3}};
    auto r = min_weight_perfect_matching(6, edges);
    REQUIRE(r.feasible);
    CHECK(r.weight == 6);
    CHECK(r.mate[3] == 0);
}

TEST_CASE("negative weights are handled") {
    std::vector<WeightedEdge> edges = {{0, 1, -4}, {1, 2, -10}, {2, 3, -4}, {0, 3, 1}};
    auto r = min_weight_perfect_matching(4, edges);
    REQUIRE(r.feasible);
    CHECK(r.weight == -9);  // (1,2) and (0,3)
}

TEST_CASE("matches brute force on random sparse graphs") {
    Rng rng(20240811);
    int checked = 0;
    for (int trial = 0; trial < 400; ++trial) {
        int n = 2 * (1 + static_cast<int>(uniform_below(rng, 5)));  // 2..10
        std::vector<WeightedEdge> edges;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (uniform_below(rng, 100) < 55)
                    edges.push_back({i, j, static_cast<std::int64_t>(uniform_below(rng, 41)) - 10});
        auto expected = test::brute_min_perfect_matching(n, edges);
        auto got = min_weight_perfect_matching(n, edges);
        REQUIRE(got.feasible == expected.has_value());
        if (expected) {
            CHECK(got.weight == *expected);
            ++checked;
        }
    }
    CHECK(checked > 100);
}

TEST_CASE("matches brute force on random dense graphs") {
    Rng rng(7);
    for (int trial = 0; trial < 150; ++trial) {
        int n = 2 * (2 + static_cast<int>(uniform_below(rng, 4)));  // 4..10
        std::vector<WeightedEdge> edges;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                edges.push_back({i, j, static_cast<std::int64_t>(uniform_below(rng, 1000))});
        auto expected = test::brute_min_perfect_matching(n, edges);
        auto got = min_weight_perfect_matching(n, edges);
        REQUIRE(got.feasible);
        CHECK(got.weight == *expected);
    }
}

TEST_CASE("mate array is an involution covering all vertices") {
    Rng rng(99);
    std::vector<WeightedEdge> edges;
    int n = 12;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            edges.push_back({i, j, static_cast<std::int64_t>(uniform_below(rng, 50))});
    auto r = min_weight_perfect_matching(n, edges);
    REQUIRE(r.feasible);
    for (int v = 0; v < n; ++v) {
        CHECK(r.mate[static_cast<size_t>(v)] != v);
        CHECK(r.mate[static_cast<size_t>(r.mate[static_cast<size_t>(v)])] == v);
    }
}

TEST_CASE("weight limit is enforced") {
    CHECK_THROWS_AS(min_weight_perfect_matching(2, {{0, 1, std::int64_t{1} << 41}}),
                    std::invalid_argument);
}
