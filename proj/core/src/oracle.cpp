#include "randic/oracle.hpp"

#include <numeric>
#include <stdexcept>

#include "randic/randic_index.hpp"

namespace randic {
namespace oracle {

namespace {

struct GraphEnum {
    int n;
    std::vector<int> res;
    std::vector<Edge> edges;
    const std::function<bool(const SimpleGraph&)>& visit;
    bool stop = false;

    void node(int i) {
        if (stop) return;
        if (i == n) {
            stop = !visit(SimpleGraph(n, edges));
            return;
        }
        pick(i, i + 1, res[static_cast<size_t>(i)]);
    }

    // choose `need` partners for node i among j in [from, n) with residual left
    void pick(int i, int from, int need) {
        if (stop) return;
        if (need == 0) {
            node(i + 1);
            return;
        }
        int avail = 0;
        for (int j = from; j < n; ++j) avail += res[static_cast<size_t>(j)] > 0;
        if (avail < need) return;
        for (int j = from; j <= n - need; ++j) {
            if (res[static_cast<size_t>(j)] == 0) continue;
            --res[static_cast<size_t>(j)];
            edges.emplace_back(i, j);
            pick(i, j + 1, need - 1);
            edges.pop_back();
            ++res[static_cast<size_t>(j)];
            if (stop) return;
        }
    }
};

struct DigraphEnum {
    int n;
    std::vector<int> out_res;
    std::vector<int> in_res;
    std::vector<Arc> arcs;
    const std::function<bool(const DiGraph&)>& visit;
    bool stop = false;

    void node(int i) {
        if (stop) return;
        if (i == n) {
            for (int v : in_res)
                if (v != 0) return;
            stop = !visit(DiGraph(n, arcs));
            return;
        }
        pick(i, 0, out_res[static_cast<size_t>(i)]);
    }

    void pick(int i, int from, int need) {
        if (stop) return;
        if (need == 0) {
            node(i + 1);
            return;
        }
        int avail = 0;
        for (int j = from; j < n; ++j) avail += j != i && in_res[static_cast<size_t>(j)] > 0;
        if (avail < need) return;
        for (int j = from; j < n; ++j) {
            if (j == i || in_res[static_cast<size_t>(j)] == 0) continue;
            --in_res[static_cast<size_t>(j)];
            arcs.emplace_back(i, j);
            pick(i, j + 1, need - 1);
            arcs.pop_back();
            ++in_res[static_cast<size_t>(j)];
            if (stop) return;
        }
    }
};

}  // namespace

void enumerate_realizations(const DegreeSequence& d,
                            const std::function<bool(const SimpleGraph&)>& visit) {
    const int n = static_cast<int>(d.size());
    if (n > kMaxNodes) throw std::invalid_argument("enumeration cap: n <= 10");
    std::int64_t sum = std::accumulate(d.begin(), d.end(), std::int64_t{0});
    if (sum > kMaxDegreeSum) throw std::invalid_argument("enumeration cap: sum(d) <= 24");
    for (int v : d)
        if (v < 0) return;  // nothing realizes a negative entry
    if (sum % 2 != 0) return;
    GraphEnum e{n, d, {}, visit};
    e.node(0);
}

void enumerate_directed_realizations(const DirectedDegreeSequence& d,
                                     const std::function<bool(const DiGraph&)>& visit) {
    const int n = static_cast<int>(d.size());
    if (n > kMaxDirectedNodes) throw std::invalid_argument("enumeration cap: n <= 6");
    std::int64_t out_sum = 0;
    std::int64_t in_sum = 0;
    for (const auto& p : d) {
        if (p.out < 0 || p.in < 0) return;
        out_sum += p.out;
        in_sum += p.in;
    }
    if (out_sum != in_sum) return;
    std::vector<int> outs;
    std::vector<int> ins;
    for (const auto& p : d) {
        outs.push_back(p.out);
        ins.push_back(p.in);
    }
    DigraphEnum e{n, outs, ins, {}, visit};
    e.node(0);
}

namespace {

std::optional<BruteResult> brute_opt(const DegreeSequence& d, bool connected_only,
                                     bool maximize) {
    std::optional<BruteResult> best;
    enumerate_realizations(d, [&](const SimpleGraph& g) {
        if (connected_only && !is_connected(g)) return true;
        std::int64_t r = randic_index_exact(g);
        if (!best || (maximize ? r > best->value : r < best->value)) best = BruteResult{r, g};
        return true;
    });
    return best;
}

}  // namespace

std::optional<BruteResult> brute_min_randic(const DegreeSequence& d, bool connected_only) {
    return brute_opt(d, connected_only, false);
}

std::optional<BruteResult> brute_max_randic(const DegreeSequence& d, bool connected_only) {
    return brute_opt(d, connected_only, true);
}

std::int64_t count_realizations(const DegreeSequence& d) {
    std::int64_t count = 0;
    enumerate_realizations(d, [&](const SimpleGraph&) {
        ++count;
        return true;
    });
    return count;
}

}  // namespace oracle
}  // namespace randic
