#ifndef RANDIC_ORACLE_HPP
#define RANDIC_ORACLE_HPP

#include <cstdint>
#include <functional>
#include <optional>

#include "randic/graph.hpp"

namespace randic {
namespace oracle {

// Exhaustive enumeration of labeled realizations for small inputs. Everything
// here is exponential by nature and guarded by hard caps; the solvers ship
// elsewhere, this module exists to certify them.

constexpr int kMaxNodes = 10;
constexpr int kMaxDegreeSum = 24;
constexpr int kMaxDirectedNodes = 6;

/// Calls visit for every labeled simple graph whose degree sequence is
/// exactly d (backtracking over the upper-triangular adjacency with residual
/// pruning). Stops early when visit returns false. Throws when n > 10 or
/// sum(d) > 24.
void enumerate_realizations(const DegreeSequence& d,
                            const std::function<bool(const SimpleGraph&)>& visit);

/// Calls visit for every labeled simple digraph (no self-loops, no parallel
/// arcs) with the given out/in pair sequence. Throws when n > 6.
void enumerate_directed_realizations(const DirectedDegreeSequence& d,
                                     const std::function<bool(const DiGraph&)>& visit);

struct BruteResult {
    std::int64_t value;
    SimpleGraph realization;
};

/// Exact optimum of the alpha=1 Randic index over all (optionally connected)
/// realizations of d, std::nullopt when none exist. Subject to the
/// enumeration caps.
std::optional<BruteResult> brute_min_randic(const DegreeSequence& d, bool connected_only);
std::optional<BruteResult> brute_max_randic(const DegreeSequence& d, bool connected_only);

/// Number of labeled realizations of d (caps apply).
std::int64_t count_realizations(const DegreeSequence& d);

}  // namespace oracle
}  // namespace randic

#endif
