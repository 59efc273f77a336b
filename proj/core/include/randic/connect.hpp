#ifndef RANDIC_CONNECT_HPP
#define RANDIC_CONNECT_HPP

#include "randic/graph.hpp"
#include "randic/rng.hpp"

namespace randic {

struct ConnectResult {
    SimpleGraph graph;
    int switches_applied = 0;
};

/// Connects a disconnected realization with degree-preserving two-switches.
/// Repeatedly merges the two smallest components with one switch built from a
/// random edge of each (the replacement orientation with the smaller Randic
/// contribution is chosen, ties to the (a,d),(c,b) form). Edges from distinct
/// components can never share nodes nor pre-exist, so every cross-component
/// switch is valid and merges exactly two components; the result is connected
/// after exactly (components - 1) switches. Throws std::invalid_argument when
/// the degree sequence has no connected realization or a component has no
/// edge (isolated node).
ConnectResult connect_by_two_switches(const SimpleGraph& g, Rng& rng);

/// 100 * (value - reference) / reference; reference must be positive.
double percent_difference(double value, double reference);

}  // namespace randic

#endif
