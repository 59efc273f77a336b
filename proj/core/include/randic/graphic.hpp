#ifndef RANDIC_GRAPHIC_HPP
#define RANDIC_GRAPHIC_HPP

#include <optional>

#include "randic/graph.hpp"
#include "randic/rng.hpp"

namespace randic {

/// A degree-preserving edge exchange: remove (a,b) and (c,d), add (a,d) and
/// (c,b). Valid against a graph when the removed edges are present, the added
/// edges are absent and all four nodes are distinct.
struct TwoSwitch {
    Edge remove_first;   // (a,b)
    Edge remove_second;  // (c,d)
    Edge add_first;      // (a,d)
    Edge add_second;     // (c,b)
};

/// Builds the switch that removes (a,b),(c,d) and adds (a,d),(c,b).
TwoSwitch make_two_switch(int a, int b, int c, int d);

/// Havel-Hakimi realization. Returns std::nullopt when the sequence is not
/// graphic. The default variant deterministically processes the node with the
/// largest residual degree (ties to the lowest index); when rng is given, the
/// processed node is chosen uniformly at random instead, which still realizes
/// exactly the sequences the deterministic variant does. Zero entries are
/// allowed and produce isolated nodes. Negative entries are rejected.
std::optional<SimpleGraph> havel_hakimi(const DegreeSequence& d, Rng* rng = nullptr);

/// True iff some simple graph realizes d. Backed by Havel-Hakimi; the
/// Erdos-Gallai inequalities are available separately as a cross-check.
bool is_graphic(const DegreeSequence& d);

/// Erdos-Gallai test: even sum and the k-prefix inequalities on the sorted
/// sequence. Independent of havel_hakimi.
bool erdos_gallai(const DegreeSequence& d);

/// Necessary and sufficient condition for d to have a connected realization:
/// d graphic, every entry >= 1 and sum(d) >= 2(n-1). The single node with
/// degree 0 counts as connected.
bool has_connected_realization(const DegreeSequence& d);

/// Applies a two-switch, returning the new graph. Throws
/// std::invalid_argument with a diagnostic when the switch is not valid for g
/// (missing removed edge, present added edge, repeated node).
SimpleGraph apply_two_switch(const SimpleGraph& g, const TwoSwitch& s);

/// Applies a uniformly sampled valid two-switch, or returns g unchanged when
/// no valid switch is found within 4*|E| proposals. Requires >= 2 edges to
/// attempt anything.
SimpleGraph random_two_switch(const SimpleGraph& g, Rng& rng);

/// All switches valid for g, both replacement orientations, each exactly once.
/// Intended for small graphs (metagraph exploration, tests).
std::vector<TwoSwitch> enumerate_two_switches(const SimpleGraph& g);

}  // namespace randic

#endif
