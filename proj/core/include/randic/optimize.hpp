#ifndef RANDIC_OPTIMIZE_HPP
#define RANDIC_OPTIMIZE_HPP

#include <cstdint>
#include <optional>

#include "randic/bmatching.hpp"
#include "randic/graph.hpp"
#include "randic/randic_index.hpp"

namespace randic {

enum class Objective { minimize, maximize };

struct OptimizationResult {
    SimpleGraph realization;
    std::int64_t index_value = 0;  // exact alpha=1 index of the realization
    Objective objective = Objective::minimize;
    bool connected = false;
};

struct DirectedOptimizationResult {
    DiGraph realization;
    std::int64_t index_value = 0;
    Objective objective = Objective::minimize;
    Sign p = Sign::plus;
    Sign q = Sign::plus;
};

struct AlphaOptimizationResult {
    SimpleGraph realization;
    double index_value = 0.0;
    Objective objective = Objective::minimize;
    bool connected = false;
};

/// Matching instance for optimizing the Randic index over realizations of d:
/// host K_n, weights w_ij = d_i * d_j, targets b = d. Requires d graphic with
/// every entry >= 1 (strip zeros first; see minimize_randic). For
/// Objective::maximize the weight matrix goes through max_transform, matching
/// the published construction; the optimization pipeline itself maximizes by
/// negating weights inside the solver instead, so both routes are available.
MatchingInstance build_instance(const DegreeSequence& d, Objective objective);

/// Global minimum of the alpha=1 Randic index over ALL realizations of d
/// (connectivity not enforced). Zero entries are stripped before the solve
/// and restored as isolated nodes. Throws std::invalid_argument when d is not
/// graphic. The returned index equals both the matching weight and the
/// recomputed index of the realization, exactly.
OptimizationResult minimize_randic(const DegreeSequence& d);

/// Global maximum, same contract as minimize_randic.
OptimizationResult maximize_randic(const DegreeSequence& d);

/// General-alpha variant with weights round(10^6 * (d_i d_j)^alpha) for
/// non-integral weights; exact for integral ones. Approximate for alpha != 1
/// in the sense that the argmin is taken under rounded weights.
AlphaOptimizationResult optimize_randic_alpha(const DegreeSequence& d, double alpha,
                                              Objective objective);

/// Optimal simple digraph realization of an out/in pair sequence for the
/// directed index R^{pq}, via perfect b-matching on K_{n,n} minus the
/// diagonal with weights d_i^p * d_j^q. std::nullopt when the pair sequence
/// has no realization.
std::optional<DirectedOptimizationResult> optimize_directed_randic(
    const DirectedDegreeSequence& d, Sign p, Sign q, Objective objective);

/// randic_index(g,1) / max Randic index over realizations of g's degree
/// sequence. In (0,1]; equals 1 iff g attains the maximum. Rejects graphs
/// whose degree sequence is all zero.
double normalized_randic(const SimpleGraph& g);

}  // namespace randic

#endif
