#ifndef RANDIC_RANDIC_INDEX_HPP
#define RANDIC_RANDIC_INDEX_HPP

#include <cstdint>

#include "randic/graph.hpp"

namespace randic {

/// Which of the out/in degree a directed index term uses.
enum class Sign { plus, minus };

/// Sum over edges of (d_i * d_j)^alpha, degrees taken in g. alpha must be
/// nonzero. For alpha == 1 the value is computed with exact integer
/// arithmetic and converted (see randic_index_exact).
double randic_index(const SimpleGraph& g, double alpha);

/// Exact integer Randic index at alpha = 1: sum over edges of d_i * d_j.
/// Accumulation is overflow-checked; throws std::overflow_error beyond
/// 64-bit range.
std::int64_t randic_index_exact(const SimpleGraph& g);

/// Directed Randic-type index: sum over arcs (i,j) of d_i^p * d_j^q where
/// d^+ / d^- is selected by p for the tail and q for the head.
std::int64_t directed_randic(const DiGraph& g, Sign p, Sign q);

}  // namespace randic

#endif
