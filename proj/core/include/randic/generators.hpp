#ifndef RANDIC_GENERATORS_HPP
#define RANDIC_GENERATORS_HPP

#include "randic/graph.hpp"
#include "randic/rng.hpp"

namespace randic {

/// Each of the C(n,2) node pairs becomes an edge independently iff its
/// uniform [0,1) draw is below p. Pairs are drawn in lexicographic order.
SimpleGraph erdos_renyi(int n, double p, Rng& rng);

/// Nodes placed uniformly at random in the unit square; edge iff the squared
/// Euclidean distance is at most r^2.
SimpleGraph geometric(int n, double r, Rng& rng);

/// Geometric graph over given coordinates (the random placement split out so
/// tests can probe the distance rule directly).
SimpleGraph geometric_from_points(const std::vector<std::pair<double, double>>& points,
                                  double r);

/// Preferential attachment: a seed clique on min_degree+1 nodes, then each
/// new node attaches to min_degree distinct existing nodes sampled with
/// probability proportional to current degree (without replacement). Every
/// node ends with degree >= min_degree. Requires n > min_degree >= 1.
SimpleGraph scale_free(int n, int min_degree, Rng& rng);

}  // namespace randic

#endif
