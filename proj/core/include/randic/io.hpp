#ifndef RANDIC_IO_HPP
#define RANDIC_IO_HPP

#include <iosfwd>
#include <string>

#include "randic/bmatching.hpp"
#include "randic/graph.hpp"

namespace randic {

// Text formats. Node labels are 0-based everywhere.
//
//   degree sequence   whitespace- or comma-separated integers on one line
//   pair sequence     "out in" integers, one pair per node (commas allowed)
//   edge list         "n m" then m lines "i j"
//   adjacency matrix  n lines of n space-separated 0/1 entries, symmetric,
//                     zero diagonal
//   digraph list      "n m" then m lines "i j" (ordered pairs)
//   instance file     "n m", then the b vector, then m lines "i j w"

DegreeSequence read_degree_sequence(std::istream& in);
DirectedDegreeSequence read_pair_sequence(std::istream& in);

SimpleGraph read_edge_list(std::istream& in);
SimpleGraph read_adjacency_matrix(std::istream& in);
/// Accepts either undirected format, deciding by structure.
SimpleGraph read_graph_auto(std::istream& in);
DiGraph read_digraph_edge_list(std::istream& in);

void write_edge_list(std::ostream& out, const SimpleGraph& g);
void write_adjacency_matrix(std::ostream& out, const SimpleGraph& g);
void write_digraph_edge_list(std::ostream& out, const DiGraph& g);

MatchingInstance read_matching_instance(std::istream& in);
void write_matching_instance(std::ostream& out, const MatchingInstance& inst);

// File convenience wrappers; throw std::runtime_error when the file cannot
// be opened.
DegreeSequence read_degree_sequence_file(const std::string& path);
DirectedDegreeSequence read_pair_sequence_file(const std::string& path);
SimpleGraph read_graph_file(const std::string& path);
MatchingInstance read_matching_instance_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

/// Ratio rendered as a percentage with two decimals, trailing zeros dropped:
/// 0.946037 -> "94.6%", 0.9484 -> "94.84%".
std::string format_percent(double ratio);

}  // namespace randic

#endif
