#ifndef HYPERHOPF_GENERATE_HPP
#define HYPERHOPF_GENERATE_HPP

#include <random>
#include <vector>

#include "hyperhopf/hypergraph.hpp"

namespace hyperhopf {

/// Deterministic random hypergraph: n vertices, edges drawn without
/// replacement from the nontrivial subsets.
Hypergraph random_hypergraph(std::mt19937_64& rng, int num_vertices, int max_edges);

/// All isomorphism classes of hypergraphs with exactly n vertices. Feasible
/// for n <= 4 (1, 1, 2, 8, 180 classes for n = 0..4).
std::vector<Canonical> all_hypergraphs(int n);

/// All isomorphism classes with at most n vertices.
std::vector<Canonical> all_hypergraphs_up_to(int n);

/// As all_hypergraphs, keeping only classes with at most max_edges edges.
std::vector<Canonical> all_hypergraphs(int n, int max_edges);

/// T_n: one edge containing all n vertices (n >= 2), else edgeless.
Hypergraph t_n(int n);

}  // namespace hyperhopf

#endif
