#ifndef HYPERHOPF_ORIENTATIONS_HPP
#define HYPERHOPF_ORIENTATIONS_HPP

#include <functional>
#include <vector>

#include "hyperhopf/hypergraph.hpp"

namespace hyperhopf {

/// A quasi-order on the vertex set: equivalence classes plus a strict
/// partial order on the blocks, stored transitively closed as below[i] =
/// mask of blocks strictly below block i.
struct QuasiOrder {
    SetPartition classes;
    std::vector<Mask> below;

    int num_classes() const { return classes.num_blocks(); }
    /// x <= y on vertices.
    bool leq(int x, int y) const;
    bool equivalent(int x, int y) const;
    /// block(x) strictly below block(y).
    bool strictly_below(int x, int y) const;
};

/// All quasi-orders on {0..n-1}, each exactly once: set partitions crossed
/// with strict partial orders on the blocks. Subject to the orientation cap.
void for_each_quasi_order(int n, const std::function<void(const QuasiOrder&)>& fn);
long long count_quasi_orders(int n);

/// Independent slow enumerator: filters raw reflexive-transitive boolean
/// relations on n*n bits. Only for n <= 4.
long long count_quasi_orders_raw(int n);

struct OrientationClass {
    bool is_acyclic = false;
    bool is_total = false;   // implies is_acyclic
    bool is_one_max = false; // implies is_acyclic
};

/// Acyclicity of q against G: each edge restricts to a total nontrivial
/// quasi-order, and every relation is witnessed by a nondecreasing
/// edge-path. Also reports the total/1-max refinements. q must live on V(G).
OrientationClass classify_orientation(const Hypergraph& g, const QuasiOrder& q);

struct OrientationSums {
    long long signed_all = 0;    // sum of (-1)^cl over acyclic orientations
    long long total_count = 0;   // number of total acyclic orientations
    long long signed_one_max = 0;
    long long count_all = 0;     // number of acyclic orientations
};

OrientationSums orientation_sums(const Hypergraph& g);

/// Classical acyclic edge-orientations of gamma(G), counted directly.
long long stanley_count(const Hypergraph& g);

}  // namespace hyperhopf

#endif
