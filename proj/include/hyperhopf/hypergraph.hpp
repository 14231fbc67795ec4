#ifndef HYPERHOPF_HYPERGRAPH_HPP
#define HYPERHOPF_HYPERGRAPH_HPP

#include <compare>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hyperhopf {

/// Vertex subsets are bitmasks over the dense internal indices 0..n-1.
using Mask = std::uint32_t;

inline int popcount(Mask m) { return __builtin_popcount(m); }

/// Thrown when an enumeration would exceed the configured desk-scale caps.
struct resource_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Global size caps, overridable via environment or the CLI.
struct Caps {
    int enumeration = 10;           // max vertices for partition/subset enumerations
    int orientation = 7;            // max vertices for quasi-order enumeration
    long long work_bound = 200'000'000;  // max elementary steps for brute-force oracles
};

Caps& caps();

enum class RestrictMode { Subset, Cap };

/// A hypergraph: ordered distinct vertex labels plus the set of nontrivial
/// edges (cardinality >= 2) as bitmasks. The empty edge and all singletons
/// are implicit and never stored.
class Hypergraph {
public:
    Hypergraph() = default;

    /// Vertices only, no nontrivial edges.
    explicit Hypergraph(std::vector<std::string> labels);

    /// Labels plus nontrivial edges given as label lists. Rejects unknown
    /// labels, duplicate vertices within an edge, and edges of size < 2.
    Hypergraph(std::vector<std::string> labels,
               const std::vector<std::vector<std::string>>& edges);

    /// Internal constructor from masks; deduplicates and sorts.
    Hypergraph(std::vector<std::string> labels, std::vector<Mask> edge_masks);

    int num_vertices() const { return static_cast<int>(labels_.size()); }
    Mask full_mask() const {
        return num_vertices() == 0 ? 0 : (Mask(1) << num_vertices()) - 1;
    }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(int v) const { return labels_.at(v); }
    int index_of(const std::string& label) const;  // -1 if absent

    /// Nontrivial edges, sorted ascending as masks.
    const std::vector<Mask>& edges() const { return edges_; }
    int num_edges() const { return static_cast<int>(edges_.size()); }
    bool has_nontrivial_edge() const { return !edges_.empty(); }
    bool empty() const { return labels_.empty(); }

    bool operator==(const Hypergraph& other) const = default;

    std::string to_string() const;

private:
    std::vector<std::string> labels_;
    std::vector<Mask> edges_;
};

/// Disjoint nonempty blocks covering a ground mask, sorted by lowest bit.
struct SetPartition {
    std::vector<Mask> blocks;

    SetPartition() = default;
    explicit SetPartition(std::vector<Mask> b);

    int num_blocks() const { return static_cast<int>(blocks.size()); }
    Mask ground() const;
    bool is_partition_of(Mask ground_mask) const;
    /// Block index containing vertex v; -1 if none.
    int block_of(int v) const;
    bool is_discrete() const;

    bool operator==(const SetPartition&) const = default;
};

/// Induced sub-hypergraph on I. Subset mode keeps edges contained in I;
/// cap mode intersects every edge with I and drops trivial results.
Hypergraph restrict(const Hypergraph& g, Mask I, RestrictMode mode);

/// Staircase restrictions: block p keeps e∩I_p for edges e contained in
/// I_1 ∪ ... ∪ I_p. Blocks must be ordered, disjoint and cover V(G).
std::vector<Hypergraph> staircase_restrict(const Hypergraph& g,
                                           const std::vector<Mask>& blocks);

/// Disjoint union; clashing labels of h are primed until unique.
Hypergraph disjoint_union(const Hypergraph& g, const Hypergraph& h);

bool is_connected(const Hypergraph& g);

/// Masks of the maximal connected pieces, ordered by smallest vertex.
std::vector<Mask> component_masks(const Hypergraph& g);

std::vector<Hypergraph> connected_components(const Hypergraph& g);

/// Contraction G/~: one vertex per block, edges are the nontrivial images.
Hypergraph quotient(const Hypergraph& g, const SetPartition& p);

/// Disjoint union of the per-block restrictions, on the original vertex set.
Hypergraph partition_restrict(const Hypergraph& g, const SetPartition& p,
                              RestrictMode mode);

/// All partitions whose blocks induce connected restrictions: E_⋉[G].
std::vector<SetPartition> admissible_partitions(const Hypergraph& g,
                                                RestrictMode mode);

/// The graph on V(G) whose 2-edges are the pairs lying in a common edge.
Hypergraph gamma(const Hypergraph& g);

/// Every set partition of {0..n-1} exactly once, in restricted-growth-string
/// order. Subject to the enumeration cap.
std::vector<SetPartition> enumerate_set_partitions(int n);
void for_each_set_partition(int n, const std::function<void(const SetPartition&)>& fn);

/// Canonical representative of the isomorphism class: vertex labels 0..n-1,
/// minimal edge encoding over structure-preserving relabelings.
struct Canonical {
    int n = 0;
    std::vector<Mask> edges;

    auto operator<=>(const Canonical&) const = default;
    std::string to_string() const;
};

Canonical canonical_form(const Hypergraph& g);
Hypergraph to_hypergraph(const Canonical& c);

}  // namespace hyperhopf

#endif
