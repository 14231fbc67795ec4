#ifndef HYPERHOPF_INVARIANTS_HPP
#define HYPERHOPF_INVARIANTS_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hyperhopf/character.hpp"
#include "hyperhopf/lincomb.hpp"
#include "hyperhopf/polynomial.hpp"

namespace hyperhopf {

enum class ChromaticVariant { Subset, Cap, Mixed };

std::optional<ChromaticVariant> chromatic_variant_from_name(const std::string& name);
RestrictMode restrict_mode_of(ChromaticVariant v);  // rejects Mixed

/// The chromatic polynomial P_⊂ / P_∩ / P_{⊂,∩} of G, exact.
RationalPolynomial chromatic(const Hypergraph& g, ChromaticVariant v);

/// Exhaustive count of maps V(G) -> [N] satisfying the variant's coloring
/// condition. Subject to the work bound.
long long coloring_oracle(const Hypergraph& g, int colors, ChromaticVariant v);

/// P_∩ computed as the chromatic polynomial of Γ(G) by deletion-contraction.
RationalPolynomial chromatic_via_gamma(const Hypergraph& g);

/// Classical chromatic polynomial of a simple graph by deletion-contraction.
RationalPolynomial graph_chromatic(const Hypergraph& graph);

/// P_0(G) = X^{|V(G)|}.
RationalPolynomial p_zero(const Hypergraph& g);

/// Spanning-subgraph counts N_G(i,j): subsets F of E^+(G) with
/// cc(V(G),F) = i and |F| = j.
struct SpanningCountTable {
    std::map<std::pair<int, int>, long long> counts;  // (components, edges) -> count

    long long at(int components, int edges) const {
        auto it = counts.find({components, edges});
        return it == counts.end() ? 0 : it->second;
    }
    long long total() const;
};

SpanningCountTable spanning_counts(const Hypergraph& g);

/// λ_⋉, the convolution inverse of λ_0 for δ^(⋉).
Character lambda_character(RestrictMode mode);

/// λ_⊂ by the closed spanning-count formula Σ_j (−1)^j N_G(cc(G), j).
Character lambda_subset_closed();

/// P_⋉ via Σ over admissible partitions of λ_⋉(G|~) X^{cl(~)}.
RationalPolynomial chromatic_via_lambda(const Hypergraph& g, RestrictMode mode);

/// Coefficients a_i = Σ_j (−1)^j N_G(i,j) of P_⊂(G), ascending (index 0..n).
std::vector<long long> coefficients_via_counts(const Hypergraph& g);

/// Eulerian idempotent ϖ(G), a degree-1 formal sum.
HgSum eulerian_idempotent(const Hypergraph& g);
HgSum eulerian_idempotent(const HgSum& s);

/// Linear extension of a chromatic variant to degree-1 sums.
RationalPolynomial chromatic(const HgSum& s, ChromaticVariant v);

}  // namespace hyperhopf

#endif
