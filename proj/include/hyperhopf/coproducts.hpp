#ifndef HYPERHOPF_COPRODUCTS_HPP
#define HYPERHOPF_COPRODUCTS_HPP

#include <optional>
#include <string>

#include "hyperhopf/lincomb.hpp"

namespace hyperhopf {

/// Left/right restriction modes of a pairwise coproduct Δ^(left,right).
struct CoproductMode {
    RestrictMode left;
    RestrictMode right;

    bool equal_modes() const { return left == right; }
};

inline constexpr CoproductMode kSubsetSubset{RestrictMode::Subset, RestrictMode::Subset};
inline constexpr CoproductMode kCapCap{RestrictMode::Cap, RestrictMode::Cap};
inline constexpr CoproductMode kCapSubset{RestrictMode::Cap, RestrictMode::Subset};
inline constexpr CoproductMode kSubsetCap{RestrictMode::Subset, RestrictMode::Cap};

/// Δ(G) = sum over I ⊆ V(G) of G|_left I ⊗ G|_right (V \ I), canonicalized.
HgSum coproduct_pair(const Hypergraph& g, CoproductMode mode);

/// Factors of the iterated coproduct on an ordered decomposition of V(G)
/// (empty parts allowed): factor p is (G|_right I_p ∪ ... ∪ I_k)|_left I_p.
std::vector<Hypergraph> iterated_factors(const Hypergraph& g, CoproductMode mode,
                                         const std::vector<Mask>& parts);

/// Left-iterated Δ^(k), a sum of degree-(k+1) words.
HgSum coproduct_iterated(const Hypergraph& g, CoproductMode mode, int k);

/// Δ(G) − G⊗1 − 1⊗G; rejects the empty hypergraph.
HgSum reduced_coproduct(const Hypergraph& g, CoproductMode mode);

/// δ(G) = sum over admissible partitions of G/~ ⊗ G|~, canonicalized.
HgSum delta_contract(const Hypergraph& g, RestrictMode mode);

/// ε on tensor words: 1 iff every factor is the empty hypergraph.
mpq_class counit_eps(const TensorWord& w);
mpq_class counit_eps(const HgSum& s);

/// ε_δ(G): 1 iff E^+(G) = ∅.
mpq_class counit_eps_delta(const Hypergraph& g);

enum class AxiomId {
    Coassoc,          // (Δ⊗Id)∘Δ = (Id⊗Δ)∘Δ
    Multiplicativity, // Δ(GH) = Δ(G)Δ(H), likewise for δ
    Coopposite,       // swap of Δ^(∩,⊂) equals Δ^(⊂,∩)
    Cocommutativity,  // equal-mode Δ is invariant under leg swap
    DeltaCoassoc,     // (δ⊗Id)∘δ = (Id⊗δ)∘δ
    Cointeraction,    // (Δ⊗Id)∘δ = m_{1,3,24}∘(δ⊗δ)∘Δ
    CounitLaws,       // (ε⊗Id)∘Δ = Id = (Id⊗ε)∘Δ and the δ/ε_δ versions
};

std::optional<AxiomId> axiom_from_name(const std::string& name);

struct AxiomReport {
    bool ok = true;
    std::string detail;  // which side pair differed, on failure
    HgSum lhs, rhs;
};

/// Evaluates both sides of the selected identity on G exactly. The mode
/// argument selects the coproduct(s) where the axiom is mode-dependent.
AxiomReport check_axiom(const Hypergraph& g, AxiomId which, CoproductMode mode);

/// m_{1,3,24}: a1⊗a2⊗a3⊗a4 -> a1⊗a3⊗(a2·a4) on degree-4 sums.
HgSum m_13_24(const HgSum& s);

}  // namespace hyperhopf

#endif
