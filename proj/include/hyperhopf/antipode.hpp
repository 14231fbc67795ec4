#ifndef HYPERHOPF_ANTIPODE_HPP
#define HYPERHOPF_ANTIPODE_HPP

#include <string>

#include "hyperhopf/coproducts.hpp"

namespace hyperhopf {

/// Takeuchi's formula: sum over ordered set partitions (I_1,...,I_k) of
/// (-1)^k times the product of the iterated coproduct factors. Works for all
/// four mode pairs; the mixed pairs use the staircase factors.
HgSum takeuchi_antipode(const Hypergraph& g, CoproductMode mode);
HgSum takeuchi_antipode(const HgSum& s, CoproductMode mode);

/// Closed forms for the equal-mode antipodes:
///   subset: sum over admissible subset partitions of
///           (signed count of acyclic orientations of G/~) G|_subset~
///   cap:    sum over admissible cap partitions of
///           (-1)^{cl(~)} (classical acyclic orientations of Gamma(G/~)) G|_cap~
HgSum antipode_closed(const Hypergraph& g, RestrictMode mode);

/// The mixed antipode as a sum over pairs (~, theta), theta assigning to
/// each nontrivial edge a block it meets. Rejects the empty hypergraph.
HgSum antipode_mixed(const Hypergraph& g);

struct AntipodeCheck {
    bool ok = true;
    std::string detail;
};

/// Both antipode axioms m(S (x) Id)Delta = eta eps = m(Id (x) S)Delta and the
/// involution S(S(G)) = G, for the Takeuchi antipode of the given mode.
AntipodeCheck verify_antipode(const Hypergraph& g, CoproductMode mode);

}  // namespace hyperhopf

#endif
