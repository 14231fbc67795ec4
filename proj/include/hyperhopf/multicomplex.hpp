#ifndef HYPERHOPF_MULTICOMPLEX_HPP
#define HYPERHOPF_MULTICOMPLEX_HPP

#include <random>
#include <string>
#include <vector>

#include "hyperhopf/lincomb.hpp"
#include "hyperhopf/polynomial.hpp"

namespace hyperhopf {

/// One stored edge instance: a multiset over the vertices with total
/// multiplicity >= 2. The empty edge and the singletons are implicit.
struct EdgeInstance {
    std::string id;
    std::vector<int> mult;  // per-vertex multiplicity, >= 0

    Mask support() const;
    int total() const;
    bool operator==(const EdgeInstance&) const = default;
};

/// A multi-complex: labelled vertices, a list of distinguishable edge
/// instances, and a strict partial order on the instances kept transitively
/// closed as below[i] = instances strictly below instance i. The order
/// relations involving the implicit trivial edges are determined by the
/// axioms and never stored. e < f forces e to be a submultiset of f.
class MultiComplex {
public:
    MultiComplex() = default;
    explicit MultiComplex(std::vector<std::string> labels);
    MultiComplex(std::vector<std::string> labels, std::vector<EdgeInstance> instances,
                 std::vector<Mask> below_relation);  // closed and validated

    int num_vertices() const { return static_cast<int>(labels_.size()); }
    Mask full_mask() const {
        return num_vertices() == 0 ? 0 : (Mask(1) << num_vertices()) - 1;
    }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(int v) const { return labels_.at(v); }
    int index_of(const std::string& label) const;
    const std::vector<EdgeInstance>& instances() const { return instances_; }
    int num_instances() const { return static_cast<int>(instances_.size()); }
    const std::vector<Mask>& below() const { return below_; }
    bool empty() const { return labels_.empty(); }

    bool operator==(const MultiComplex&) const = default;

    std::string to_string() const;

private:
    std::vector<std::string> labels_;
    std::vector<EdgeInstance> instances_;
    std::vector<Mask> below_;
};

/// Hypergraph embedding: one instance per nontrivial edge, multiplicity 1,
/// order by strict inclusion. kappa inverts it.
MultiComplex from_hypergraph(const Hypergraph& g);

/// Forget order and multiplicities: the supports of size >= 2, deduplicated.
Hypergraph kappa(const MultiComplex& c);

MultiComplex mc_product(const MultiComplex& c, const MultiComplex& d);

/// Instances with support inside X, on the compressed vertex set X.
MultiComplex mc_restrict(const MultiComplex& c, Mask X);

/// C|~ on the full vertex set: instances with support inside one block.
MultiComplex mc_partition_restrict(const MultiComplex& c, const SetPartition& p);

/// C/~: one vertex per block, multiplicities added; every instance survives
/// (totals are preserved); order transferred instance-wise.
MultiComplex mc_quotient(const MultiComplex& c, const SetPartition& p);

bool mc_connected(const MultiComplex& c);

/// Partitions whose blocks induce connected restrictions.
std::vector<SetPartition> mc_admissible_partitions(const MultiComplex& c);

/// Canonical representative of the isomorphism class. Capped at 6 vertices
/// and 6 instances.
struct MCCanonical {
    int n = 0;
    std::vector<std::vector<int>> mults;
    std::vector<Mask> below;

    auto operator<=>(const MCCanonical&) const = default;
    std::string to_string() const;
};

MCCanonical mc_canonical_form(const MultiComplex& c);
MultiComplex to_multicomplex(const MCCanonical& c);

using McSum = FormalSum<MCCanonical>;

MCCanonical mc_canonical_product(const MCCanonical& a, const MCCanonical& b);
McSum mc_as_sum(const MultiComplex& c);

/// Delta(C) = sum over X subset of V(C) of C|_X tensor C|_(V\X).
McSum mc_coproduct(const MultiComplex& c);

/// delta(C) = sum over admissible partitions of C/~ tensor C|~.
McSum mc_delta_contract(const MultiComplex& c);

mpq_class mc_counit_eps_delta(const MultiComplex& c);

/// Takeuchi antipode for (MC, Delta); order of the parts is immaterial, so
/// unordered partitions weighted by k! are used.
McSum mc_takeuchi(const MultiComplex& c);
McSum mc_takeuchi(const McSum& s);

/// Closed antipode: coefficients are the signed acyclic-orientation counts
/// of kappa(C/~).
McSum mc_antipode(const MultiComplex& c);

/// Eulerian idempotent via the connected spanning counts of kappa(C/~).
McSum mc_eulerian(const MultiComplex& c);
McSum mc_eulerian(const McSum& s);

RationalPolynomial mc_chromatic(const MultiComplex& c);

/// Apply kappa to every leg, producing a hypergraph sum.
HgSum kappa_legwise(const McSum& s);

/// Deterministic random multi-complex: rejection-sampled order over a random
/// sub-relation of multiset inclusion.
MultiComplex random_multicomplex(std::mt19937_64& rng, int max_vertices,
                                 int max_instances);

}  // namespace hyperhopf

#endif
