#include "hyperhopf/coproducts.hpp"

#include <stdexcept>

namespace hyperhopf {

static void check_cap(const Hypergraph& g, const char* what) {
    if (g.num_vertices() > caps().enumeration)
        throw resource_error(std::string(what) + ": vertex count exceeds the enumeration cap");
}

HgSum coproduct_pair(const Hypergraph& g, CoproductMode mode) {
    check_cap(g, "coproduct");
    HgSum out;
    Mask full = g.full_mask();
    for (Mask I = 0;; ++I) {
        I &= full;
        out.add({canonical_form(restrict(g, I, mode.left)),
                 canonical_form(restrict(g, full & ~I, mode.right))},
                1);
        if (I == full) break;
    }
    return out;
}

std::vector<Hypergraph> iterated_factors(const Hypergraph& g, CoproductMode mode,
                                         const std::vector<Mask>& parts) {
    std::vector<Hypergraph> out;
    Mask suffix = 0;
    for (const Mask p : parts) suffix |= p;
    for (const Mask p : parts) {
        Hypergraph h = restrict(g, suffix, mode.right);
        // translate p into the compressed vertex indices of h
        Mask pc = 0;
        for (int v = 0, idx = 0; v < g.num_vertices(); ++v)
            if (suffix >> v & 1) {
                if (p >> v & 1) pc |= Mask(1) << idx;
                ++idx;
            }
        out.push_back(restrict(h, pc, mode.left));
        suffix &= ~p;
    }
    return out;
}

HgSum coproduct_iterated(const Hypergraph& g, CoproductMode mode, int k) {
    if (k < 1) throw std::invalid_argument("coproduct_iterated: k must be >= 1");
    check_cap(g, "iterated coproduct");
    int n = g.num_vertices();
    int legs = k + 1;
    HgSum out;
    std::vector<int> assign(n, 0);
    std::vector<Mask> parts(legs, 0);
    while (true) {
        for (auto& p : parts) p = 0;
        for (int v = 0; v < n; ++v) parts[assign[v]] |= Mask(1) << v;
        TensorWord w;
        for (const Hypergraph& f : iterated_factors(g, mode, parts))
            w.push_back(canonical_form(f));
        out.add(std::move(w), 1);
        int i = 0;
        while (i < n && assign[i] == legs - 1) assign[i++] = 0;
        if (i == n) break;
        ++assign[i];
    }
    return out;
}

HgSum reduced_coproduct(const Hypergraph& g, CoproductMode mode) {
    if (g.empty())
        throw std::invalid_argument("reduced coproduct is only defined on nonempty hypergraphs");
    HgSum out = coproduct_pair(g, mode);
    Canonical cg = canonical_form(g);
    out.add({cg, Canonical{}}, -1);
    out.add({Canonical{}, cg}, -1);
    return out;
}

HgSum delta_contract(const Hypergraph& g, RestrictMode mode) {
    check_cap(g, "contraction-extraction coproduct");
    HgSum out;
    if (g.empty()) {
        out.add({Canonical{}, Canonical{}}, 1);
        return out;
    }
    for (const SetPartition& p : admissible_partitions(g, mode))
        out.add({canonical_form(quotient(g, p)),
                 canonical_form(partition_restrict(g, p, mode))},
                1);
    return out;
}

mpq_class counit_eps(const TensorWord& w) {
    for (const Canonical& c : w)
        if (c.n != 0) return 0;
    return 1;
}

mpq_class counit_eps(const HgSum& s) {
    mpq_class out = 0;
    for (const auto& [w, c] : s.terms()) out += c * counit_eps(w);
    return out;
}

mpq_class counit_eps_delta(const Hypergraph& g) {
    return g.has_nontrivial_edge() ? 0 : 1;
}

std::optional<AxiomId> axiom_from_name(const std::string& name) {
    if (name == "coassoc") return AxiomId::Coassoc;
    if (name == "multiplicativity") return AxiomId::Multiplicativity;
    if (name == "coopposite") return AxiomId::Coopposite;
    if (name == "cocommutativity") return AxiomId::Cocommutativity;
    if (name == "delta-coassoc") return AxiomId::DeltaCoassoc;
    if (name == "cointeraction") return AxiomId::Cointeraction;
    if (name == "counit") return AxiomId::CounitLaws;
    return std::nullopt;
}

HgSum m_13_24(const HgSum& s) {
    return s.permute_legs({0, 2, 1, 3}).merge_legs(2, 4, canonical_product);
}

static AxiomReport compare(HgSum lhs, HgSum rhs, const std::string& detail) {
    AxiomReport r;
    r.ok = lhs == rhs;
    r.lhs = std::move(lhs);
    r.rhs = std::move(rhs);
    if (!r.ok) r.detail = detail;
    return r;
}

AxiomReport check_axiom(const Hypergraph& g, AxiomId which, CoproductMode mode) {
    auto delta_pair = [&](const Canonical& c) { return coproduct_pair(to_hypergraph(c), mode); };
    auto delta_contr = [&](const Canonical& c) {
        return delta_contract(to_hypergraph(c), mode.left);
    };

    switch (which) {
        case AxiomId::Coassoc: {
            HgSum d = coproduct_pair(g, mode);
            return compare(d.map_leg(0, delta_pair), d.map_leg(1, delta_pair),
                           "(Δ⊗Id)∘Δ vs (Id⊗Δ)∘Δ");
        }
        case AxiomId::DeltaCoassoc: {
            HgSum d = delta_contract(g, mode.left);
            return compare(d.map_leg(0, delta_contr), d.map_leg(1, delta_contr),
                           "(δ⊗Id)∘δ vs (Id⊗δ)∘δ");
        }
        case AxiomId::Multiplicativity: {
            // split G into its components two ways and compare Δ(GH) with Δ(G)Δ(H)
            auto comps = component_masks(g);
            if (comps.size() < 2) {
                // product with T_1 as a degenerate but still meaningful split
                Hypergraph h = disjoint_union(g, Hypergraph({"z"}));
                HgSum lhs = coproduct_pair(h, mode);
                HgSum rhs = coproduct_pair(g, mode).multiply(
                    coproduct_pair(Hypergraph({"z"}), mode), canonical_product);
                AxiomReport r1 = compare(lhs, rhs, "Δ(G·T_1) vs Δ(G)Δ(T_1)");
                if (!r1.ok) return r1;
                HgSum dl = delta_contract(h, mode.left);
                HgSum dr = delta_contract(g, mode.left)
                               .multiply(delta_contract(Hypergraph({"z"}), mode.left),
                                         canonical_product);
                return compare(dl, dr, "δ(G·T_1) vs δ(G)δ(T_1)");
            }
            Mask first = comps[0];
            Hypergraph a = restrict(g, first, RestrictMode::Subset);
            Hypergraph b = restrict(g, g.full_mask() & ~first, RestrictMode::Subset);
            HgSum lhs = coproduct_pair(g, mode);
            HgSum rhs =
                coproduct_pair(a, mode).multiply(coproduct_pair(b, mode), canonical_product);
            AxiomReport r1 = compare(lhs, rhs, "Δ(GH) vs Δ(G)Δ(H)");
            if (!r1.ok) return r1;
            HgSum dl = delta_contract(g, mode.left);
            HgSum dr = delta_contract(a, mode.left)
                           .multiply(delta_contract(b, mode.left), canonical_product);
            return compare(dl, dr, "δ(GH) vs δ(G)δ(H)");
        }
        case AxiomId::Coopposite:
            return compare(coproduct_pair(g, kCapSubset).permute_legs({1, 0}),
                           coproduct_pair(g, kSubsetCap), "swap∘Δ^(∩,⊂) vs Δ^(⊂,∩)");
        case AxiomId::Cocommutativity: {
            HgSum d = coproduct_pair(g, mode);
            return compare(d.permute_legs({1, 0}), d, "swap∘Δ vs Δ");
        }
        case AxiomId::Cointeraction: {
            HgSum lhs = delta_contract(g, mode.left).map_leg(0, delta_pair);
            HgSum rhs = m_13_24(
                coproduct_pair(g, mode).map_leg(1, delta_contr).map_leg(0, delta_contr));
            return compare(lhs, rhs, "(Δ⊗Id)∘δ vs m_{1,3,24}∘(δ⊗δ)∘Δ");
        }
        case AxiomId::CounitLaws: {
            Canonical cg = canonical_form(g);
            HgSum id1 = HgSum::term({cg});
            HgSum d = coproduct_pair(g, mode);
            HgSum left, right;
            for (const auto& [w, c] : d.terms()) {
                left.add({w[1]}, c * counit_eps(TensorWord{w[0]}));
                right.add({w[0]}, c * counit_eps(TensorWord{w[1]}));
            }
            if (!(left == id1)) return compare(left, id1, "(ε⊗Id)∘Δ vs Id");
            if (!(right == id1)) return compare(right, id1, "(Id⊗ε)∘Δ vs Id");
            HgSum dd = delta_contract(g, mode.left);
            HgSum dleft, dright;
            for (const auto& [w, c] : dd.terms()) {
                dleft.add({w[1]}, c * counit_eps_delta(to_hypergraph(w[0])));
                dright.add({w[0]}, c * counit_eps_delta(to_hypergraph(w[1])));
            }
            if (!(dleft == id1)) return compare(dleft, id1, "(ε_δ⊗Id)∘δ vs Id");
            return compare(dright, id1, "(Id⊗ε_δ)∘δ vs Id");
        }
    }
    throw std::logic_error("unknown axiom");
}

}  // namespace hyperhopf
