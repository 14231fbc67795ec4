#include "hyperhopf/antipode.hpp"

#include <algorithm>
#include <numeric>

#include "hyperhopf/orientations.hpp"

namespace hyperhopf {

HgSum takeuchi_antipode(const Hypergraph& g, CoproductMode mode) {
    if (g.num_vertices() > caps().enumeration)
        throw resource_error("antipode: vertex count exceeds the enumeration cap");
    if (g.empty()) return as_sum(g);
    HgSum out;
    for_each_set_partition(g.num_vertices(), [&](const SetPartition& p) {
        int k = p.num_blocks();
        std::vector<int> order(k);
        std::iota(order.begin(), order.end(), 0);
        do {
            std::vector<Mask> parts(k);
            for (int i = 0; i < k; ++i) parts[i] = p.blocks[order[i]];
            Hypergraph prod;
            for (const Hypergraph& f : iterated_factors(g, mode, parts))
                prod = disjoint_union(prod, f);
            out.add({canonical_form(prod)}, k % 2 ? -1 : 1);
        } while (std::next_permutation(order.begin(), order.end()));
    });
    return out;
}

HgSum takeuchi_antipode(const HgSum& s, CoproductMode mode) {
    HgSum out;
    for (const auto& [w, c] : s.terms()) {
        if (w.size() != 1) throw std::invalid_argument("antipode expects degree-1 sums");
        out = out + takeuchi_antipode(to_hypergraph(w[0]), mode) * c;
    }
    return out;
}

HgSum antipode_closed(const Hypergraph& g, RestrictMode mode) {
    if (g.num_vertices() > caps().enumeration)
        throw resource_error("antipode: vertex count exceeds the enumeration cap");
    HgSum out;
    for (const SetPartition& p : admissible_partitions(g, mode)) {
        Hypergraph q = quotient(g, p);
        mpq_class c;
        if (mode == RestrictMode::Subset) {
            c = long(orientation_sums(q).signed_all);
        } else {
            c = long(stanley_count(q));
            if (p.num_blocks() % 2) c = -c;
        }
        out.add({canonical_form(partition_restrict(g, p, mode))}, c);
    }
    return out;
}

HgSum antipode_mixed(const Hypergraph& g) {
    if (g.empty())
        throw std::invalid_argument("the mixed antipode formula needs a nonempty hypergraph");
    if (g.num_vertices() > caps().enumeration)
        throw resource_error("antipode: vertex count exceeds the enumeration cap");
    int n = g.num_vertices();
    int m = g.num_edges();
    HgSum out;
    for_each_set_partition(n, [&](const SetPartition& p) {
        int k = p.num_blocks();
        // candidate blocks for theta(e): the blocks meeting e
        std::vector<std::vector<int>> cands(m);
        for (int i = 0; i < m; ++i)
            for (int b = 0; b < k; ++b)
                if (g.edges()[i] & p.blocks[b]) cands[i].push_back(b);
        std::vector<int> pick(m, 0);
        while (true) {
            std::vector<Mask> new_edges;
            for (int i = 0; i < m; ++i) {
                Mask cut = g.edges()[i] & p.blocks[cands[i][pick[i]]];
                if (popcount(cut) >= 2) new_edges.push_back(cut);
            }
            Hypergraph cut_graph(g.labels(), new_edges);

            if (component_masks(cut_graph) == p.blocks) {
                // block digraph: arc pi -> theta(e) for every other block meeting e
                std::vector<Mask> succ(k, 0);
                for (int i = 0; i < m; ++i) {
                    int target = cands[i][pick[i]];
                    for (int b : cands[i])
                        if (b != target) succ[b] |= Mask(1) << target;
                }
                Mask alive = k ? (Mask(1) << k) - 1 : 0;
                bool progress = true;
                while (alive && progress) {
                    progress = false;
                    for (int b = 0; b < k; ++b)
                        if ((alive >> b & 1) && !(succ[b] & alive)) {
                            alive &= ~(Mask(1) << b);
                            progress = true;
                        }
                }
                if (!alive) out.add({canonical_form(cut_graph)}, k % 2 ? -1 : 1);
            }

            int i = 0;
            while (i < m && pick[i] + 1 == int(cands[i].size())) pick[i++] = 0;
            if (i == m) break;
            ++pick[i];
        }
    });
    return out;
}

AntipodeCheck verify_antipode(const Hypergraph& g, CoproductMode mode) {
    auto s_map = [&](const Canonical& c) {
        return takeuchi_antipode(to_hypergraph(c), mode);
    };
    HgSum d = coproduct_pair(g, mode);
    HgSum unit_scaled = HgSum::term(unit_word(1), counit_eps(as_sum(g)));
    HgSum left = d.map_leg(0, s_map).merge_legs(0, 2, canonical_product);
    if (!(left == unit_scaled)) return {false, "m(S x Id)Delta != eta eps"};
    HgSum right = d.map_leg(1, s_map).merge_legs(0, 2, canonical_product);
    if (!(right == unit_scaled)) return {false, "m(Id x S)Delta != eta eps"};
    if (!(takeuchi_antipode(takeuchi_antipode(g, mode), mode) == as_sum(g)))
        return {false, "S(S(G)) != G"};
    return {};
}

}  // namespace hyperhopf
