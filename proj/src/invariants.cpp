#include "hyperhopf/invariants.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "hyperhopf/coproducts.hpp"

namespace hyperhopf {

std::optional<ChromaticVariant> chromatic_variant_from_name(const std::string& name) {
    if (name == "subset") return ChromaticVariant::Subset;
    if (name == "cap") return ChromaticVariant::Cap;
    if (name == "mixed") return ChromaticVariant::Mixed;
    return std::nullopt;
}

RestrictMode restrict_mode_of(ChromaticVariant v) {
    switch (v) {
        case ChromaticVariant::Subset: return RestrictMode::Subset;
        case ChromaticVariant::Cap: return RestrictMode::Cap;
        case ChromaticVariant::Mixed: break;
    }
    throw std::invalid_argument("the mixed variant has no single restriction mode");
}

// Block validity inside one color class: subset forbids a contained edge,
// cap forbids two vertices of one edge sharing the class.
static bool block_ok(const Hypergraph& g, Mask block, ChromaticVariant v) {
    for (Mask e : g.edges()) {
        Mask hit = e & block;
        if (v == ChromaticVariant::Subset ? hit == e : popcount(hit) >= 2) return false;
    }
    return true;
}

// Ordered color classes, ascending color value: every edge must meet its
// topmost class in exactly one vertex.
static bool ordered_blocks_ok(const Hypergraph& g, const std::vector<Mask>& blocks) {
    for (Mask e : g.edges()) {
        for (int i = static_cast<int>(blocks.size()) - 1; i >= 0; --i) {
            Mask hit = e & blocks[i];
            if (hit == 0) continue;
            if (popcount(hit) != 1) return false;
            break;
        }
    }
    return true;
}

RationalPolynomial chromatic(const Hypergraph& g, ChromaticVariant v) {
    if (g.num_vertices() > caps().enumeration)
        throw resource_error("chromatic: vertex count exceeds the enumeration cap");
    int n = g.num_vertices();
    std::vector<Rational> hilbert_coeffs(n + 1, 0);
    for_each_set_partition(n, [&](const SetPartition& p) {
        int k = p.num_blocks();
        if (v == ChromaticVariant::Mixed) {
            for (Mask b : p.blocks)
                if (!block_ok(g, b, ChromaticVariant::Subset)) return;
            std::vector<int> order(k);
            std::iota(order.begin(), order.end(), 0);
            long long good = 0;
            do {
                std::vector<Mask> blocks(k);
                for (int i = 0; i < k; ++i) blocks[i] = p.blocks[order[i]];
                if (ordered_blocks_ok(g, blocks)) ++good;
            } while (std::next_permutation(order.begin(), order.end()));
            hilbert_coeffs[k] += long(good);
        } else {
            for (Mask b : p.blocks)
                if (!block_ok(g, b, v)) return;
            Rational fact = 1;
            for (int i = 2; i <= k; ++i) fact *= i;
            hilbert_coeffs[k] += fact;
        }
    });
    return from_hilbert_basis(hilbert_coeffs);
}

RationalPolynomial chromatic(const HgSum& s, ChromaticVariant v) {
    RationalPolynomial out;
    for (const auto& [w, c] : s.terms()) {
        if (w.size() != 1) throw std::invalid_argument("chromatic expects degree-1 sums");
        out += chromatic(to_hypergraph(w[0]), v) * c;
    }
    return out;
}

long long coloring_oracle(const Hypergraph& g, int colors, ChromaticVariant v) {
    if (colors < 0) throw std::invalid_argument("coloring_oracle: negative color count");
    int n = g.num_vertices();
    if (n == 0) return 1;
    if (colors == 0) return 0;
    double steps = std::pow(double(colors), n) * std::max(1, g.num_edges());
    if (steps > double(caps().work_bound))
        throw resource_error("coloring_oracle: work bound exceeded");

    std::vector<int> color(n, 0);
    long long count = 0;
    while (true) {
        bool ok = true;
        for (Mask e : g.edges()) {
            int lo = -1, hi = -1, hi_mult = 0;
            bool distinct = true;
            std::vector<bool> seen(colors, false);
            for (int vtx = 0; vtx < n; ++vtx) {
                if (!(e >> vtx & 1)) continue;
                int c = color[vtx];
                if (seen[c]) distinct = false;
                seen[c] = true;
                if (lo < 0) lo = hi = c, hi_mult = 1;
                else if (c > hi) hi = c, hi_mult = 1;
                else if (c == hi) ++hi_mult;
                if (c < lo) lo = c;
            }
            bool pass = v == ChromaticVariant::Subset ? lo != hi
                      : v == ChromaticVariant::Cap    ? distinct
                                                      : hi_mult == 1;
            if (!pass) { ok = false; break; }
        }
        if (ok) ++count;
        int i = 0;
        while (i < n && color[i] == colors - 1) color[i++] = 0;
        if (i == n) break;
        ++color[i];
    }
    return count;
}

RationalPolynomial graph_chromatic(const Hypergraph& graph) {
    for (Mask e : graph.edges())
        if (popcount(e) != 2)
            throw std::invalid_argument("graph_chromatic expects a simple graph");
    static std::map<Canonical, RationalPolynomial> memo;
    std::function<RationalPolynomial(const Hypergraph&)> rec =
        [&](const Hypergraph& g) -> RationalPolynomial {
        if (!g.has_nontrivial_edge())
            return RationalPolynomial::monomial(g.num_vertices());
        Canonical key = canonical_form(g);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
        Mask e = g.edges().front();
        std::vector<Mask> rest(g.edges().begin() + 1, g.edges().end());
        Hypergraph deleted(g.labels(), rest);
        SetPartition p;
        for (int vtx = 0; vtx < g.num_vertices(); ++vtx)
            if (!(e >> vtx & 1)) p.blocks.push_back(Mask(1) << vtx);
        p.blocks.push_back(e);
        p = SetPartition(p.blocks);
        RationalPolynomial out = rec(deleted) - rec(quotient(g, p));
        memo.emplace(std::move(key), out);
        return out;
    };
    return rec(graph);
}

RationalPolynomial chromatic_via_gamma(const Hypergraph& g) {
    return graph_chromatic(gamma(g));
}

RationalPolynomial p_zero(const Hypergraph& g) {
    return RationalPolynomial::monomial(g.num_vertices());
}

long long SpanningCountTable::total() const {
    long long t = 0;
    for (const auto& [k, v] : counts) t += v;
    return t;
}

SpanningCountTable spanning_counts(const Hypergraph& g) {
    int m = g.num_edges();
    int n = g.num_vertices();
    if (m >= 40 || (double(1LL << m) * std::max(1, m) > double(caps().work_bound)))
        throw resource_error("spanning_counts: work bound exceeded");
    SpanningCountTable table;
    std::vector<int> parent(n);
    for (std::uint64_t sub = 0; sub < (std::uint64_t(1) << m); ++sub) {
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](int x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        int comps = n;
        for (int i = 0; i < m; ++i) {
            if (!(sub >> i & 1)) continue;
            Mask e = g.edges()[i];
            int first = -1;
            for (int vtx = 0; vtx < n; ++vtx) {
                if (!(e >> vtx & 1)) continue;
                if (first < 0) { first = find(vtx); continue; }
                int r = find(vtx);
                if (r != first) { parent[r] = first; --comps; }
            }
        }
        ++table.counts[{comps, popcount(Mask(sub))}];
    }
    return table;
}

Character lambda_character(RestrictMode mode) {
    return character_inverse(lambda_zero(), mode);
}

Character lambda_subset_closed() {
    return Character([](const Hypergraph& g) {
        // g is connected, so only the connected spanning subsets contribute
        SpanningCountTable t = spanning_counts(g);
        mpq_class out = 0;
        for (const auto& [k, v] : t.counts)
            if (k.first == 1) out += (k.second % 2 ? -1 : 1) * mpq_class(long(v));
        return out;
    });
}

RationalPolynomial chromatic_via_lambda(const Hypergraph& g, RestrictMode mode) {
    Character lam = lambda_character(mode);
    RationalPolynomial out;
    for (const SetPartition& p : admissible_partitions(g, mode))
        out += RationalPolynomial::monomial(p.num_blocks(),
                                            lam(partition_restrict(g, p, mode)));
    return out;
}

std::vector<long long> coefficients_via_counts(const Hypergraph& g) {
    SpanningCountTable t = spanning_counts(g);
    std::vector<long long> out(g.num_vertices() + 1, 0);
    for (const auto& [k, v] : t.counts)
        out[k.first] += (k.second % 2 ? -v : v);
    return out;
}

HgSum eulerian_idempotent(const Hypergraph& g) {
    Character lam = lambda_subset_closed();
    HgSum out;
    for (const SetPartition& p : admissible_partitions(g, RestrictMode::Subset)) {
        Hypergraph q = quotient(g, p);
        if (!is_connected(q)) continue;  // disconnected quotients contribute 0
        SpanningCountTable t = spanning_counts(q);
        mpq_class c = 0;
        for (const auto& [k, v] : t.counts)
            if (k.first == 1) c += (k.second % 2 ? -1 : 1) * mpq_class(long(v));
        out.add({canonical_form(partition_restrict(g, p, RestrictMode::Subset))}, c);
    }
    return out;
}

HgSum eulerian_idempotent(const HgSum& s) {
    HgSum out;
    for (const auto& [w, c] : s.terms()) {
        if (w.size() != 1)
            throw std::invalid_argument("eulerian_idempotent expects degree-1 sums");
        out = out + eulerian_idempotent(to_hypergraph(w[0])) * c;
    }
    return out;
}

}  // namespace hyperhopf
