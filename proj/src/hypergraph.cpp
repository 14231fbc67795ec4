#include "hyperhopf/hypergraph.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace hyperhopf {

Caps& caps() {
    static Caps c = [] {
        Caps init;
        if (const char* s = std::getenv("HYPERHOPF_ENUM_CAP")) init.enumeration = std::atoi(s);
        if (const char* s = std::getenv("HYPERHOPF_ORIENT_CAP")) init.orientation = std::atoi(s);
        if (const char* s = std::getenv("HYPERHOPF_WORK_BOUND")) init.work_bound = std::atoll(s);
        return init;
    }();
    return c;
}

static void check_enum_cap(int n, const char* what) {
    if (n > caps().enumeration) {
        throw resource_error(std::string(what) + ": " + std::to_string(n) +
                             " vertices exceeds the enumeration cap of " +
                             std::to_string(caps().enumeration));
    }
}

Hypergraph::Hypergraph(std::vector<std::string> labels) : labels_(std::move(labels)) {
    std::set<std::string> seen(labels_.begin(), labels_.end());
    if (seen.size() != labels_.size())
        throw std::invalid_argument("duplicate vertex label");
    if (labels_.size() > 31) throw resource_error("more than 31 vertices unsupported");
}

Hypergraph::Hypergraph(std::vector<std::string> labels,
                       const std::vector<std::vector<std::string>>& edges)
    : Hypergraph(std::move(labels)) {
    for (const auto& e : edges) {
        Mask m = 0;
        for (const auto& lab : e) {
            int v = index_of(lab);
            if (v < 0) throw std::invalid_argument("edge vertex '" + lab + "' not in vertex set");
            if (m & (Mask(1) << v))
                throw std::invalid_argument("repeated vertex '" + lab + "' in edge (edges are sets)");
            m |= Mask(1) << v;
        }
        if (popcount(m) < 2)
            throw std::invalid_argument("nontrivial edges need at least 2 vertices");
        edges_.push_back(m);
    }
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
}

Hypergraph::Hypergraph(std::vector<std::string> labels, std::vector<Mask> edge_masks)
    : Hypergraph(std::move(labels)) {
    for (Mask m : edge_masks) {
        if ((m & ~full_mask()) != 0) throw std::invalid_argument("edge mask outside vertex set");
        if (popcount(m) >= 2) edges_.push_back(m);
    }
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
}

int Hypergraph::index_of(const std::string& label) const {
    for (int i = 0; i < num_vertices(); ++i)
        if (labels_[i] == label) return i;
    return -1;
}

std::string Hypergraph::to_string() const {
    std::ostringstream os;
    os << "{";
    for (int i = 0; i < num_vertices(); ++i) os << (i ? "," : "") << labels_[i];
    os << "; ";
    bool first = true;
    for (Mask e : edges_) {
        os << (first ? "" : " ") << "{";
        bool f2 = true;
        for (int v = 0; v < num_vertices(); ++v)
            if (e & (Mask(1) << v)) { os << (f2 ? "" : ",") << labels_[v]; f2 = false; }
        os << "}";
        first = false;
    }
    os << "}";
    return os.str();
}

SetPartition::SetPartition(std::vector<Mask> b) : blocks(std::move(b)) {
    for (Mask blk : blocks)
        if (blk == 0) throw std::invalid_argument("empty partition block");
    Mask seen = 0;
    for (Mask blk : blocks) {
        if (seen & blk) throw std::invalid_argument("overlapping partition blocks");
        seen |= blk;
    }
    std::sort(blocks.begin(), blocks.end(),
              [](Mask a, Mask b2) { return (a & -a) < (b2 & -b2); });
}

Mask SetPartition::ground() const {
    Mask g = 0;
    for (Mask b : blocks) g |= b;
    return g;
}

bool SetPartition::is_partition_of(Mask ground_mask) const { return ground() == ground_mask; }

int SetPartition::block_of(int v) const {
    for (int i = 0; i < num_blocks(); ++i)
        if (blocks[i] & (Mask(1) << v)) return i;
    return -1;
}

bool SetPartition::is_discrete() const {
    for (Mask b : blocks)
        if (popcount(b) != 1) return false;
    return true;
}

// Compressed relabeling: vertex i of the result is the i-th set bit of I.
static Hypergraph build_restricted(const Hypergraph& g, Mask I,
                                   const std::vector<Mask>& raw_edges) {
    std::vector<std::string> labels;
    std::vector<int> newindex(g.num_vertices(), -1);
    for (int v = 0; v < g.num_vertices(); ++v)
        if (I & (Mask(1) << v)) {
            newindex[v] = static_cast<int>(labels.size());
            labels.push_back(g.label(v));
        }
    std::vector<Mask> edges;
    for (Mask e : raw_edges) {
        Mask m = 0;
        for (int v = 0; v < g.num_vertices(); ++v)
            if (e & (Mask(1) << v)) m |= Mask(1) << newindex[v];
        edges.push_back(m);
    }
    return Hypergraph(std::move(labels), std::move(edges));
}

Hypergraph restrict(const Hypergraph& g, Mask I, RestrictMode mode) {
    if ((I & ~g.full_mask()) != 0)
        throw std::invalid_argument("restriction set is not a subset of the vertices");
    std::vector<Mask> kept;
    for (Mask e : g.edges()) {
        if (mode == RestrictMode::Subset) {
            if ((e & ~I) == 0) kept.push_back(e);
        } else {
            Mask c = e & I;
            if (popcount(c) >= 2) kept.push_back(c);
        }
    }
    return build_restricted(g, I, kept);
}

std::vector<Hypergraph> staircase_restrict(const Hypergraph& g,
                                           const std::vector<Mask>& blocks) {
    Mask seen = 0;
    for (Mask b : blocks) {
        if (b == 0) throw std::invalid_argument("staircase blocks must be nonempty");
        if (seen & b) throw std::invalid_argument("staircase blocks must be disjoint");
        seen |= b;
    }
    if (seen != g.full_mask())
        throw std::invalid_argument("staircase blocks must cover the vertex set");
    std::vector<Hypergraph> out;
    Mask prefix = 0;
    for (Mask b : blocks) {
        prefix |= b;
        std::vector<Mask> kept;
        for (Mask e : g.edges())
            if ((e & ~prefix) == 0 && popcount(e & b) >= 2) kept.push_back(e & b);
        out.push_back(build_restricted(g, b, kept));
    }
    return out;
}

Hypergraph disjoint_union(const Hypergraph& g, const Hypergraph& h) {
    std::set<std::string> used(g.labels().begin(), g.labels().end());
    std::vector<std::string> labels = g.labels();
    for (std::string lab : h.labels()) {
        while (used.count(lab)) lab += "'";
        used.insert(lab);
        labels.push_back(lab);
    }
    std::vector<Mask> edges = g.edges();
    for (Mask e : h.edges()) edges.push_back(e << g.num_vertices());
    return Hypergraph(std::move(labels), std::move(edges));
}

std::vector<Mask> component_masks(const Hypergraph& g) {
    int n = g.num_vertices();
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (Mask e : g.edges()) {
        int first = __builtin_ctz(e);
        for (int v = first + 1; v < n; ++v)
            if (e & (Mask(1) << v)) parent[find(v)] = find(first);
    }
    std::map<int, Mask> comp;
    for (int v = 0; v < n; ++v) comp[find(v)] |= Mask(1) << v;
    std::vector<Mask> out;
    for (auto& [root, m] : comp) out.push_back(m);
    std::sort(out.begin(), out.end(), [](Mask a, Mask b) { return (a & -a) < (b & -b); });
    return out;
}

bool is_connected(const Hypergraph& g) { return component_masks(g).size() <= 1; }

std::vector<Hypergraph> connected_components(const Hypergraph& g) {
    std::vector<Hypergraph> out;
    for (Mask m : component_masks(g)) out.push_back(restrict(g, m, RestrictMode::Subset));
    return out;
}

Hypergraph quotient(const Hypergraph& g, const SetPartition& p) {
    if (!p.is_partition_of(g.full_mask()))
        throw std::invalid_argument("quotient: not a partition of the vertex set");
    // block i keeps the label of its smallest vertex
    std::vector<std::string> labels;
    for (Mask b : p.blocks) labels.push_back(g.label(__builtin_ctz(b)));
    std::vector<Mask> edges;
    for (Mask e : g.edges()) {
        Mask img = 0;
        for (int i = 0; i < p.num_blocks(); ++i)
            if (e & p.blocks[i]) img |= Mask(1) << i;
        if (popcount(img) >= 2) edges.push_back(img);
    }
    return Hypergraph(std::move(labels), std::move(edges));
}

Hypergraph partition_restrict(const Hypergraph& g, const SetPartition& p,
                              RestrictMode mode) {
    if (!p.is_partition_of(g.full_mask()))
        throw std::invalid_argument("partition_restrict: not a partition of the vertex set");
    Hypergraph out;
    for (Mask b : p.blocks) out = disjoint_union(out, restrict(g, b, mode));
    return out;
}

void for_each_set_partition(int n, const std::function<void(const SetPartition&)>& fn) {
    check_enum_cap(n, "set partition enumeration");
    if (n == 0) {
        fn(SetPartition{});
        return;
    }
    // restricted growth strings: rgs[0]=0, rgs[i] <= 1+max(rgs[0..i-1])
    std::vector<int> rgs(n, 0);
    std::function<void(int, int)> rec = [&](int i, int maxv) {
        if (i == n) {
            std::vector<Mask> blocks(maxv + 1, 0);
            for (int v = 0; v < n; ++v) blocks[rgs[v]] |= Mask(1) << v;
            fn(SetPartition(std::move(blocks)));
            return;
        }
        for (int c = 0; c <= maxv + 1; ++c) {
            rgs[i] = c;
            rec(i + 1, std::max(maxv, c));
        }
    };
    rec(1, 0);
}

std::vector<SetPartition> enumerate_set_partitions(int n) {
    std::vector<SetPartition> out;
    for_each_set_partition(n, [&](const SetPartition& p) { out.push_back(p); });
    return out;
}

std::vector<SetPartition> admissible_partitions(const Hypergraph& g, RestrictMode mode) {
    check_enum_cap(g.num_vertices(), "admissible partition enumeration");
    std::vector<SetPartition> out;
    for_each_set_partition(g.num_vertices(), [&](const SetPartition& p) {
        for (Mask b : p.blocks)
            if (!is_connected(restrict(g, b, mode))) return;
        out.push_back(p);
    });
    return out;
}

Hypergraph gamma(const Hypergraph& g) {
    std::vector<Mask> pairs;
    for (Mask e : g.edges())
        for (int x = 0; x < g.num_vertices(); ++x)
            if (e & (Mask(1) << x))
                for (int y = x + 1; y < g.num_vertices(); ++y)
                    if (e & (Mask(1) << y)) pairs.push_back((Mask(1) << x) | (Mask(1) << y));
    return Hypergraph(g.labels(), std::move(pairs));
}

std::string Canonical::to_string() const {
    std::ostringstream os;
    os << "n" << n << ":";
    for (Mask e : edges) os << e << ",";
    return os.str();
}

Hypergraph to_hypergraph(const Canonical& c) {
    std::vector<std::string> labels;
    for (int i = 0; i < c.n; ++i) labels.push_back(std::to_string(i));
    return Hypergraph(std::move(labels), c.edges);
}

// Label-independent vertex invariant: sorted sizes of incident edges.
static std::vector<int> vertex_invariant(const Hypergraph& g, int v) {
    std::vector<int> sizes;
    for (Mask e : g.edges())
        if (e & (Mask(1) << v)) sizes.push_back(popcount(e));
    std::sort(sizes.begin(), sizes.end());
    return sizes;
}

Canonical canonical_form(const Hypergraph& g) {
    int n = g.num_vertices();
    check_enum_cap(n, "canonical form");
    // Group vertices by invariant; any isomorphism respects the groups, so
    // it suffices to minimize over group-preserving relabelings.
    std::map<std::vector<int>, std::vector<int>> groups;
    for (int v = 0; v < n; ++v) groups[vertex_invariant(g, v)].push_back(v);

    std::vector<int> order;  // vertices in group-sorted order
    std::vector<std::pair<int, int>> group_ranges;
    for (auto& [inv, vs] : groups) {
        group_ranges.emplace_back(static_cast<int>(order.size()),
                                  static_cast<int>(order.size() + vs.size()));
        for (int v : vs) order.push_back(v);
    }

    Canonical best;
    best.n = n;
    bool have = false;
    std::vector<int> newindex(n);
    std::function<void(size_t)> rec = [&](size_t gi) {
        if (gi == group_ranges.size()) {
            std::vector<Mask> edges;
            for (Mask e : g.edges()) {
                Mask m = 0;
                for (int v = 0; v < n; ++v)
                    if (e & (Mask(1) << v)) m |= Mask(1) << newindex[v];
                edges.push_back(m);
            }
            std::sort(edges.begin(), edges.end());
            if (!have || edges < best.edges) {
                best.edges = std::move(edges);
                have = true;
            }
            return;
        }
        auto [lo, hi] = group_ranges[gi];
        std::vector<int> perm(order.begin() + lo, order.begin() + hi);
        std::sort(perm.begin(), perm.end());
        do {
            for (int i = lo; i < hi; ++i) newindex[perm[i - lo]] = i;
            rec(gi + 1);
        } while (std::next_permutation(perm.begin(), perm.end()));
    };
    rec(0);
    if (!have) best.edges.clear();
    return best;
}

}  // namespace hyperhopf
