#include "hyperhopf/generate.hpp"

#include <algorithm>
#include <set>

namespace hyperhopf {

Hypergraph random_hypergraph(std::mt19937_64& rng, int num_vertices, int max_edges) {
    if (num_vertices > 20) throw resource_error("random_hypergraph: too many vertices");
    std::vector<std::string> labels(num_vertices);
    for (int v = 0; v < num_vertices; ++v) labels[v] = std::string(1, char('a' + v));
    std::vector<Mask> pool;
    Mask full = num_vertices == 0 ? 0 : (Mask(1) << num_vertices) - 1;
    for (Mask e = 3; e <= full; ++e)
        if (popcount(e) >= 2) pool.push_back(e);
    for (size_t i = pool.size(); i > 1; --i)
        std::swap(pool[i - 1], pool[rng() % i]);
    int want = pool.empty() ? 0 : int(rng() % std::uint64_t(max_edges + 1));
    want = std::min<int>(want, int(pool.size()));
    pool.resize(want);
    return Hypergraph(std::move(labels), std::move(pool));
}

std::vector<Canonical> all_hypergraphs(int n, int max_edges) {
    if (n > 4) throw resource_error("exhaustive class enumeration is limited to n <= 4");
    std::vector<std::string> labels(n);
    for (int v = 0; v < n; ++v) labels[v] = std::string(1, char('a' + v));
    std::vector<Mask> pool;
    Mask full = n == 0 ? 0 : (Mask(1) << n) - 1;
    for (Mask e = 3; e <= full; ++e)
        if (popcount(e) >= 2) pool.push_back(e);
    std::set<Canonical> classes;
    int m = int(pool.size());
    for (std::uint64_t sub = 0; sub < (std::uint64_t(1) << m); ++sub) {
        if (max_edges >= 0 && popcount(Mask(sub & 0xffffffffu)) + popcount(Mask(sub >> 32)) > max_edges)
            continue;
        std::vector<Mask> edges;
        for (int i = 0; i < m; ++i)
            if (sub >> i & 1) edges.push_back(pool[i]);
        classes.insert(canonical_form(Hypergraph(labels, std::move(edges))));
    }
    return {classes.begin(), classes.end()};
}

std::vector<Canonical> all_hypergraphs(int n) { return all_hypergraphs(n, -1); }

std::vector<Canonical> all_hypergraphs_up_to(int n) {
    std::vector<Canonical> out;
    for (int i = 0; i <= n; ++i) {
        auto part = all_hypergraphs(i);
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

Hypergraph t_n(int n) {
    std::vector<std::string> labels(n);
    for (int v = 0; v < n; ++v) labels[v] = std::string(1, char('a' + v));
    if (n < 2) return Hypergraph(std::move(labels));
    return Hypergraph(std::move(labels), std::vector<Mask>{(Mask(1) << n) - 1});
}

}  // namespace hyperhopf
