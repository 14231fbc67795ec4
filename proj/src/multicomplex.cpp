#include "hyperhopf/multicomplex.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "hyperhopf/invariants.hpp"
#include "hyperhopf/orientations.hpp"

namespace hyperhopf {

Mask EdgeInstance::support() const {
    Mask m = 0;
    for (size_t i = 0; i < mult.size(); ++i)
        if (mult[i] > 0) m |= Mask(1) << i;
    return m;
}

int EdgeInstance::total() const {
    int t = 0;
    for (int m : mult) t += m;
    return t;
}

// submultiset: pointwise multiplicity comparison
static bool contained(const std::vector<int>& a, const std::vector<int>& b) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

static void check_mc_caps(int n, int k) {
    if (n > caps().enumeration || n > 6 || k > 32)
        throw resource_error("multi-complex exceeds the size caps");
}

MultiComplex::MultiComplex(std::vector<std::string> labels)
    : MultiComplex(std::move(labels), {}, {}) {}

MultiComplex::MultiComplex(std::vector<std::string> labels,
                           std::vector<EdgeInstance> instances,
                           std::vector<Mask> below_relation)
    : labels_(std::move(labels)), instances_(std::move(instances)),
      below_(std::move(below_relation)) {
    int n = num_vertices();
    int k = num_instances();
    if (n > 31) throw resource_error("too many vertices");
    if (k > 32) throw resource_error("too many edge instances");
    {
        std::set<std::string> seen(labels_.begin(), labels_.end());
        if (int(seen.size()) != n) throw std::invalid_argument("duplicate vertex label");
    }
    std::set<std::string> ids;
    for (auto& e : instances_) {
        if (e.id.empty()) throw std::invalid_argument("empty edge-instance id");
        if (!ids.insert(e.id).second)
            throw std::invalid_argument("duplicate edge-instance id: " + e.id);
        if (int(e.mult.size()) != n)
            throw std::invalid_argument("multiplicity vector length mismatch");
        for (int m : e.mult)
            if (m < 0) throw std::invalid_argument("negative multiplicity");
        if (e.total() < 2)
            throw std::invalid_argument(
                "stored edge instance needs total multiplicity >= 2: " + e.id);
    }
    if (below_.empty()) below_.assign(k, 0);
    if (int(below_.size()) != k)
        throw std::invalid_argument("order relation size mismatch");
    Mask all = k ? (k == 32 ? ~Mask(0) : (Mask(1) << k) - 1) : 0;
    for (int i = 0; i < k; ++i) {
        if (below_[i] & ~all) throw std::invalid_argument("order refers to unknown instance");
        if (below_[i] >> i & 1) throw std::invalid_argument("order is not irreflexive");
    }
    // transitive closure
    for (bool changed = true; changed;) {
        changed = false;
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j)
                if ((below_[i] >> j & 1) && (below_[j] & ~below_[i])) {
                    below_[i] |= below_[j];
                    changed = true;
                }
    }
    for (int i = 0; i < k; ++i) {
        if (below_[i] >> i & 1)
            throw std::invalid_argument("order is not antisymmetric");
        for (int j = 0; j < k; ++j)
            if ((below_[i] >> j & 1) && !contained(instances_[j].mult, instances_[i].mult))
                throw std::invalid_argument("order violates multiset inclusion: " +
                                            instances_[j].id + " < " + instances_[i].id);
    }
}

int MultiComplex::index_of(const std::string& label) const {
    for (int i = 0; i < num_vertices(); ++i)
        if (labels_[i] == label) return i;
    return -1;
}

std::string MultiComplex::to_string() const {
    std::ostringstream out;
    out << "MC({";
    for (int i = 0; i < num_vertices(); ++i) out << (i ? "," : "") << labels_[i];
    out << "}";
    for (const auto& e : instances_) {
        out << ", " << e.id << ":{";
        bool first = true;
        for (int v = 0; v < num_vertices(); ++v)
            for (int m = 0; m < e.mult[v]; ++m) {
                out << (first ? "" : ",") << labels_[v];
                first = false;
            }
        out << "}";
    }
    out << ")";
    return out.str();
}

MultiComplex from_hypergraph(const Hypergraph& g) {
    int n = g.num_vertices();
    std::vector<EdgeInstance> inst;
    for (int i = 0; i < g.num_edges(); ++i) {
        EdgeInstance e;
        e.id = "e" + std::to_string(i);
        e.mult.assign(n, 0);
        for (int v = 0; v < n; ++v)
            if (g.edges()[i] >> v & 1) e.mult[v] = 1;
        inst.push_back(std::move(e));
    }
    std::vector<Mask> below(inst.size(), 0);
    for (size_t i = 0; i < inst.size(); ++i)
        for (size_t j = 0; j < inst.size(); ++j)
            if (i != j && g.edges()[j] != g.edges()[i] &&
                (g.edges()[j] & ~g.edges()[i]) == 0)
                below[i] |= Mask(1) << j;
    return MultiComplex(g.labels(), std::move(inst), std::move(below));
}

Hypergraph kappa(const MultiComplex& c) {
    std::vector<Mask> edges;
    for (const auto& e : c.instances())
        if (popcount(e.support()) >= 2) edges.push_back(e.support());
    return Hypergraph(c.labels(), std::move(edges));
}

MultiComplex mc_product(const MultiComplex& c, const MultiComplex& d) {
    std::vector<std::string> labels = c.labels();
    std::set<std::string> used(labels.begin(), labels.end());
    std::vector<std::string> dlabels;
    for (std::string l : d.labels()) {
        while (used.count(l)) l += "'";
        used.insert(l);
        labels.push_back(l);
        dlabels.push_back(l);
    }
    int nc = c.num_vertices(), nd = d.num_vertices();
    int kc = c.num_instances();
    std::vector<EdgeInstance> inst = c.instances();
    for (auto& e : inst) e.mult.resize(nc + nd, 0);
    std::set<std::string> ids;
    for (const auto& e : inst) ids.insert(e.id);
    for (const auto& e : d.instances()) {
        EdgeInstance f;
        f.id = e.id;
        while (ids.count(f.id)) f.id += "'";
        ids.insert(f.id);
        f.mult.assign(nc, 0);
        f.mult.insert(f.mult.end(), e.mult.begin(), e.mult.end());
        inst.push_back(std::move(f));
    }
    std::vector<Mask> below = c.below();
    below.resize(inst.size(), 0);
    for (int i = 0; i < d.num_instances(); ++i)
        below[kc + i] = Mask(d.below()[i]) << kc;
    return MultiComplex(std::move(labels), std::move(inst), std::move(below));
}

MultiComplex mc_restrict(const MultiComplex& c, Mask X) {
    if (X & ~c.full_mask()) throw std::invalid_argument("restriction outside V(C)");
    std::vector<int> new_index(c.num_vertices(), -1);
    std::vector<std::string> labels;
    for (int v = 0; v < c.num_vertices(); ++v)
        if (X >> v & 1) {
            new_index[v] = int(labels.size());
            labels.push_back(c.label(v));
        }
    std::vector<EdgeInstance> inst;
    std::vector<int> keep;
    for (int i = 0; i < c.num_instances(); ++i) {
        const auto& e = c.instances()[i];
        if (e.support() & ~X) continue;
        EdgeInstance f;
        f.id = e.id;
        f.mult.assign(labels.size(), 0);
        for (int v = 0; v < c.num_vertices(); ++v)
            if (e.mult[v]) f.mult[new_index[v]] = e.mult[v];
        keep.push_back(i);
        inst.push_back(std::move(f));
    }
    std::vector<Mask> below(inst.size(), 0);
    for (size_t a = 0; a < keep.size(); ++a)
        for (size_t b = 0; b < keep.size(); ++b)
            if (c.below()[keep[a]] >> keep[b] & 1) below[a] |= Mask(1) << b;
    return MultiComplex(std::move(labels), std::move(inst), std::move(below));
}

MultiComplex mc_partition_restrict(const MultiComplex& c, const SetPartition& p) {
    if (!p.is_partition_of(c.full_mask()))
        throw std::invalid_argument("partition does not cover V(C)");
    std::vector<EdgeInstance> inst;
    std::vector<int> keep;
    for (int i = 0; i < c.num_instances(); ++i) {
        Mask s = c.instances()[i].support();
        bool inside = false;
        for (Mask b : p.blocks)
            if ((s & ~b) == 0) { inside = true; break; }
        if (!inside) continue;
        keep.push_back(i);
        inst.push_back(c.instances()[i]);
    }
    std::vector<Mask> below(inst.size(), 0);
    for (size_t a = 0; a < keep.size(); ++a)
        for (size_t b = 0; b < keep.size(); ++b)
            if (c.below()[keep[a]] >> keep[b] & 1) below[a] |= Mask(1) << b;
    return MultiComplex(c.labels(), std::move(inst), std::move(below));
}

MultiComplex mc_quotient(const MultiComplex& c, const SetPartition& p) {
    if (!p.is_partition_of(c.full_mask()))
        throw std::invalid_argument("partition does not cover V(C)");
    int k = p.num_blocks();
    std::vector<std::string> labels(k);
    for (int b = 0; b < k; ++b)
        labels[b] = c.label(__builtin_ctz(p.blocks[b]));
    std::vector<EdgeInstance> inst;
    for (const auto& e : c.instances()) {
        EdgeInstance f;
        f.id = e.id;
        f.mult.assign(k, 0);
        for (int v = 0; v < c.num_vertices(); ++v)
            if (e.mult[v]) f.mult[p.block_of(v)] += e.mult[v];
        inst.push_back(std::move(f));  // totals are preserved, always >= 2
    }
    return MultiComplex(std::move(labels), std::move(inst), c.below());
}

bool mc_connected(const MultiComplex& c) { return is_connected(kappa(c)); }

std::vector<SetPartition> mc_admissible_partitions(const MultiComplex& c) {
    return admissible_partitions(kappa(c), RestrictMode::Subset);
}

std::string MCCanonical::to_string() const {
    std::ostringstream out;
    out << "mc[" << n;
    for (const auto& m : mults) {
        out << ";";
        for (size_t i = 0; i < m.size(); ++i) out << (i ? "," : "") << m[i];
    }
    out << "]";
    return out.str();
}

MCCanonical mc_canonical_form(const MultiComplex& c) {
    int n = c.num_vertices();
    int k = c.num_instances();
    check_mc_caps(n, k);
    if (k > 10) throw resource_error("canonical form is capped at 10 edge instances");

    MCCanonical best;
    bool have = false;
    std::vector<int> vperm(n);
    std::iota(vperm.begin(), vperm.end(), 0);
    do {
        // relabelled multiplicity vectors: new vertex i is old vperm[i]
        std::vector<std::vector<int>> mults(k, std::vector<int>(n));
        for (int e = 0; e < k; ++e)
            for (int v = 0; v < n; ++v)
                mults[e][v] = c.instances()[e].mult[vperm[v]];
        // instance orderings whose multiset sequence is sorted ascending:
        // sort once, then permute only within blocks of equal multisets
        std::vector<int> iperm(k);
        std::iota(iperm.begin(), iperm.end(), 0);
        std::sort(iperm.begin(), iperm.end(),
                  [&](int a, int b) { return mults[a] < mults[b]; });
        auto next_within_groups = [&]() {
            for (int hi = k; hi > 0;) {
                int lo = hi - 1;
                while (lo > 0 && mults[iperm[lo - 1]] == mults[iperm[hi - 1]]) --lo;
                if (std::next_permutation(iperm.begin() + lo, iperm.begin() + hi))
                    return true;
                hi = lo;
            }
            return false;
        };
        do {
            MCCanonical cand;
            cand.n = n;
            cand.mults.resize(k);
            cand.below.assign(k, 0);
            for (int i = 0; i < k; ++i) cand.mults[i] = mults[iperm[i]];
            for (int i = 0; i < k; ++i)
                for (int j = 0; j < k; ++j)
                    if (c.below()[iperm[i]] >> iperm[j] & 1)
                        cand.below[i] |= Mask(1) << j;
            if (!have || cand < best) {
                best = std::move(cand);
                have = true;
            }
        } while (next_within_groups());
    } while (std::next_permutation(vperm.begin(), vperm.end()));
    if (!have) {
        best.n = n;
    }
    return best;
}

MultiComplex to_multicomplex(const MCCanonical& c) {
    std::vector<std::string> labels(c.n);
    for (int v = 0; v < c.n; ++v) labels[v] = "v" + std::to_string(v);
    std::vector<EdgeInstance> inst(c.mults.size());
    for (size_t i = 0; i < c.mults.size(); ++i) {
        inst[i].id = "e" + std::to_string(i);
        inst[i].mult = c.mults[i];
    }
    return MultiComplex(std::move(labels), std::move(inst), c.below);
}

MCCanonical mc_canonical_product(const MCCanonical& a, const MCCanonical& b) {
    return mc_canonical_form(mc_product(to_multicomplex(a), to_multicomplex(b)));
}

McSum mc_as_sum(const MultiComplex& c) { return McSum::term({mc_canonical_form(c)}); }

McSum mc_coproduct(const MultiComplex& c) {
    check_mc_caps(c.num_vertices(), c.num_instances());
    McSum out;
    Mask full = c.full_mask();
    for (Mask I = 0;; ++I) {
        I &= full;
        out.add({mc_canonical_form(mc_restrict(c, I)),
                 mc_canonical_form(mc_restrict(c, full & ~I))},
                1);
        if (I == full) break;
    }
    return out;
}

McSum mc_delta_contract(const MultiComplex& c) {
    check_mc_caps(c.num_vertices(), c.num_instances());
    McSum out;
    if (c.empty()) {
        out.add({MCCanonical{}, MCCanonical{}}, 1);
        return out;
    }
    for (const SetPartition& p : mc_admissible_partitions(c))
        out.add({mc_canonical_form(mc_quotient(c, p)),
                 mc_canonical_form(mc_partition_restrict(c, p))},
                1);
    return out;
}

mpq_class mc_counit_eps_delta(const MultiComplex& c) {
    // 1 exactly when every instance sits on a single vertex, i.e. kappa(c)
    // has no edges; such instances survive contraction but are killed here.
    for (const EdgeInstance& e : c.instances())
        if (popcount(e.support()) >= 2) return 0;
    return 1;
}

McSum mc_takeuchi(const MultiComplex& c) {
    check_mc_caps(c.num_vertices(), c.num_instances());
    if (c.empty()) return mc_as_sum(c);
    McSum out;
    for_each_set_partition(c.num_vertices(), [&](const SetPartition& p) {
        int k = p.num_blocks();
        mpq_class coeff = k % 2 ? -1 : 1;
        for (int i = 2; i <= k; ++i) coeff *= i;
        out.add({mc_canonical_form(mc_partition_restrict(c, p))}, coeff);
    });
    return out;
}

McSum mc_takeuchi(const McSum& s) {
    McSum out;
    for (const auto& [w, c] : s.terms()) {
        if (w.size() != 1) throw std::invalid_argument("antipode expects degree-1 sums");
        out = out + mc_takeuchi(to_multicomplex(w[0])) * c;
    }
    return out;
}

McSum mc_antipode(const MultiComplex& c) {
    check_mc_caps(c.num_vertices(), c.num_instances());
    McSum out;
    for (const SetPartition& p : mc_admissible_partitions(c)) {
        mpq_class coeff = long(orientation_sums(kappa(mc_quotient(c, p))).signed_all);
        out.add({mc_canonical_form(mc_partition_restrict(c, p))}, coeff);
    }
    return out;
}

McSum mc_eulerian(const MultiComplex& c) {
    check_mc_caps(c.num_vertices(), c.num_instances());
    McSum out;
    for (const SetPartition& p : mc_admissible_partitions(c)) {
        Hypergraph q = kappa(mc_quotient(c, p));
        if (!is_connected(q)) continue;
        SpanningCountTable t = spanning_counts(q);
        mpq_class coeff = 0;
        for (const auto& [key, v] : t.counts)
            if (key.first == 1) coeff += (key.second % 2 ? -1 : 1) * mpq_class(long(v));
        out.add({mc_canonical_form(mc_partition_restrict(c, p))}, coeff);
    }
    return out;
}

McSum mc_eulerian(const McSum& s) {
    McSum out;
    for (const auto& [w, c] : s.terms()) {
        if (w.size() != 1)
            throw std::invalid_argument("eulerian idempotent expects degree-1 sums");
        out = out + mc_eulerian(to_multicomplex(w[0])) * c;
    }
    return out;
}

RationalPolynomial mc_chromatic(const MultiComplex& c) {
    return chromatic(kappa(c), ChromaticVariant::Subset);
}

HgSum kappa_legwise(const McSum& s) {
    HgSum out;
    for (const auto& [w, c] : s.terms()) {
        TensorWord hw;
        for (const MCCanonical& leg : w)
            hw.push_back(canonical_form(kappa(to_multicomplex(leg))));
        out.add(std::move(hw), c);
    }
    return out;
}

MultiComplex random_multicomplex(std::mt19937_64& rng, int max_vertices,
                                 int max_instances) {
    auto uniform = [&](int lo, int hi) {
        return lo + int(rng() % std::uint64_t(hi - lo + 1));
    };
    while (true) {
        int n = uniform(0, max_vertices);
        int k = n == 0 ? 0 : uniform(0, max_instances);
        std::vector<std::string> labels(n);
        for (int v = 0; v < n; ++v) labels[v] = std::string(1, char('a' + v));
        std::vector<EdgeInstance> inst(k);
        for (int i = 0; i < k; ++i) {
            inst[i].id = "e" + std::to_string(i);
            inst[i].mult.assign(n, 0);
            while (inst[i].total() < 2)
                inst[i].mult[uniform(0, n - 1)] += 1;
            // occasionally grow the multiset further
            int extra = uniform(0, 2);
            for (int t = 0; t < extra; ++t) inst[i].mult[uniform(0, n - 1)] += 1;
        }
        std::vector<Mask> below(k, 0);
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) {
                if (i == j || !contained(inst[j].mult, inst[i].mult)) continue;
                if (inst[j].mult == inst[i].mult && j > i) continue;  // one direction
                if (rng() & 1) below[i] |= Mask(1) << j;
            }
        try {
            return MultiComplex(std::move(labels), std::move(inst), std::move(below));
        } catch (const std::invalid_argument&) {
            continue;  // antisymmetry failure after closure; resample
        }
    }
}

}  // namespace hyperhopf
