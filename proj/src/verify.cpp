#include "hyperhopf/verify.hpp"

#include <algorithm>

#include "hyperhopf/antipode.hpp"
#include "hyperhopf/generate.hpp"
#include "hyperhopf/invariants.hpp"
#include "hyperhopf/orientations.hpp"

namespace hyperhopf {

namespace {

const CoproductMode kAllModes[] = {kSubsetSubset, kCapCap, kCapSubset, kSubsetCap};
const char* mode_name(RestrictMode m) { return m == RestrictMode::Subset ? "subset" : "cap"; }
std::string mode_name(CoproductMode m) {
    return std::string("(") + mode_name(m.left) + "," + mode_name(m.right) + ")";
}

json witness(const Hypergraph& g) { return serialize_hypergraph(g); }

VerifyResult suite_coassoc(const VerifyOptions& opt) {
    VerifyResult r;
    for (const Hypergraph& g : verify_corpus(opt)) {
        for (CoproductMode m : kAllModes) {
            if (!check_axiom(g, AxiomId::Coassoc, m).ok)
                r.fail("coassociativity " + mode_name(m), witness(g));
            ++r.checked;
        }
        for (RestrictMode m : {RestrictMode::Subset, RestrictMode::Cap}) {
            if (!check_axiom(g, AxiomId::DeltaCoassoc, {m, m}).ok)
                r.fail(std::string("delta coassociativity ") + mode_name(m), witness(g));
            ++r.checked;
        }
        if (!r.ok) break;
    }
    return r;
}

VerifyResult suite_axioms(const VerifyOptions& opt) {
    VerifyResult r;
    for (const Hypergraph& g : verify_corpus(opt)) {
        for (CoproductMode m : kAllModes)
            if (!check_axiom(g, AxiomId::Multiplicativity, m).ok)
                r.fail("multiplicativity " + mode_name(m), witness(g));
        for (RestrictMode m : {RestrictMode::Subset, RestrictMode::Cap})
            if (!check_axiom(g, AxiomId::Cocommutativity, {m, m}).ok)
                r.fail(std::string("cocommutativity ") + mode_name(m), witness(g));
        if (!check_axiom(g, AxiomId::Coopposite, kCapSubset).ok)
            r.fail("coopposite relation", witness(g));
        for (CoproductMode m : kAllModes)
            if (!check_axiom(g, AxiomId::CounitLaws, m).ok)
                r.fail("counit laws " + mode_name(m), witness(g));
        r.checked += 11;
        if (!r.ok) break;
    }
    return r;
}

VerifyResult suite_cointeraction(const VerifyOptions& opt) {
    VerifyResult r;
    for (const Hypergraph& g : verify_corpus(opt)) {
        for (RestrictMode m : {RestrictMode::Subset, RestrictMode::Cap}) {
            if (!check_axiom(g, AxiomId::Cointeraction, {m, m}).ok)
                r.fail(std::string("cointeraction ") + mode_name(m), witness(g));
            ++r.checked;
        }
        if (!r.ok) break;
    }
    return r;
}

VerifyResult suite_chromatic_oracle(const VerifyOptions& opt) {
    VerifyResult r;
    for (const Hypergraph& g : verify_corpus(opt)) {
        for (ChromaticVariant v :
             {ChromaticVariant::Subset, ChromaticVariant::Cap, ChromaticVariant::Mixed}) {
            RationalPolynomial p = chromatic(g, v);
            for (int colors = 0; colors <= g.num_vertices() + 1; ++colors) {
                if (p.evaluate(colors) != mpq_class(long(coloring_oracle(g, colors, v)))) {
                    json w = witness(g);
                    w["variant"] = int(v);
                    w["colors"] = colors;
                    r.fail("chromatic vs coloring oracle", std::move(w));
                }
                ++r.checked;
            }
        }
        if (g.num_vertices() <= 7 &&
            chromatic(g, ChromaticVariant::Cap) != chromatic_via_gamma(g))
            r.fail("P_cap vs chromatic of Gamma(G)", witness(g));
        if (!r.ok) break;
    }
    return r;
}

VerifyResult suite_orientations(const VerifyOptions& opt) {
    VerifyResult r;
    for (int n = 0; n <= std::min(opt.max_n, 4); ++n) {
        long long fast = count_quasi_orders(n);
        long long slow = count_quasi_orders_raw(n);
        ++r.checked;
        if (fast != slow)
            r.fail("quasi-order count vs raw relation oracle",
                   json{{"n", n}, {"fast", fast}, {"slow", slow}});
    }
    std::vector<Hypergraph> corpus;
    for (const Canonical& c : all_hypergraphs_up_to(std::min(opt.max_n, 4))) {
        Hypergraph g = to_hypergraph(c);
        if (g.num_edges() <= 3) corpus.push_back(g);
    }
    for (int n = 2; n <= 5; ++n) corpus.push_back(t_n(n));
    for (const Hypergraph& g : corpus) {
        OrientationSums s = orientation_sums(g);
        mpq_class minus1 = -1;
        mpq_class sign = g.num_vertices() % 2 ? -1 : 1;
        if (chromatic(g, ChromaticVariant::Subset).evaluate(minus1) != mpq_class(long(s.signed_all)))
            r.fail("P_subset(-1) vs signed acyclic orientations", witness(g));
        if (chromatic(g, ChromaticVariant::Cap).evaluate(minus1) != sign * mpq_class(long(s.total_count)))
            r.fail("P_cap(-1) vs total acyclic orientations", witness(g));
        if (chromatic(g, ChromaticVariant::Mixed).evaluate(minus1) != mpq_class(long(s.signed_one_max)))
            r.fail("P_mixed(-1) vs 1-max acyclic orientations", witness(g));
        if (stanley_count(g) != s.total_count)
            r.fail("stanley count vs total acyclic orientations", witness(g));
        r.checked += 4;
        if (!r.ok) break;
    }
    return r;
}

VerifyResult suite_antipode(const VerifyOptions& opt) {
    VerifyResult r;
    for (const Hypergraph& g : verify_corpus(opt)) {
        for (RestrictMode m : {RestrictMode::Subset, RestrictMode::Cap})
            if (!(takeuchi_antipode(g, {m, m}) == antipode_closed(g, m)))
                r.fail(std::string("Takeuchi vs closed antipode ") + mode_name(m),
                       witness(g));
        if (!g.empty()) {
            HgSum mixed = antipode_mixed(g);
            if (!(takeuchi_antipode(g, kSubsetCap) == mixed))
                r.fail("Takeuchi (subset,cap) vs mixed antipode", witness(g));
            if (!(takeuchi_antipode(g, kCapSubset) == mixed))
                r.fail("Takeuchi (cap,subset) vs mixed antipode", witness(g));
        }
        for (CoproductMode m : kAllModes) {
            AntipodeCheck c = verify_antipode(g, m);
            if (!c.ok) r.fail("antipode axiom " + mode_name(m) + ": " + c.detail,
                              witness(g));
        }
        for (RestrictMode m : {RestrictMode::Subset, RestrictMode::Cap}) {
            ChromaticVariant v = m == RestrictMode::Subset ? ChromaticVariant::Subset
                                                           : ChromaticVariant::Cap;
            if (chromatic(takeuchi_antipode(g, {m, m}), v) !=
                chromatic(g, v).reflected())
                r.fail(std::string("chromatic(S(G)) vs chromatic(G)(-X) ") + mode_name(m),
                       witness(g));
        }
        r.checked += 10;
        if (!r.ok) break;
    }
    return r;
}

VerifyResult suite_characters(const VerifyOptions& opt) {
    VerifyResult r;
    Character closed = lambda_subset_closed();
    for (RestrictMode m : {RestrictMode::Subset, RestrictMode::Cap}) {
        Character lam = lambda_character(m);
        Character conv = convolve(lambda_zero(), lam, m);
        for (const Hypergraph& g : verify_corpus(opt)) {
            if (conv(g) != counit_eps_delta(g))
                r.fail(std::string("lambda_0 * lambda != eps_delta, mode ") + mode_name(m),
                       witness(g));
            mpq_class v = lam(g);
            if (v.get_den() != 1)
                r.fail(std::string("lambda value not an integer, mode ") + mode_name(m),
                       witness(g));
            if (m == RestrictMode::Subset && v != closed(g))
                r.fail("lambda_subset recursion vs spanning-count closed form", witness(g));
            if (chromatic_via_lambda(g, m) !=
                chromatic(g, m == RestrictMode::Subset ? ChromaticVariant::Subset
                                                       : ChromaticVariant::Cap))
                r.fail(std::string("chromatic via lambda, mode ") + mode_name(m),
                       witness(g));
            r.checked += 4;
            if (!r.ok) return r;
        }
    }
    for (const Hypergraph& g : verify_corpus(opt)) {
        std::vector<long long> a = coefficients_via_counts(g);
        RationalPolynomial p = chromatic(g, ChromaticVariant::Subset);
        for (int i = 1; i <= g.num_vertices(); ++i)
            if (p.coeff(i) != mpq_class(long(a[i])))
                r.fail("spanning-count coefficients vs P_subset",
                       json{{"graph", witness(g)}, {"i", i}});
        ++r.checked;
        if (!r.ok) break;
    }
    return r;
}

VerifyResult suite_eulerian(const VerifyOptions& opt) {
    VerifyResult r;
    for (const Hypergraph& g : verify_corpus(opt)) {
        if (g.num_vertices() > 4) continue;
        HgSum pi = eulerian_idempotent(g);
        if (!(eulerian_idempotent(pi) == pi))
            r.fail("eulerian idempotent not idempotent", witness(g));
        // primitivity of every term combination: reduced coproduct vanishes
        HgSum reduced;
        for (const auto& [w, c] : pi.terms()) {
            Hypergraph h = to_hypergraph(w[0]);
            HgSum d = coproduct_pair(h, kSubsetSubset);
            Canonical ch = canonical_form(h);
            d.add({ch, Canonical{}}, -1);
            d.add({Canonical{}, ch}, -1);
            reduced = reduced + d * c;
        }
        if (!reduced.is_zero()) r.fail("eulerian image not primitive", witness(g));
        r.checked += 2;
        if (!r.ok) break;
    }
    return r;
}

VerifyResult suite_kappa(const VerifyOptions& opt) {
    VerifyResult r;
    std::mt19937_64 rng(opt.seed);
    for (int t = 0; t < opt.count; ++t) {
        MultiComplex c = random_multicomplex(rng, std::min(opt.max_n, 5), 4);
        MultiComplex d = random_multicomplex(rng, 3, 2);
        if (!(kappa(mc_product(c, d)) == disjoint_union(kappa(c), kappa(d))))
            r.fail("kappa of product vs product of kappas",
                   serialize_multicomplex(c));
        if (!(kappa_legwise(mc_coproduct(c)) == coproduct_pair(kappa(c), kSubsetSubset)))
            r.fail("kappa legwise of Delta vs Delta^(subset) of kappa",
                   serialize_multicomplex(c));
        if (!(kappa_legwise(mc_delta_contract(c)) ==
              delta_contract(kappa(c), RestrictMode::Subset)))
            r.fail("kappa legwise of delta vs delta^(subset) of kappa",
                   serialize_multicomplex(c));
        r.checked += 3;
        if (!r.ok) break;
    }
    return r;
}

VerifyResult suite_mc(const VerifyOptions& opt) {
    VerifyResult r;
    std::mt19937_64 rng(opt.seed);
    for (int t = 0; t < opt.count; ++t) {
        MultiComplex c = random_multicomplex(rng, std::min(opt.max_n, 4), 4);
        if (!(mc_antipode(c) == mc_takeuchi(c)))
            r.fail("mc closed antipode vs Takeuchi", serialize_multicomplex(c));
        McSum pi = mc_eulerian(c);
        if (!(mc_eulerian(pi) == pi))
            r.fail("mc eulerian not idempotent", serialize_multicomplex(c));
        // counit law for the contraction coproduct
        McSum dd = mc_delta_contract(c);
        McSum left;
        for (const auto& [w, coeff] : dd.terms())
            left.add({w[1]}, coeff * mc_counit_eps_delta(to_multicomplex(w[0])));
        if (!(left == mc_as_sum(c)))
            r.fail("mc (eps_delta x Id) delta vs Id", serialize_multicomplex(c));
        // round trip through the hypergraph embedding
        Hypergraph g = kappa(c);
        if (!(kappa(from_hypergraph(g)) == g))
            r.fail("hypergraph embedding round trip", witness(g));
        r.checked += 4;
        if (!r.ok) break;
    }
    return r;
}

const std::map<std::string, VerifyResult (*)(const VerifyOptions&)>& suites() {
    static const std::map<std::string, VerifyResult (*)(const VerifyOptions&)> table = {
        {"coassoc", suite_coassoc},
        {"axioms", suite_axioms},
        {"cointeraction", suite_cointeraction},
        {"chromatic-oracle", suite_chromatic_oracle},
        {"orientations", suite_orientations},
        {"antipode", suite_antipode},
        {"characters", suite_characters},
        {"eulerian", suite_eulerian},
        {"kappa", suite_kappa},
        {"mc", suite_mc},
    };
    return table;
}

}  // namespace

std::vector<Hypergraph> verify_corpus(const VerifyOptions& opt) {
    std::vector<Hypergraph> out;
    for (const Canonical& c : all_hypergraphs_up_to(std::min(opt.max_n, 4)))
        out.push_back(to_hypergraph(c));
    if (opt.max_n > 4) {
        std::mt19937_64 rng(opt.seed);
        for (int t = 0; t < opt.count; ++t) {
            int n = 5 + int(rng() % std::uint64_t(opt.max_n - 4));
            out.push_back(random_hypergraph(rng, n, 4));
        }
    }
    return out;
}

std::vector<std::string> verify_suite_names() {
    std::vector<std::string> names;
    for (const auto& [name, fn] : suites()) names.push_back(name);
    return names;
}

VerifyResult run_suite(const std::string& name, const VerifyOptions& opt) {
    if (name == "all") {
        VerifyResult total;
        for (const auto& [n, fn] : suites()) {
            VerifyResult r = fn(opt);
            total.checked += r.checked;
            if (!r.ok && total.ok) {
                total.ok = false;
                total.failure = n + ": " + r.failure;
                total.counterexample = r.counterexample;
            }
        }
        return total;
    }
    auto it = suites().find(name);
    if (it == suites().end())
        throw std::invalid_argument("unknown verification suite: " + name);
    return it->second(opt);
}

}  // namespace hyperhopf
