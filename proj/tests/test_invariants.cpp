#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hyperhopf/generate.hpp"
#include "hyperhopf/invariants.hpp"

using namespace hyperhopf;

namespace {

RationalPolynomial falling(int n) {
    RationalPolynomial p(1);
    for (int i = 0; i < n; ++i) p *= RationalPolynomial::x() - RationalPolynomial(long(i));
    return p;
}

}  // namespace

TEST_CASE("closed forms on the one-edge hypergraphs") {
    for (int n = 2; n <= 6; ++n) {
        Hypergraph g = t_n(n);
        // P_cap(T_n) = X(X-1)...(X-n+1)
        CHECK(chromatic(g, ChromaticVariant::Cap) == falling(n));
        // P_subset(T_n) = X^n - X
        CHECK(chromatic(g, ChromaticVariant::Subset) ==
              RationalPolynomial::monomial(n) - RationalPolynomial::x());
    }
}

TEST_CASE("mixed chromatic polynomial of the one-edge hypergraphs") {
    // Hilbert-basis rows, nonzero coefficients from degree 2 up
    const std::vector<std::vector<long>> rows = {
        {},                                          // n = 1 handled separately
        {2},                                         // T_2
        {3, 6},                                      // T_3
        {4, 24, 24},                                 // T_4
        {5, 70, 180, 120},                           // T_5
        {6, 180, 900, 1440, 720},                    // T_6
        {7, 434, 3780, 10920, 12600, 5040},          // T_7
    };
    CHECK(chromatic(t_n(1), ChromaticVariant::Mixed) == RationalPolynomial::x());
    for (int n = 2; n <= 7; ++n) {
        std::vector<Rational> c = to_hilbert_basis(chromatic(t_n(n), ChromaticVariant::Mixed));
        REQUIRE((int)c.size() == n + 1);
        CHECK(c[0] == 0);
        CHECK(c[1] == 0);
        for (int k = 2; k <= n; ++k) CHECK(c[k] == rows[n - 1][k - 2]);
    }
    // the non-integral witness: P_mixed(T_3) = X^3 - 3/2 X^2 + 1/2 X
    RationalPolynomial pm = chromatic(t_n(3), ChromaticVariant::Mixed);
    CHECK(pm == RationalPolynomial(std::vector<Rational>{0, mpq_class(1, 2), mpq_class(-3, 2), 1}));
    CHECK(!pm.has_integer_coefficients());
}

TEST_CASE("mixed closed forms for T_4 and T_6") {
    RationalPolynomial x = RationalPolynomial::x();
    CHECK(chromatic(t_n(4), ChromaticVariant::Mixed) == x * x * (x - 1) * (x - 1));
    CHECK(chromatic(t_n(6), ChromaticVariant::Mixed) ==
          x * x * (x - 1) * (x - 1) * (x * x * Rational(2) - x * Rational(2) - 1) * mpq_class(1, 2));
}

TEST_CASE("coloring oracle agrees on every small class") {
    for (int n = 0; n <= 3; ++n)
        for (const Canonical& c : all_hypergraphs(n)) {
            Hypergraph g = to_hypergraph(c);
            for (ChromaticVariant v : {ChromaticVariant::Subset, ChromaticVariant::Cap,
                                       ChromaticVariant::Mixed}) {
                RationalPolynomial p = chromatic(g, v);
                for (int colors = 0; colors <= n + 2; ++colors)
                    CHECK(p.evaluate(colors) == long(coloring_oracle(g, colors, v)));
            }
        }
}

TEST_CASE("cap chromatic equals the chromatic polynomial of gamma") {
    for (const Canonical& c : all_hypergraphs_up_to(4)) {
        Hypergraph g = to_hypergraph(c);
        CHECK(chromatic(g, ChromaticVariant::Cap) == chromatic_via_gamma(g));
    }
}

TEST_CASE("deletion-contraction on simple graphs") {
    Hypergraph tri({"a", "b", "c"}, {{"a", "b"}, {"a", "c"}, {"b", "c"}});
    RationalPolynomial x = RationalPolynomial::x();
    CHECK(graph_chromatic(tri) == x * (x - 1) * (x - 2));
    Hypergraph path({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
    CHECK(graph_chromatic(path) == x * (x - 1) * (x - 1));
    CHECK(graph_chromatic(Hypergraph({"a", "b"})) == x * x);
}

TEST_CASE("chromatic polynomials are multiplicative over disjoint unions") {
    Hypergraph u = disjoint_union(t_n(2), t_n(3));
    for (ChromaticVariant v : {ChromaticVariant::Subset, ChromaticVariant::Cap,
                               ChromaticVariant::Mixed})
        CHECK(chromatic(u, v) == chromatic(t_n(2), v) * chromatic(t_n(3), v));
}

TEST_CASE("chromatic via the lambda character") {
    for (RestrictMode m : {RestrictMode::Subset, RestrictMode::Cap})
        for (const Canonical& c : all_hypergraphs_up_to(4)) {
            Hypergraph g = to_hypergraph(c);
            ChromaticVariant v = m == RestrictMode::Subset ? ChromaticVariant::Subset
                                                           : ChromaticVariant::Cap;
            CHECK(chromatic_via_lambda(g, m) == chromatic(g, v));
        }
}

TEST_CASE("subset coefficients from spanning counts") {
    for (const Canonical& c : all_hypergraphs_up_to(4)) {
        Hypergraph g = to_hypergraph(c);
        std::vector<long long> a = coefficients_via_counts(g);
        RationalPolynomial p = chromatic(g, ChromaticVariant::Subset);
        for (int i = 0; i <= g.num_vertices(); ++i)
            CHECK(p.coeff(i) == mpq_class(long(a[i])));
    }
}

TEST_CASE("eulerian idempotent on the one-edge hypergraphs") {
    // pi(T_3) = T_3 - T_1^3
    HgSum pi = eulerian_idempotent(t_n(3));
    Canonical t3 = canonical_form(t_n(3));
    Canonical v3 = canonical_form(Hypergraph({"a", "b", "c"}));
    CHECK(pi.num_terms() == 2);
    CHECK(pi.coeff({t3}) == 1);
    CHECK(pi.coeff({v3}) == -1);
    CHECK(eulerian_idempotent(pi) == pi);
    // pi vanishes on products of nonempty factors
    HgSum prod = eulerian_idempotent(disjoint_union(t_n(2), t_n(2)));
    CHECK(prod.is_zero());
}

TEST_CASE("oracle work bound raises resource_error") {
    Caps saved = caps();
    caps().work_bound = 10;
    CHECK_THROWS_AS(coloring_oracle(t_n(4), 5, ChromaticVariant::Subset), resource_error);
    caps() = saved;
}
