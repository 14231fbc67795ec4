#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hyperhopf/coproducts.hpp"
#include "hyperhopf/generate.hpp"
#include "hyperhopf/invariants.hpp"
#include "hyperhopf/multicomplex.hpp"

using namespace hyperhopf;

namespace {

EdgeInstance inst(std::string id, std::vector<int> mult) {
    EdgeInstance e;
    e.id = std::move(id);
    e.mult = std::move(mult);
    return e;
}

// the running four-vertex example: instances ab, ac (twice), bd, cd, abc,
// aac, bbd with abc over {ab, first ac}, aac over the second ac, bbd over bd
MultiComplex example_c() {
    std::vector<EdgeInstance> es = {
        inst("ab", {1, 1, 0, 0}),  inst("ac1", {1, 0, 1, 0}),
        inst("ac2", {1, 0, 1, 0}), inst("bd", {0, 1, 0, 1}),
        inst("cd", {0, 0, 1, 1}),  inst("abc", {1, 1, 1, 0}),
        inst("aac", {2, 0, 1, 0}), inst("bbd", {0, 2, 0, 1}),
    };
    std::vector<Mask> below(8, 0);
    below[5] = 0b00000011;  // abc over ab, ac1
    below[6] = 0b00000100;  // aac over ac2
    below[7] = 0b00001000;  // bbd over bd
    return MultiComplex({"a", "b", "c", "d"}, std::move(es), std::move(below));
}

}  // namespace

TEST_CASE("construction validates the order axioms") {
    CHECK_THROWS_AS(MultiComplex({"a"}, {inst("e", {1})}, {0}), std::invalid_argument);
    CHECK_THROWS_AS(
        MultiComplex({"a", "b"}, {inst("e", {1, 1}), inst("e", {2, 0})}, {0, 0}),
        std::invalid_argument);
    // e < f requires e to be a submultiset of f
    CHECK_THROWS_AS(
        MultiComplex({"a", "b"}, {inst("e", {2, 0}), inst("f", {1, 1})}, {0, 0b01}),
        std::invalid_argument);
    // cycles survive transitive closure as reflexive pairs
    CHECK_THROWS_AS(
        MultiComplex({"a", "b"}, {inst("e", {1, 1}), inst("f", {1, 1})}, {0b10, 0b01}),
        std::invalid_argument);
    // any closure or reduction of a valid order is accepted
    MultiComplex ok({"a", "b"}, {inst("e", {1, 1}), inst("f", {2, 1}), inst("g", {2, 2})},
                    {0, 0b001, 0b010});
    CHECK(ok.below()[2] == 0b011);  // closed: e < g inferred
}

TEST_CASE("kappa forgets order and multiplicities") {
    MultiComplex c = example_c();
    Hypergraph k = kappa(c);
    CHECK(k.num_vertices() == 4);
    // supports deduplicate: ab, ac, bd, cd, abc
    CHECK(k.num_edges() == 5);
    CHECK(k.edges() == std::vector<Mask>{0b0011, 0b0101, 0b0111, 0b1010, 0b1100});
    // a single-vertex instance contributes no edge
    MultiComplex d({"a", "b"}, {inst("aa", {2, 0})}, {0});
    CHECK(kappa(d).num_edges() == 0);
}

TEST_CASE("hypergraph embedding round trip") {
    for (const Canonical& cls : all_hypergraphs_up_to(4)) {
        Hypergraph g = to_hypergraph(cls);
        CHECK(kappa(from_hypergraph(g)) == g);
    }
}

TEST_CASE("quotient of the example keeps every instance") {
    MultiComplex c = example_c();
    SetPartition p({0b0011, 0b1100});  // {a,b}, {c,d}
    MultiComplex q = mc_quotient(c, p);
    CHECK(q.labels() == std::vector<std::string>{"a", "c"});
    REQUIRE(q.num_instances() == 8);
    // image multisets, instance for instance
    CHECK(q.instances()[0].mult == std::vector<int>{2, 0});  // ab -> aa
    CHECK(q.instances()[1].mult == std::vector<int>{1, 1});  // ac
    CHECK(q.instances()[2].mult == std::vector<int>{1, 1});  // ac
    CHECK(q.instances()[3].mult == std::vector<int>{1, 1});  // bd -> ac
    CHECK(q.instances()[4].mult == std::vector<int>{0, 2});  // cd -> cc
    CHECK(q.instances()[5].mult == std::vector<int>{2, 1});  // abc -> aac
    CHECK(q.instances()[6].mult == std::vector<int>{2, 1});  // aac -> aac
    CHECK(q.instances()[7].mult == std::vector<int>{2, 1});  // bbd -> aac
    // order transfers instance-wise
    CHECK(q.below() == c.below());
    // discrete partition is the identity
    SetPartition disc({0b0001, 0b0010, 0b0100, 0b1000});
    CHECK(mc_quotient(c, disc) == c);
}

TEST_CASE("restriction keeps instances supported inside X") {
    MultiComplex c = example_c();
    MultiComplex r = mc_restrict(c, 0b0011);  // {a,b}
    REQUIRE(r.num_instances() == 1);
    CHECK(r.instances()[0].id == "ab");
    CHECK(mc_restrict(c, c.full_mask()) == c);
    CHECK(mc_restrict(c, 0).num_vertices() == 0);
    CHECK_THROWS_AS(mc_restrict(c, Mask(1) << 6), std::invalid_argument);

    SetPartition p({0b0011, 0b1100});
    MultiComplex pr = mc_partition_restrict(c, p);
    REQUIRE(pr.num_instances() == 2);
    CHECK(pr.instances()[0].id == "ab");
    CHECK(pr.instances()[1].id == "cd");
}

TEST_CASE("product carries both factors") {
    MultiComplex d({"a", "b"}, {inst("e", {1, 1})}, {0});
    MultiComplex pp = mc_product(d, d);
    CHECK(pp.num_vertices() == 4);
    CHECK(pp.num_instances() == 2);
    CHECK(canonical_form(kappa(pp)) ==
          canonical_form(disjoint_union(kappa(d), kappa(d))));
}

TEST_CASE("coproduct of a single instance mirrors the single-edge pair") {
    MultiComplex d({"a", "b"}, {inst("e", {1, 1})}, {0});
    McSum cp = mc_coproduct(d);
    CHECK(cp.num_terms() == 3);
    MCCanonical cd = mc_canonical_form(d);
    MCCanonical empty;
    CHECK(cp.coeff({cd, empty}) == 1);
    CHECK(cp.coeff({empty, cd}) == 1);

    McSum dc = mc_delta_contract(d);
    CHECK(dc.num_terms() == 2);
}

TEST_CASE("counit of the contraction coproduct") {
    MultiComplex d({"a", "b"}, {inst("e", {1, 1})}, {0});
    CHECK(mc_counit_eps_delta(d) == 0);
    // a single-vertex instance is killed by the counit even though it is
    // preserved by contraction
    MultiComplex s({"a", "b"}, {inst("aa", {2, 0})}, {0});
    CHECK(mc_counit_eps_delta(s) == 1);
    CHECK(mc_counit_eps_delta(MultiComplex({"a"})) == 1);
    // (eps_delta x Id) delta = Id on the running example
    MultiComplex c = example_c();
    McSum d2 = mc_delta_contract(c);
    McSum picked;
    for (const auto& [w, coeff] : d2.terms())
        if (mc_counit_eps_delta(to_multicomplex(w[0])) == 1)
            picked.add({w[1]}, coeff);
    CHECK(picked == mc_as_sum(c));
}

TEST_CASE("antipode of a single instance") {
    // S(C) = -C + 2 (two isolated vertices), matching the single-edge pair
    MultiComplex d({"a", "b"}, {inst("e", {1, 1})}, {0});
    McSum s = mc_antipode(d);
    MCCanonical cd = mc_canonical_form(d);
    MCCanonical v2 = mc_canonical_form(MultiComplex({"a", "b"}));
    CHECK(s.num_terms() == 2);
    CHECK(s.coeff({cd}) == -1);
    CHECK(s.coeff({v2}) == 2);
    CHECK(mc_takeuchi(d) == s);
    // S(single vertex) = -(single vertex)
    McSum sv = mc_antipode(MultiComplex({"a"}));
    CHECK(sv.coeff({mc_canonical_form(MultiComplex({"a"}))}) == -1);
    CHECK(sv.num_terms() == 1);
}

TEST_CASE("antipode formulas agree on random multi-complexes") {
    std::mt19937_64 rng(12345);
    for (int i = 0; i < 25; ++i) {
        MultiComplex c = random_multicomplex(rng, 4, 3);
        CHECK(mc_antipode(c) == mc_takeuchi(c));
    }
}

TEST_CASE("eulerian idempotent on multi-complexes") {
    MultiComplex d({"a", "b"}, {inst("e", {1, 1})}, {0});
    McSum pi = mc_eulerian(d);
    CHECK(mc_eulerian(pi) == pi);
    // primitivity: the reduced coproduct of pi vanishes
    McSum red;
    for (const auto& [w, coeff] : pi.terms()) {
        MultiComplex m = to_multicomplex(w[0]);
        McSum cp = mc_coproduct(m);
        cp.add({w[0], MCCanonical{}}, -1);
        cp.add({MCCanonical{}, w[0]}, -1);
        red = red + cp * coeff;
    }
    CHECK(red.is_zero());
}

TEST_CASE("chromatic polynomial factors through kappa") {
    MultiComplex aab({"a", "b"}, {inst("e", {2, 1})}, {0});
    CHECK(mc_chromatic(aab) ==
          RationalPolynomial::monomial(2) - RationalPolynomial::x());
    MultiComplex c = example_c();
    CHECK(mc_chromatic(c) == chromatic(kappa(c), ChromaticVariant::Subset));
    CHECK(mc_chromatic(MultiComplex({"a", "b", "c"})) == RationalPolynomial::monomial(3));
}

TEST_CASE("canonical form identifies isomorphic multi-complexes") {
    MultiComplex c1({"a", "b"}, {inst("e", {2, 1})}, {0});
    MultiComplex c2({"x", "y"}, {inst("f", {1, 2})}, {0});
    CHECK(mc_canonical_form(c1) == mc_canonical_form(c2));
    MultiComplex c3({"a", "b"}, {inst("e", {2, 2})}, {0});
    CHECK(mc_canonical_form(c1) != mc_canonical_form(c3));
    CHECK(mc_canonical_form(to_multicomplex(mc_canonical_form(c1))) ==
          mc_canonical_form(c1));
}

TEST_CASE("kappa legwise intertwines the coproducts") {
    std::mt19937_64 rng(777);
    for (int i = 0; i < 20; ++i) {
        MultiComplex c = random_multicomplex(rng, 4, 3);
        Hypergraph k = kappa(c);
        CHECK(kappa_legwise(mc_coproduct(c)) == coproduct_pair(k, kSubsetSubset));
        CHECK(kappa_legwise(mc_delta_contract(c)) ==
              delta_contract(k, RestrictMode::Subset));
    }
}
