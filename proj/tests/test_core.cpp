#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hyperhopf/generate.hpp"
#include "hyperhopf/hypergraph.hpp"

using namespace hyperhopf;

TEST_CASE("construction validates edges") {
    Hypergraph t3({"a", "b", "c"}, {{"a", "b", "c"}});
    CHECK(t3.num_vertices() == 3);
    CHECK(t3.num_edges() == 1);
    CHECK(t3.edges()[0] == 0b111);

    CHECK_THROWS_AS(Hypergraph({"a", "b"}, {{"a", "a"}}), std::invalid_argument);
    CHECK_THROWS_AS(Hypergraph({"a", "b"}, {{"a", "z"}}), std::invalid_argument);
    CHECK_THROWS_AS(Hypergraph({"a", "b"}, {{"a"}}), std::invalid_argument);
    CHECK_THROWS_AS(Hypergraph({"a", "a"}), std::invalid_argument);

    // duplicate edges collapse; edges sort ascending as masks
    Hypergraph g({"a", "b", "c"}, std::vector<Mask>{0b110, 0b011, 0b110});
    CHECK(g.num_edges() == 2);
    CHECK(g.edges() == std::vector<Mask>{0b011, 0b110});
}

TEST_CASE("restriction in both modes") {
    Hypergraph g({"a", "b", "c", "d"}, {{"a", "b", "c"}, {"c", "d"}});
    // subset keeps only contained edges
    Hypergraph rs = restrict(g, 0b0111, RestrictMode::Subset);
    CHECK(rs.num_vertices() == 3);
    CHECK(rs.edges() == std::vector<Mask>{0b111});
    // cap intersects; trivial intersections vanish
    Hypergraph rc = restrict(g, 0b1100, RestrictMode::Cap);
    CHECK(rc.labels() == std::vector<std::string>{"c", "d"});
    CHECK(rc.edges() == std::vector<Mask>{0b11});
    Hypergraph rc2 = restrict(g, 0b1001, RestrictMode::Cap);
    CHECK(rc2.num_edges() == 0);

    CHECK_THROWS_AS(restrict(g, Mask(1) << 5, RestrictMode::Subset), std::invalid_argument);
}

TEST_CASE("restriction to the full set is the identity") {
    for (int n = 0; n <= 4; ++n)
        for (const Canonical& c : all_hypergraphs(n)) {
            Hypergraph g = to_hypergraph(c);
            CHECK(restrict(g, g.full_mask(), RestrictMode::Subset) == g);
            CHECK(restrict(g, g.full_mask(), RestrictMode::Cap) == g);
        }
}

TEST_CASE("connectivity and components") {
    Hypergraph g({"a", "b", "c", "d"}, {{"a", "b"}, {"c", "d"}});
    CHECK(!is_connected(g));
    CHECK(component_masks(g) == std::vector<Mask>{0b0011, 0b1100});
    CHECK(is_connected(Hypergraph({"a", "b", "c"}, {{"a", "b", "c"}})));
    CHECK(is_connected(Hypergraph({"x"})));
    CHECK(is_connected(Hypergraph()));
    // a single big edge connects everything it touches
    Hypergraph h({"a", "b", "c"}, {{"a", "c"}});
    CHECK(component_masks(h) == std::vector<Mask>{0b101, 0b010});
}

TEST_CASE("quotient contracts blocks and drops trivial images") {
    Hypergraph g({"a", "b", "c", "d"}, {{"a", "b"}, {"a", "c", "d"}});
    SetPartition p({0b0011, 0b1100});  // {a,b}, {c,d}
    Hypergraph q = quotient(g, p);
    CHECK(q.num_vertices() == 2);
    // {a,b} collapses, {a,c,d} becomes the 2-edge on both classes
    CHECK(q.edges() == std::vector<Mask>{0b11});
}

TEST_CASE("partition restrict is the disjoint union of block restrictions") {
    Hypergraph g({"a", "b", "c"}, {{"a", "b", "c"}, {"a", "b"}});
    SetPartition p({0b011, 0b100});
    Hypergraph r = partition_restrict(g, p, RestrictMode::Subset);
    CHECK(r.num_vertices() == 3);
    CHECK(r.edges() == std::vector<Mask>{0b011});
    Hypergraph rc = partition_restrict(g, p, RestrictMode::Cap);
    CHECK(rc.edges() == std::vector<Mask>{0b011});
}

TEST_CASE("admissible partitions require connected blocks") {
    Hypergraph t2({"a", "b"}, {{"a", "b"}});
    auto subs = admissible_partitions(t2, RestrictMode::Subset);
    CHECK(subs.size() == 2);  // discrete and the whole set
    Hypergraph e2({"a", "b"});
    auto disc = admissible_partitions(e2, RestrictMode::Subset);
    CHECK(disc.size() == 1);  // only the discrete partition

    // cap mode admits more partitions on T_3: any block is connected in cap mode
    Hypergraph t3 = t_n(3);
    CHECK(admissible_partitions(t3, RestrictMode::Subset).size() == 2);
    CHECK(admissible_partitions(t3, RestrictMode::Cap).size() == 5);
}

TEST_CASE("gamma replaces every edge by its clique") {
    Hypergraph g({"a", "b", "c", "d"}, {{"a", "b", "c"}});
    Hypergraph gg = gamma(g);
    CHECK(gg.edges() == std::vector<Mask>{0b011, 0b101, 0b110});
    CHECK(gamma(gg) == gg);
}

TEST_CASE("set partition enumeration counts are the Bell numbers") {
    const long long bell[] = {1, 1, 2, 5, 15, 52, 203};
    for (int n = 0; n <= 6; ++n)
        CHECK((long long)enumerate_set_partitions(n).size() == bell[n]);
}

TEST_CASE("canonical form identifies isomorphic hypergraphs") {
    Hypergraph a({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
    Hypergraph b({"x", "y", "z"}, {{"y", "z"}, {"x", "z"}});
    Hypergraph c({"x", "y", "z"}, {{"x", "y"}, {"x", "z"}, {"y", "z"}});
    CHECK(canonical_form(a) == canonical_form(b));
    CHECK(canonical_form(a) != canonical_form(c));
    CHECK(canonical_form(to_hypergraph(canonical_form(a))) == canonical_form(a));
}

TEST_CASE("isomorphism class counts for small n") {
    CHECK(all_hypergraphs(0).size() == 1);
    CHECK(all_hypergraphs(1).size() == 1);
    CHECK(all_hypergraphs(2).size() == 2);
    CHECK(all_hypergraphs(3).size() == 8);
    CHECK(all_hypergraphs(4).size() == 180);
}

TEST_CASE("disjoint union primes clashing labels") {
    Hypergraph g({"a", "b"}, {{"a", "b"}});
    Hypergraph u = disjoint_union(g, g);
    CHECK(u.num_vertices() == 4);
    CHECK(u.labels() == std::vector<std::string>{"a", "b", "a'", "b'"});
    CHECK(u.edges() == std::vector<Mask>{0b0011, 0b1100});
}

TEST_CASE("staircase restriction") {
    Hypergraph g = t_n(3);
    // blocks ordered {a}, {b,c}: the first factor sees only edges inside {a}
    auto parts = staircase_restrict(g, {0b001, 0b110});
    REQUIRE(parts.size() == 2);
    CHECK(parts[0].num_edges() == 0);
    CHECK(parts[1].edges() == std::vector<Mask>{0b11});
    CHECK_THROWS_AS(staircase_restrict(g, {0b001, 0b011}), std::invalid_argument);
    CHECK_THROWS_AS(staircase_restrict(g, {0b001}), std::invalid_argument);
}

TEST_CASE("enumeration cap raises resource_error") {
    Caps saved = caps();
    caps().enumeration = 3;
    CHECK_THROWS_AS(enumerate_set_partitions(4), resource_error);
    CHECK_NOTHROW(enumerate_set_partitions(3));
    caps() = saved;
}
