#include <catch2/catch_amalgamated.hpp>

#include "xmod/fixtures.hpp"

using namespace xmod;

TEST_CASE("nerve fixtures have the advertised shape") {
    Nerve d = fixtures::disc2();
    REQUIRE(d.vertices == 3);
    REQUIRE(d.edge_count() == 3);
    REQUIRE(d.triangle_count() == 1);
    REQUIRE(d.components == 1);

    Nerve c = fixtures::circ3();
    REQUIRE(c.vertices == 3);
    REQUIRE(c.edge_count() == 3);
    REQUIRE(c.triangle_count() == 0);
    REQUIRE(c.components == 1);

    Nerve s = fixtures::sphere();
    REQUIRE(s.vertices == 4);
    REQUIRE(s.edge_count() == 6);
    REQUIRE(s.triangle_count() == 4);
    REQUIRE(s.euler_characteristic() == 2);

    Nerve rp = fixtures::rp26();
    REQUIRE(rp.vertices == 6);
    REQUIRE(rp.edge_count() == 15);
    REQUIRE(rp.triangle_count() == 10);
    REQUIRE(rp.euler_characteristic() == 1);
    // closed surface: every edge lies in exactly two triangles
    for (int e = 0; e < rp.edge_count(); ++e) {
        int count = 0;
        for (const auto& t : rp.triangles)
            for (int a = 0; a < 3; ++a)
                for (int b = a + 1; b < 3; ++b)
                    if (t[a] == rp.edges[e][0] && t[b] == rp.edges[e][1]) ++count;
        REQUIRE(count == 2);
    }
}

TEST_CASE("face closure") {
    SECTION("missing edges are inserted with a warning") {
        auto n = validate_nerve(3, {}, {{0, 1, 2}});
        REQUIRE(n.ok());
        REQUIRE(n.value().edge_count() == 3);
        REQUIRE(n.value().warnings.size() == 3);
    }
    SECTION("strict mode rejects") {
        auto n = validate_nerve(3, {}, {{0, 1, 2}}, {}, true);
        REQUIRE(!n.ok());
        REQUIRE(n.error().code == "missing-face");
    }
    SECTION("tetrahedra close down to triangles and edges") {
        auto n = validate_nerve(4, {}, {}, {{0, 1, 2, 3}});
        REQUIRE(n.ok());
        REQUIRE(n.value().triangle_count() == 4);
        REQUIRE(n.value().edge_count() == 6);
    }
}

TEST_CASE("bad simplices are rejected") {
    REQUIRE(!validate_nerve(3, {{0, 0}}).ok());
    REQUIRE(!validate_nerve(3, {{0, 5}}).ok());
    auto dup = validate_nerve(3, {{0, 1}, {1, 0}});
    REQUIRE(!dup.ok());
    REQUIRE(dup.error().code == "duplicate-simplex");
}

TEST_CASE("components and the spanning forest") {
    // two disjoint edges plus an isolated vertex
    auto n = validate_nerve(5, {{0, 1}, {2, 3}}).value();
    REQUIRE(n.components == 3);
    SpanningForest f = spanning_forest(n);
    REQUIRE(f.root.size() == 3);
    REQUIRE(f.parent[1] == 0);
    REQUIRE(f.parent[3] == 2);
    REQUIRE(f.parent[4] == -1);
    int tree_edges = 0;
    for (char b : f.tree_edge) tree_edges += b;
    REQUIRE(tree_edges == 2);

    Nerve rp = fixtures::rp26();
    SpanningForest frp = spanning_forest(rp);
    int nontree = 0;
    for (char b : frp.tree_edge)
        if (!b) ++nontree;
    REQUIRE(nontree == 10);  // E - V + 1
}
