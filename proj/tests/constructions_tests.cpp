#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <suspath/constructions.hpp>
#include <suspath/paths.hpp>
#include <suspath/triangles.hpp>

using suspath::Graph;

namespace {

std::int64_t edges_within_prefix(const Graph& g, int prefix) {
    std::int64_t e = 0;
    for (int i = 0; i < prefix; ++i)
        for (int j = i + 1; j < prefix; ++j)
            if (g.has_edge(i, j)) ++e;
    return e;
}

}  // namespace

TEST_CASE("matching construction by residue class") {
    SUBCASE("n = 8") {
        const Graph g = suspath::build_hn(8);
        CHECK(g.vertex_count() == 8);
        CHECK(g.edge_count() == 4 * 4 + 2);
        CHECK(edges_within_prefix(g, 4) == 2);
        CHECK(suspath::count_triangles(g) == 8);
    }
    SUBCASE("n = 9 matches on the smaller part") {
        const Graph g = suspath::build_hn(9);
        CHECK(g.edge_count() == 4 * 5 + 2);
        CHECK(edges_within_prefix(g, 4) == 2);
        CHECK(suspath::count_triangles(g) == 10);  // floor(81/8)
    }
    SUBCASE("n = 11 matches on the larger part") {
        const Graph g = suspath::build_hn(11);
        CHECK(g.edge_count() == 5 * 6 + 3);
        CHECK(edges_within_prefix(g, 5) == 0);
        CHECK(suspath::count_triangles(g) == 15);  // floor(121/8) = 3 * 5
    }
    CHECK_THROWS_AS(suspath::build_hn(3), std::invalid_argument);
}

TEST_CASE("matching construction triangle identity") {
    for (int n = 4; n <= 80; ++n) {
        REQUIRE(suspath::count_triangles(suspath::build_hn(n)) ==
                suspath::triangles_hn_formula(n));
        REQUIRE(suspath::triangles_hn_formula(n) == static_cast<std::int64_t>(n) * n / 8);
    }
    CHECK(suspath::triangles_hn_formula(8) == 8);
    CHECK(suspath::triangles_hn_formula(7) == 6);
    CHECK(suspath::triangles_hn_formula(4) == 2);
}

TEST_CASE("matching construction freeness") {
    for (int n = 4; n <= 24; ++n) {
        const Graph g = suspath::build_hn(n);
        REQUIRE(suspath::is_suspension_pk_free(g, 4));
        REQUIRE(suspath::is_suspension_pk_free(g, 5));
    }
}

TEST_CASE("bipartite-block construction") {
    SUBCASE("(8, 6)") {
        const Graph g = suspath::build_fnk(8, 6);
        CHECK(edges_within_prefix(g, 4) == 4);
        CHECK(suspath::count_triangles(g) == 16);
        CHECK(suspath::is_suspension_pk_free(g, 6));
    }
    SUBCASE("(8, 4) degenerates to a matching") {
        const Graph g = suspath::build_fnk(8, 4);
        CHECK(edges_within_prefix(g, 4) == 2);
        CHECK(suspath::count_triangles(g) == 8);
    }
    CHECK_THROWS_AS(suspath::build_fnk(10, 6), std::invalid_argument);
    CHECK_THROWS_AS(suspath::build_fnk(16, 8), std::invalid_argument);  // needs n % 12 == 0
    CHECK_THROWS_AS(suspath::build_fnk(8, 3), std::invalid_argument);
    CHECK_THROWS_WITH(suspath::build_fnk(10, 6), doctest::Contains("multiple of 8"));
}

TEST_CASE("bipartite-block formula") {
    CHECK(suspath::triangles_fnk_formula(8, 6) == 16);
    CHECK(suspath::triangles_fnk_formula(24, 8) == 216);  // 3 * 576 / 8
    CHECK(suspath::triangles_fnk_formula(8, 4) == 8);
    for (const int k : {4, 6, 8, 10})
        for (int n = 4 * ((k - 2) / 2); n <= 96; n += 4 * ((k - 2) / 2))
            REQUIRE(suspath::count_triangles(suspath::build_fnk(n, k)) ==
                    suspath::triangles_fnk_formula(n, k));
}

TEST_CASE("clique-block construction") {
    SUBCASE("(12, 6)") {
        const Graph g = suspath::build_hnk(12, 6);
        CHECK(edges_within_prefix(g, 6) == 6);
        CHECK(suspath::count_triangles(g) == 38);
        CHECK(suspath::is_suspension_pk_free(g, 6));
    }
    SUBCASE("(6, 6) single clique") {
        const Graph g = suspath::build_hnk(6, 6);
        CHECK(suspath::count_triangles(g) == 10);
        CHECK(suspath::triangles_hnk_formula(6, 6) == 10);
    }
    CHECK_THROWS_AS(suspath::build_hnk(10, 6), std::invalid_argument);
    CHECK_THROWS_WITH(suspath::build_hnk(10, 6), doctest::Contains("multiple of 6"));
}

TEST_CASE("clique-block formula") {
    CHECK(suspath::triangles_hnk_formula(12, 6) == 38);
    CHECK(suspath::triangles_hnk_formula(24, 6) == 148);  // 12 * 12 + 4
    for (const int k : {4, 6, 8, 10})
        for (int n = 2 * (k / 2); n <= 96; n += 2 * (k / 2))
            REQUIRE(suspath::count_triangles(suspath::build_hnk(n, k)) ==
                    suspath::triangles_hnk_formula(n, k));
}

TEST_CASE("construction freeness for the given k") {
    for (const int k : {4, 5, 6, 7, 8}) {
        const int qf = (k - 2) / 2;
        for (int n = 4 * qf; n <= 48; n += 4 * qf)
            REQUIRE(suspath::is_suspension_pk_free(suspath::build_fnk(n, k), k));
        const int qh = k / 2;
        for (int n = 2 * qh; n <= 48; n += 2 * qh)
            REQUIRE(suspath::is_suspension_pk_free(suspath::build_hnk(n, k), k));
    }
}

TEST_CASE("clique blocks beat bipartite blocks for k >= 6") {
    for (const int k : {6, 8, 10}) {
        const int qf = (k - 2) / 2, qh = k / 2;
        for (int n = 1; n <= 240; ++n) {
            if (n % (4 * qf) != 0 || n % (2 * qh) != 0) continue;
            REQUIRE(suspath::triangles_hnk_formula(n, k) > suspath::triangles_fnk_formula(n, k));
        }
    }
}

TEST_CASE("construction kind dispatch") {
    using suspath::ConstructionKind;
    suspath::ConstructionSpec spec{ConstructionKind::hnk, 12, 6};
    CHECK(suspath::build_construction(spec) == suspath::build_hnk(12, 6));
    CHECK(suspath::construction_triangle_formula(spec) == 38);
}
