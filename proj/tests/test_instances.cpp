#include <doctest.h>

#include "cyclocover/instances.hpp"
#include "cyclocover/structure.hpp"

using namespace cyclocover;

TEST_CASE("bouquet arithmetic") {
    Graph g = gen_bouquet({5, 5}, {2, 3, 4});
    CHECK(g.n_vertices() == 18);
    CHECK(g.n_edges() == 19);
    StructureProfile p = structure_profile(g);
    CHECK(p.cyclomatic == 2);
    CHECK(p.leaf_count == 3);
}

TEST_CASE("bouquet rejects even cycles") {
    CHECK_THROWS_WITH_AS(gen_bouquet({4}, {}), doctest::Contains("EvenCycleLength"),
                         Error);
}

TEST_CASE("k2k plus edge") {
    Graph g = gen_k2k_plus_edge(3);
    CHECK(g.n_vertices() == 5);
    CHECK(g.n_edges() == 7);
    CHECK(g.cyclomatic() == 3);
    CHECK(articulation_points(g).empty()); // 2-connected
}

TEST_CASE("theta graph") {
    Graph g = gen_family({Family::theta, {2, 2, 2}, {}});
    CHECK(g.cyclomatic() == 2);
    CHECK(g.min_degree() == 2);
    CHECK(g.n_vertices() == 8);
}

TEST_CASE("spider tree") {
    Graph g = gen_family({Family::spider, {4}, {}});
    StructureProfile p = structure_profile(g);
    CHECK(g.n_vertices() == 10);
    CHECK(p.cyclomatic == 0);
    CHECK(p.leaf_count == 6); // 2t-2
}

TEST_CASE("cycle and path families") {
    CHECK(gen_family({Family::cycle, {6}, {}}).cyclomatic() == 1);
    Graph p = gen_family({Family::path, {6}, {}});
    CHECK(p.cyclomatic() == 0);
    CHECK(structure_profile(p).leaf_count == 2);
}

TEST_CASE("random graphs hit the requested cyclomatic number") {
    Graph g = gen_random_cyclomatic(20, 4, 1);
    CHECK(structure_profile(g).cyclomatic == 4);
    CHECK(gen_random_cyclomatic(20, 0, 5).cyclomatic() == 0);
}

TEST_CASE("random generation is reproducible per seed") {
    Graph a = gen_random_cyclomatic(24, 5, 123);
    Graph b = gen_random_cyclomatic(24, 5, 123);
    CHECK(a.edges() == b.edges());
    Graph c = gen_random_cyclomatic(24, 5, 124);
    CHECK(a.edges() != c.edges());
}

TEST_CASE("random generation rejects impossible densities") {
    CHECK_THROWS_WITH_AS(gen_random_cyclomatic(3, 2, 1), doctest::Contains("TooManyEdges"),
                         Error);
    CHECK_NOTHROW(gen_random_cyclomatic(3, 1, 1)); // the triangle
}

TEST_CASE("seed splitting is stable") {
    CHECK(split_seed(7, 0) == split_seed(7, 0));
    CHECK(split_seed(7, 0) != split_seed(7, 1));
    CHECK(split_seed(7, 1) != split_seed(8, 1));
}
