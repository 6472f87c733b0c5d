#include <doctest.h>

#include <set>

#include "cyclocover/instances.hpp"
#include "cyclocover/structure.hpp"
#include "test_util.hpp"

using namespace cyclocover;

TEST_CASE("profile of a bouquet") {
    Graph g = gen_bouquet({5, 5}, {2, 3, 4});
    StructureProfile p = structure_profile(g);
    CHECK(p.cyclomatic == 2);
    CHECK(p.leaf_count == 3);
    CHECK(p.legs.at(0) == 3); // the three pendant paths at the hub
    CHECK(p.branch_resolving == 2);
    CHECK(p.lambda == 2);
    CHECK(p.branch_resolving_choice.size() == 2);
}

TEST_CASE("profile of the claw") {
    Graph g = parse_graph("4 3\n0 1\n0 2\n0 3");
    StructureProfile p = structure_profile(g);
    CHECK(p.legs.at(0) == 3);
    CHECK(p.branch_resolving == 2);
    CHECK(p.lambda == 2);
    // the longest-leg rule drops the lowest leaf on ties
    CHECK(p.branch_resolving_choice == std::vector<int>{2, 3});
}

TEST_CASE("profile of the seven-cycle") {
    Graph g = gen_family({Family::cycle, {7}, {}});
    StructureProfile p = structure_profile(g);
    CHECK(p.cyclomatic == 1);
    CHECK(p.leaf_count == 0);
    CHECK(p.min_degree == 2);
    CHECK(p.branch_resolving == 0);
    CHECK(p.lambda == 1);
    CHECK(p.branch_resolving_choice.empty());
}

TEST_CASE("branch-resolving choice keeps one leaf per counted leg") {
    // legs of lengths 1, 2, 2 at vertex 0: the long leg with the lower leaf
    // id is dropped
    Graph g = parse_graph("6 5\n0 1\n0 2\n2 3\n0 4\n4 5");
    StructureProfile p = structure_profile(g);
    CHECK(p.legs.at(0) == 3);
    CHECK(p.branch_resolving == 2);
    CHECK(p.branch_resolving_choice == std::vector<int>{1, 5});
}

TEST_CASE("base decomposition peels a pendant path") {
    // five-cycle plus the path 0-5-6
    Graph g = parse_graph("7 7\n0 1\n1 2\n2 3\n3 4\n4 0\n0 5\n5 6");
    BaseDecomposition b = base_decomposition(g);
    CHECK(!b.is_tree_input);
    CHECK(b.base_vertices == std::vector<int>{0, 1, 2, 3, 4});
    CHECK(b.base_edges.size() == 5);
    REQUIRE(b.pendant_trees.count(0) == 1);
    CHECK(b.pendant_trees.at(0).vertices == std::vector<int>{5, 6});
    CHECK(b.pendant_trees.at(0).edges == std::vector<Edge>{{0, 5}, {5, 6}});
    CHECK(b.attachment[6] == 0);
}

TEST_CASE("base decomposition is the identity on min degree two") {
    Graph g = test::bowtie();
    BaseDecomposition b = base_decomposition(g);
    CHECK(b.base_vertices.size() == 5);
    CHECK(b.pendant_trees.empty());
    CHECK(b.base_edges.size() == static_cast<size_t>(g.n_edges()));
}

TEST_CASE("base decomposition flags trees") {
    Graph g = gen_family({Family::path, {6}, {}});
    BaseDecomposition b = base_decomposition(g);
    CHECK(b.is_tree_input);
    CHECK(b.base_vertices.empty());
    CHECK(b.pendant_trees.empty());
}

TEST_CASE("base and pendant edges split the edge set") {
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
        Graph g = gen_random_cyclomatic(24, 3, seed);
        BaseDecomposition b = base_decomposition(g);
        if (b.is_tree_input) continue;
        size_t pendant = 0;
        for (const auto& [att, tree] : b.pendant_trees) {
            pendant += tree.edges.size();
            CHECK(b.in_base[att]);
            for (int v : tree.vertices) CHECK(b.attachment[v] == att);
        }
        CHECK(b.base_edges.size() + pendant == static_cast<size_t>(g.n_edges()));
        // base graph has min degree two
        auto adjb = base_adjacency(g, b);
        for (int v : b.base_vertices) CHECK(adjb[v].size() >= 2);
    }
}

TEST_CASE("articulation points") {
    CHECK(articulation_points(test::bowtie()) == std::vector<int>{0});
    CHECK(articulation_points(gen_family({Family::cycle, {6}, {}})).empty());
    CHECK(articulation_points(gen_family({Family::path, {5}, {}})) ==
          std::vector<int>{1, 2, 3});
    CHECK(is_biconnected(gen_family({Family::cycle, {6}, {}})));
    CHECK(!is_biconnected(parse_graph("2 1\n0 1")));
}

TEST_CASE("cycle membership flags") {
    Graph g = parse_graph("7 7\n0 1\n1 2\n2 3\n3 4\n4 0\n0 5\n5 6");
    auto on = vertices_on_cycles(g);
    for (int v = 0; v <= 4; ++v) CHECK(on[v]);
    CHECK(!on[5]);
    CHECK(!on[6]);
}

TEST_CASE("pendant forest orients peeled parts toward the base") {
    Graph g = parse_graph("7 7\n0 1\n1 2\n2 3\n3 4\n4 0\n0 5\n5 6");
    BaseDecomposition b = base_decomposition(g);
    PendantForest f = pendant_forest(g, b);
    CHECK(f.parent[6] == 5);
    CHECK(f.parent[5] == 0);
    CHECK(f.parent[0] == -1);
    CHECK(f.depth[6] == 2);
    CHECK(f.att[6] == 0);
    CHECK(f.att[2] == 2);
}
