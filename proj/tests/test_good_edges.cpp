#include <doctest.h>

#include "cyclocover/good_edges.hpp"
#include "cyclocover/instances.hpp"
#include "test_util.hpp"

using namespace cyclocover;

TEST_CASE("trees have an empty good edge set") {
    Graph g = gen_random_cyclomatic(12, 0, 3);
    for (int r = 0; r < g.n_vertices(); ++r) {
        GoodEdgeSet ges = good_edge_set(g, r);
        CHECK(ges.edges.empty());
        CHECK(is_good(g, r, ges.edges).good);
    }
}

TEST_CASE("the five-cycle forces the horizontal edge") {
    Graph g = gen_family({Family::cycle, {5}, {}});
    GoodEdgeSet ges = good_edge_set(g, 0);
    REQUIRE(ges.edges.size() == 1);
    CHECK(ges.edges == ges.horizontal);
    CHECK(ges.edges[0] == Edge{2, 3});
}

TEST_CASE("layered nine-vertex graph accepts the marked five-edge set") {
    Graph g = test::layered9();
    std::vector<Edge> marked{{2, 4}, {5, 6}, {5, 7}, {6, 8}, {7, 8}};
    GoodCheck check = is_good(g, 0, marked);
    CHECK(check.good);
    GoodEdgeSet ges = good_edge_set(g, 0);
    CHECK(ges.edges.size() == 5);
    CHECK(ges.edges.size() == static_cast<size_t>(g.cyclomatic()));
    CHECK(is_good(g, 0, ges.edges).good);
}

TEST_CASE("is_good rejects a missing horizontal edge") {
    Graph g = gen_family({Family::cycle, {5}, {}});
    GoodCheck check = is_good(g, 0, {});
    CHECK(!check.good);
    CHECK(check.violation.find("horizontal") != std::string::npos);
    CHECK(check.witness_edge == Edge{2, 3});
}

TEST_CASE("is_good rejects taking a whole bundle") {
    Graph g = gen_family({Family::cycle, {4}, {}});
    GoodCheck check = is_good(g, 0, {{1, 2}, {2, 3}});
    CHECK(!check.good);
    CHECK(check.witness_vertex == 2);
}

TEST_CASE("root path of the root is a single vertex") {
    Graph g = gen_family({Family::cycle, {5}, {}});
    GoodEdgeSet ges = good_edge_set(g, 0);
    CHECK(root_path(ges, 0) == std::vector<int>{0});
    CHECK(root_path(ges, 3) == std::vector<int>{3, 4, 0});
}

TEST_CASE("good edge sets are minimum feedback edge sets with isometric root paths") {
    int checked = 0;
    for (std::uint64_t seed = 1; checked < 500; ++seed) {
        int n = 6 + static_cast<int>(seed % 25);
        Graph g = gen_random_cyclomatic(n, static_cast<int>(seed % 5), seed);
        int r = static_cast<int>(seed % n);
        GoodEdgeSet ges = good_edge_set(g, r);

        CHECK(static_cast<int>(ges.edges.size()) == g.cyclomatic());
        CHECK(is_good(g, r, ges.edges).good);

        // removing F leaves a spanning tree
        std::vector<Edge> rest;
        for (const auto& e : g.edges())
            if (!std::binary_search(ges.edges.begin(), ges.edges.end(), e))
                rest.push_back(e);
        CHECK(rest.size() == static_cast<size_t>(g.n_vertices() - 1));
        Graph tree(g.n_vertices(), rest); // constructor asserts connectivity
        CHECK(tree.cyclomatic() == 0);

        // every root path is isometric, for every vertex
        auto dist = bfs_distances(g, r);
        for (int v = 0; v < g.n_vertices(); ++v) {
            auto path = root_path(ges, v);
            CHECK(static_cast<int>(path.size()) - 1 == dist[v]);
            for (size_t i = 0; i + 1 < path.size(); ++i)
                CHECK(g.has_edge(path[i], path[i + 1]));
        }
        ++checked;
    }
}

TEST_CASE("good edge sets work on base subgraphs with original ids") {
    Graph g = parse_graph("7 7\n0 1\n1 2\n2 3\n3 4\n4 0\n0 5\n5 6");
    BaseDecomposition b = base_decomposition(g);
    GoodEdgeSet ges = good_edge_set(base_adjacency(g, b), 0);
    REQUIRE(ges.edges.size() == 1);
    CHECK(ges.edges[0] == Edge{2, 3});
    CHECK(ges.dist[5] == -1); // pendant vertices sit outside the index
    CHECK(root_path(ges, 3) == std::vector<int>{3, 4, 0});
}
