#include <doctest.h>

#include "cyclocover/bfs.hpp"
#include "cyclocover/instances.hpp"
#include "test_util.hpp"

using namespace cyclocover;

TEST_CASE("bfs index on the four-cycle") {
    Graph g = gen_family({Family::cycle, {4}, {}});
    RootedBfsIndex idx = bfs_index(g, 0);
    CHECK(idx.layers == std::vector<std::vector<int>>{{0}, {1, 3}, {2}});
    CHECK(idx.horizontal_edges.empty());
    CHECK(idx.up[2] == std::vector<int>{1, 3});
    CHECK(idx.parent[2] == 1);
    CHECK(idx.parent[0] == -1);
}

TEST_CASE("bfs index on the five-cycle has one horizontal edge") {
    Graph g = gen_family({Family::cycle, {5}, {}});
    RootedBfsIndex idx = bfs_index(g, 0);
    REQUIRE(idx.horizontal_edges.size() == 1);
    Edge h = idx.horizontal_edges[0];
    CHECK(idx.dist[h.first] == 2);
    CHECK(idx.dist[h.second] == 2);
}

TEST_CASE("bfs index on the layered nine-vertex graph") {
    Graph g = test::layered9();
    RootedBfsIndex idx = bfs_index(g, 0);
    CHECK(idx.layers == std::vector<std::vector<int>>{{0}, {1, 2, 3}, {4, 5, 6}, {7, 8}});
    CHECK(idx.horizontal_edges == std::vector<Edge>{{5, 6}, {7, 8}});
    CHECK(idx.up[4] == std::vector<int>{1, 2});
    CHECK(idx.up[7] == std::vector<int>{4, 5});
    CHECK(idx.up[8] == std::vector<int>{5, 6});
}

TEST_CASE("every edge is classified exactly once") {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        Graph g = gen_random_cyclomatic(30, 5, seed);
        RootedBfsIndex idx = bfs_index(g, static_cast<int>(seed) % 30);
        size_t vertical = 0;
        for (int v = 0; v < g.n_vertices(); ++v) vertical += idx.up[v].size();
        CHECK(vertical + idx.horizontal_edges.size() == static_cast<size_t>(g.n_edges()));
        for (int v = 0; v < g.n_vertices(); ++v)
            if (v != idx.root) {
                CHECK(!idx.up[v].empty());
                CHECK(idx.dist[idx.parent[v]] == idx.dist[v] - 1);
                CHECK(idx.parent[v] == idx.up[v].front());
            }
    }
}

TEST_CASE("shortest path in a tree is the unique path") {
    Graph g = parse_graph("6 5\n0 1\n1 2\n2 3\n3 4\n2 5");
    CHECK(shortest_path(g, 0, 4) == std::vector<int>{0, 1, 2, 3, 4});
    CHECK(shortest_path(g, 5, 0) == std::vector<int>{5, 2, 1, 0});
}

TEST_CASE("shortest path breaks ties toward the lowest id") {
    Graph g = gen_family({Family::cycle, {4}, {}});
    CHECK(shortest_path(g, 0, 2) == std::vector<int>{0, 1, 2});
}

TEST_CASE("shortest path length always equals the bfs distance") {
    for (std::uint64_t seed = 1; seed <= 8; ++seed) {
        Graph g = gen_random_cyclomatic(20 + static_cast<int>(seed), 4, seed);
        auto n = g.n_vertices();
        for (int u = 0; u < n; ++u) {
            auto dist = bfs_distances(g, u);
            for (int v = 0; v < n; ++v) {
                auto path = shortest_path(g, u, v);
                CHECK(static_cast<int>(path.size()) - 1 == dist[v]);
                CHECK(path.front() == u);
                CHECK(path.back() == v);
            }
        }
    }
}

TEST_CASE("repeated bfs calls are identical") {
    Graph g = gen_random_cyclomatic(25, 4, 7);
    RootedBfsIndex a = bfs_index(g, 3), b = bfs_index(g, 3);
    CHECK(a.dist == b.dist);
    CHECK(a.parent == b.parent);
    CHECK(a.horizontal_edges == b.horizontal_edges);
}
