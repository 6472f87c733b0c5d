#ifndef CYCLOCOVER_TEST_UTIL_HPP
#define CYCLOCOVER_TEST_UTIL_HPP

#include <string>
#include <vector>

#include "cyclocover/graph.hpp"
#include "cyclocover/instances.hpp"
#include "cyclocover/structure.hpp"

namespace cyclocover::test {

inline Graph from_text(const std::string& text) { return parse_graph(text); }

// Two triangles sharing vertex 0.
inline Graph bowtie() {
    return Graph(5, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {0, 4}, {3, 4}});
}

// Nine vertices in four BFS layers below root 0, with horizontal edges (5,6)
// and (7,8) and a two-edge bundle above vertex 4. Small enough to check every
// classification by hand.
inline Graph layered9() {
    return Graph(9, {{0, 1},
                     {0, 2},
                     {0, 3},
                     {1, 4},
                     {2, 4},
                     {2, 5},
                     {3, 6},
                     {4, 7},
                     {5, 7},
                     {5, 8},
                     {6, 8},
                     {5, 6},
                     {7, 8}});
}

inline Graph compact_subgraph(const Graph& g, const std::vector<int>& verts) {
    std::vector<int> new_id(g.n_vertices(), -1);
    for (size_t i = 0; i < verts.size(); ++i) new_id[verts[i]] = static_cast<int>(i);
    std::vector<Edge> edges;
    for (const auto& [u, v] : g.edges())
        if (new_id[u] >= 0 && new_id[v] >= 0) edges.emplace_back(new_id[u], new_id[v]);
    return Graph(static_cast<int>(verts.size()), std::move(edges));
}

// Min-degree-2 instance: the 2-core of a seeded random graph, relabeled.
// Walks the seed forward until the core is large enough.
inline Graph random_min_deg2(int n, int c, std::uint64_t seed) {
    for (std::uint64_t s = seed;; ++s) {
        Graph g = gen_random_cyclomatic(n, std::max(c, 1), s);
        BaseDecomposition base = base_decomposition(g);
        if (static_cast<int>(base.base_vertices.size()) >= 3)
            return compact_subgraph(g, base.base_vertices);
    }
}

// Random instance guaranteed to keep a leaf.
inline Graph random_min_deg1(int n, int c, std::uint64_t seed) {
    for (std::uint64_t s = seed;; ++s) {
        Graph g = gen_random_cyclomatic(n, c, s);
        if (g.min_degree() == 1) return g;
    }
}

} // namespace cyclocover::test

#endif // CYCLOCOVER_TEST_UTIL_HPP
