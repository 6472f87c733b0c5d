#ifndef CYCLOCOVER_GOOD_EDGES_HPP
#define CYCLOCOVER_GOOD_EDGES_HPP

#include <string>
#include <vector>

#include "cyclocover/bfs.hpp"
#include "cyclocover/graph.hpp"

namespace cyclocover {

// A good edge set F with respect to a root: all horizontal edges plus, for
// every u != root, all of B(u) except the kept parent edge. Removing F leaves
// the spanning tree T_F encoded by tree_parent; every path from a vertex to
// the root inside T_F is isometric in the graph.
struct GoodEdgeSet {
    int root = -1;
    std::vector<Edge> edges;       // F, sorted
    std::vector<Edge> horizontal;  // F with equidistant endpoints, sorted
    std::vector<Edge> vertical;    // the rest of F, sorted
    std::vector<int> tree_parent;  // -1 at the root and outside the subgraph
    std::vector<int> dist;         // distance to root; -1 outside the subgraph
};

GoodEdgeSet good_edge_set(const Graph& g, int root);
// Subgraph form (base graphs): original ids, filtered adjacency.
GoodEdgeSet good_edge_set(const std::vector<std::vector<int>>& adj, int root);

// The T_F path from v up to the root, as [v, ..., root].
std::vector<int> root_path(const GoodEdgeSet& ges, int v);

// Sorted distinct endpoints of the edges of F.
std::vector<int> edge_endpoints(const std::vector<Edge>& edges);

struct GoodCheck {
    bool good = true;
    std::string violation;    // empty when good; first violated clause otherwise
    int witness_vertex = -1;  // vertex whose B-set count is off, if any
    Edge witness_edge{-1, -1};
};

// Checks the definition directly: all horizontal edges present and
// |B(u) ∩ F| = |B(u)| - 1 for every u != root.
GoodCheck is_good(const Graph& g, int root, const std::vector<Edge>& candidate);

} // namespace cyclocover

#endif // CYCLOCOVER_GOOD_EDGES_HPP
