#ifndef CYCLOCOVER_BFS_HPP
#define CYCLOCOVER_BFS_HPP

#include <vector>

#include "cyclocover/graph.hpp"

namespace cyclocover {

// BFS from a root r with the per-vertex data the feedback-edge-set
// constructions need. Vertices not reachable through the given adjacency
// (subgraph use) keep dist = -1 and take part in nothing.
struct RootedBfsIndex {
    int root = -1;
    std::vector<int> dist;                 // -1 = not in the searched subgraph
    std::vector<std::vector<int>> layers;  // layers[d] = vertices at distance d, ascending
    std::vector<int> parent;               // lowest-id closer neighbor; -1 at root
    std::vector<std::vector<int>> up;      // up[u] = neighbors one layer closer, ascending
    std::vector<Edge> horizontal_edges;    // endpoints equidistant from root, sorted

    bool in_index(int v) const { return dist[v] >= 0; }
};

// Core form over a raw adjacency structure (used for base graphs, which keep
// original vertex ids with filtered neighbor lists).
RootedBfsIndex bfs_index(const std::vector<std::vector<int>>& adj, int root);
RootedBfsIndex bfs_index(const Graph& g, int root);

// Distances from s; -1 where unreachable.
std::vector<int> bfs_distances(const std::vector<std::vector<int>>& adj, int s);
std::vector<int> bfs_distances(const Graph& g, int s);

// Distances from s in G minus one edge (the deletion test for
// "lies on all shortest paths").
std::vector<int> bfs_distances_avoiding(const Graph& g, int s, Edge removed);

// One isometric u-v path, deterministic: from u, repeatedly step to the
// lowest-id neighbor strictly closer to v.
std::vector<int> shortest_path(const Graph& g, int u, int v);

} // namespace cyclocover

#endif // CYCLOCOVER_BFS_HPP
