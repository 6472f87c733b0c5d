#include "cyclocover/bfs.hpp"

#include <algorithm>
#include <queue>

namespace cyclocover {

RootedBfsIndex bfs_index(const std::vector<std::vector<int>>& adj, int root) {
    const int n = static_cast<int>(adj.size());
    RootedBfsIndex idx;
    idx.root = root;
    idx.dist.assign(n, -1);
    idx.parent.assign(n, -1);
    idx.up.assign(n, {});

    std::queue<int> q;
    idx.dist[root] = 0;
    q.push(root);
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int w : adj[u])
            if (idx.dist[w] < 0) {
                idx.dist[w] = idx.dist[u] + 1;
                q.push(w);
            }
    }

    int depth = 0;
    for (int v = 0; v < n; ++v) depth = std::max(depth, idx.dist[v]);
    idx.layers.assign(depth + 1, {});
    for (int v = 0; v < n; ++v)
        if (idx.dist[v] >= 0) idx.layers[idx.dist[v]].push_back(v);

    // Classify each edge once: horizontal if the endpoints are equidistant,
    // otherwise it belongs to B(u) of the farther endpoint.
    for (int u = 0; u < n; ++u) {
        if (idx.dist[u] < 0) continue;
        for (int w : adj[u]) {
            if (idx.dist[w] == idx.dist[u] - 1) idx.up[u].push_back(w);
            if (u < w && idx.dist[w] == idx.dist[u])
                idx.horizontal_edges.emplace_back(u, w);
        }
        if (!idx.up[u].empty()) idx.parent[u] = idx.up[u].front();
    }
    std::sort(idx.horizontal_edges.begin(), idx.horizontal_edges.end());
    return idx;
}

RootedBfsIndex bfs_index(const Graph& g, int root) {
    return bfs_index(g.adjacency(), root);
}

std::vector<int> bfs_distances(const std::vector<std::vector<int>>& adj, int s) {
    std::vector<int> dist(adj.size(), -1);
    std::queue<int> q;
    dist[s] = 0;
    q.push(s);
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int w : adj[u])
            if (dist[w] < 0) {
                dist[w] = dist[u] + 1;
                q.push(w);
            }
    }
    return dist;
}

std::vector<int> bfs_distances(const Graph& g, int s) {
    return bfs_distances(g.adjacency(), s);
}

std::vector<int> bfs_distances_avoiding(const Graph& g, int s, Edge removed) {
    removed = make_edge(removed.first, removed.second);
    std::vector<int> dist(g.n_vertices(), -1);
    std::queue<int> q;
    dist[s] = 0;
    q.push(s);
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int w : g.neighbors(u)) {
            if (make_edge(u, w) == removed) continue;
            if (dist[w] < 0) {
                dist[w] = dist[u] + 1;
                q.push(w);
            }
        }
    }
    return dist;
}

std::vector<int> shortest_path(const Graph& g, int u, int v) {
    auto dist_to_v = bfs_distances(g, v);
    std::vector<int> path;
    path.push_back(u);
    int cur = u;
    while (cur != v) {
        for (int w : g.neighbors(cur))
            if (dist_to_v[w] == dist_to_v[cur] - 1) {
                cur = w;
                break;
            }
        path.push_back(cur);
    }
    return path;
}

} // namespace cyclocover
