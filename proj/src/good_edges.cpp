#include "cyclocover/good_edges.hpp"

#include <algorithm>
#include <set>

namespace cyclocover {

GoodEdgeSet good_edge_set(const std::vector<std::vector<int>>& adj, int root) {
    RootedBfsIndex idx = bfs_index(adj, root);
    GoodEdgeSet ges;
    ges.root = root;
    ges.dist = idx.dist;
    ges.tree_parent = idx.parent;
    ges.horizontal = idx.horizontal_edges;
    for (int u = 0; u < static_cast<int>(adj.size()); ++u) {
        // keep the parent edge of each B(u), the rest goes into F
        for (size_t i = 1; i < idx.up[u].size(); ++i)
            ges.vertical.push_back(make_edge(u, idx.up[u][i]));
    }
    std::sort(ges.vertical.begin(), ges.vertical.end());
    ges.edges = ges.horizontal;
    ges.edges.insert(ges.edges.end(), ges.vertical.begin(), ges.vertical.end());
    std::sort(ges.edges.begin(), ges.edges.end());
    return ges;
}

GoodEdgeSet good_edge_set(const Graph& g, int root) {
    return good_edge_set(g.adjacency(), root);
}

std::vector<int> root_path(const GoodEdgeSet& ges, int v) {
    std::vector<int> path;
    for (int cur = v; cur != -1; cur = ges.tree_parent[cur]) {
        path.push_back(cur);
        if (cur == ges.root) break;
    }
    return path;
}

std::vector<int> edge_endpoints(const std::vector<Edge>& edges) {
    std::vector<int> v;
    for (const auto& e : edges) {
        v.push_back(e.first);
        v.push_back(e.second);
    }
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

GoodCheck is_good(const Graph& g, int root, const std::vector<Edge>& candidate) {
    GoodCheck check;
    std::set<Edge> f;
    for (const auto& e : candidate) {
        Edge norm = make_edge(e.first, e.second);
        if (!g.has_edge(norm.first, norm.second)) {
            check.good = false;
            check.violation = "candidate edge not in the graph";
            check.witness_edge = norm;
            return check;
        }
        f.insert(norm);
    }
    RootedBfsIndex idx = bfs_index(g, root);
    for (const auto& h : idx.horizontal_edges) {
        if (!f.count(h)) {
            check.good = false;
            check.violation = "horizontal edge missing from the set";
            check.witness_edge = h;
            return check;
        }
    }
    for (int u = 0; u < g.n_vertices(); ++u) {
        if (u == root) continue;
        int in_f = 0;
        for (int w : idx.up[u])
            if (f.count(make_edge(u, w))) ++in_f;
        if (in_f != static_cast<int>(idx.up[u].size()) - 1) {
            check.good = false;
            check.violation = "B(u) must lose exactly all but one edge";
            check.witness_vertex = u;
            return check;
        }
    }
    return check;
}

} // namespace cyclocover
