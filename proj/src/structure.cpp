#include "cyclocover/structure.hpp"

#include <algorithm>
#include <queue>

#include "cyclocover/bfs.hpp"

namespace cyclocover {

namespace {

struct Leg {
    int leaf;
    int length; // number of path vertices
};

// Walk away from v through degree-2 vertices; a leg ends at a leaf.
bool trace_leg(const Graph& g, int v, int first, Leg& out) {
    int prev = v, cur = first, len = 1;
    while (g.degree(cur) == 2) {
        int next = g.neighbors(cur)[0] == prev ? g.neighbors(cur)[1] : g.neighbors(cur)[0];
        prev = cur;
        cur = next;
        ++len;
    }
    if (g.degree(cur) != 1) return false;
    out = {cur, len};
    return true;
}

} // namespace

StructureProfile structure_profile(const Graph& g) {
    StructureProfile p;
    p.cyclomatic = g.cyclomatic();
    p.min_degree = g.min_degree();
    for (int v = 0; v < g.n_vertices(); ++v)
        if (g.degree(v) == 1) p.leaves.push_back(v);
    p.leaf_count = static_cast<int>(p.leaves.size());

    for (int v = 0; v < g.n_vertices(); ++v) {
        if (g.degree(v) < 3) continue;
        std::vector<Leg> legs;
        for (int w : g.neighbors(v)) {
            Leg leg;
            if (trace_leg(g, v, w, leg)) legs.push_back(leg);
        }
        p.legs[v] = static_cast<int>(legs.size());
        if (legs.size() > 1) {
            p.branch_resolving += static_cast<int>(legs.size()) - 1;
            // drop the longest leg, ties by lowest leaf id
            size_t drop = 0;
            for (size_t i = 1; i < legs.size(); ++i) {
                if (legs[i].length > legs[drop].length ||
                    (legs[i].length == legs[drop].length && legs[i].leaf < legs[drop].leaf))
                    drop = i;
            }
            for (size_t i = 0; i < legs.size(); ++i)
                if (i != drop) p.branch_resolving_choice.push_back(legs[i].leaf);
        }
    }
    p.lambda = std::max(p.branch_resolving, 1);
    std::sort(p.branch_resolving_choice.begin(), p.branch_resolving_choice.end());
    return p;
}

BaseDecomposition base_decomposition(const Graph& g) {
    const int n = g.n_vertices();
    BaseDecomposition b;
    b.in_base.assign(n, 1);
    b.attachment.assign(n, -1);
    if (g.cyclomatic() == 0) {
        b.is_tree_input = true;
        b.in_base.assign(n, 0);
        return b;
    }

    std::vector<int> deg(n);
    for (int v = 0; v < n; ++v) deg[v] = g.degree(v);
    std::queue<int> q;
    for (int v = 0; v < n; ++v)
        if (deg[v] == 1) q.push(v);
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        b.in_base[v] = 0;
        deg[v] = 0;
        for (int w : g.neighbors(v))
            if (b.in_base[w] && --deg[w] == 1) q.push(w);
    }

    for (int v = 0; v < n; ++v) {
        if (b.in_base[v]) {
            b.base_vertices.push_back(v);
            b.attachment[v] = v;
        }
    }
    for (const auto& e : g.edges())
        if (b.in_base[e.first] && b.in_base[e.second]) b.base_edges.push_back(e);

    // Flood each peeled part from its unique base vertex.
    std::queue<int> fq;
    for (int v : b.base_vertices) fq.push(v);
    while (!fq.empty()) {
        int u = fq.front();
        fq.pop();
        for (int w : g.neighbors(u))
            if (!b.in_base[w] && b.attachment[w] < 0) {
                b.attachment[w] = b.attachment[u];
                fq.push(w);
            }
    }
    for (int v = 0; v < n; ++v)
        if (!b.in_base[v]) b.pendant_trees[b.attachment[v]].vertices.push_back(v);
    for (const auto& e : g.edges()) {
        if (b.in_base[e.first] && b.in_base[e.second]) continue;
        int owner = b.in_base[e.first] ? b.attachment[e.second] : b.attachment[e.first];
        b.pendant_trees[owner].edges.push_back(e);
    }
    return b;
}

std::vector<std::vector<int>> base_adjacency(const Graph& g, const BaseDecomposition& base) {
    std::vector<std::vector<int>> adj(g.n_vertices());
    for (int v : base.base_vertices)
        for (int w : g.neighbors(v))
            if (base.in_base[w]) adj[v].push_back(w);
    return adj;
}

std::vector<int> articulation_points(const std::vector<std::vector<int>>& adj, int start) {
    const int n = static_cast<int>(adj.size());
    std::vector<int> disc(n, -1), low(n, 0);
    std::vector<char> artic(n, 0);
    int timer = 0;

    struct Frame {
        int v;
        int parent;
        size_t i;
    };
    std::vector<Frame> stack;
    disc[start] = low[start] = timer++;
    stack.push_back({start, -1, 0});
    int root_children = 0;

    while (!stack.empty()) {
        Frame& f = stack.back();
        if (f.i < adj[f.v].size()) {
            int w = adj[f.v][f.i++];
            if (w == f.parent) continue;
            if (disc[w] < 0) {
                disc[w] = low[w] = timer++;
                if (f.v == start) ++root_children;
                stack.push_back({w, f.v, 0});
            } else {
                low[f.v] = std::min(low[f.v], disc[w]);
            }
        } else {
            int v = f.v, parent = f.parent;
            stack.pop_back();
            if (parent >= 0) {
                low[parent] = std::min(low[parent], low[v]);
                if (parent != start && low[v] >= disc[parent]) artic[parent] = 1;
            }
        }
    }
    if (root_children >= 2) artic[start] = 1;

    std::vector<int> result;
    for (int v = 0; v < n; ++v)
        if (artic[v]) result.push_back(v);
    return result;
}

std::vector<int> articulation_points(const Graph& g) {
    return articulation_points(g.adjacency(), 0);
}

bool is_biconnected(const Graph& g) {
    return g.n_vertices() >= 3 && articulation_points(g).empty();
}

std::vector<char> vertices_on_cycles(const Graph& g) {
    const int n = g.n_vertices();
    std::vector<int> disc(n, -1), low(n, 0);
    std::vector<char> on_cycle(n, 0);
    std::vector<char> is_bridge(g.n_edges(), 0);
    int timer = 0;

    struct Frame {
        int v;
        int parent;
        size_t i;
    };
    std::vector<Frame> stack;
    disc[0] = low[0] = timer++;
    stack.push_back({0, -1, 0});
    while (!stack.empty()) {
        Frame& f = stack.back();
        if (f.i < g.neighbors(f.v).size()) {
            int w = g.neighbors(f.v)[f.i++];
            if (w == f.parent) continue;
            if (disc[w] < 0) {
                disc[w] = low[w] = timer++;
                stack.push_back({w, f.v, 0});
            } else {
                low[f.v] = std::min(low[f.v], disc[w]);
            }
        } else {
            int v = f.v, parent = f.parent;
            stack.pop_back();
            if (parent >= 0) {
                low[parent] = std::min(low[parent], low[v]);
                if (low[v] > disc[parent])
                    is_bridge[g.edge_index(parent, v)] = 1;
            }
        }
    }
    for (int i = 0; i < g.n_edges(); ++i)
        if (!is_bridge[i]) {
            on_cycle[g.edges()[i].first] = 1;
            on_cycle[g.edges()[i].second] = 1;
        }
    return on_cycle;
}

PendantForest pendant_forest(const Graph& g, const BaseDecomposition& base, int tree_root) {
    const int n = g.n_vertices();
    PendantForest f;
    f.parent.assign(n, -1);
    f.depth.assign(n, 0);
    f.att.assign(n, -1);

    std::queue<int> q;
    if (base.is_tree_input) {
        f.att.assign(n, tree_root);
        std::vector<char> seen(n, 0);
        seen[tree_root] = 1;
        q.push(tree_root);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int w : g.neighbors(u))
                if (!seen[w]) {
                    seen[w] = 1;
                    f.parent[w] = u;
                    f.depth[w] = f.depth[u] + 1;
                    q.push(w);
                }
        }
        return f;
    }

    for (int v : base.base_vertices) {
        f.att[v] = v;
        q.push(v);
    }
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int w : g.neighbors(u))
            if (!base.in_base[w] && f.att[w] < 0) {
                f.att[w] = f.att[u];
                f.parent[w] = u;
                f.depth[w] = f.depth[u] + 1;
                q.push(w);
            }
    }
    return f;
}

} // namespace cyclocover
