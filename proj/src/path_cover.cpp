#include "cyclocover/path_cover.hpp"

#include <algorithm>

#include "cyclocover/bfs.hpp"
#include "cyclocover/bounds.hpp"
#include "cyclocover/good_edges.hpp"

namespace cyclocover {

LeafPairing initial_leaf_pairing(std::vector<int> members) {
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    LeafPairing p;
    p.members = members;
    for (size_t i = 0; i + 1 < members.size(); i += 2)
        p.pairs.push_back(make_edge(members[i], members[i + 1]));
    if (members.size() % 2 == 1 && members.size() > 1)
        p.pairs.push_back(make_edge(members.back(), members.front()));
    return p;
}

namespace {

// Unique path within one pendant component, through the lowest common
// ancestor w.r.t. the attachment root.
std::vector<int> component_path(const PendantForest& f, int a, int b) {
    std::vector<int> ax{a}, bx{b};
    int x = a, y = b;
    while (x != y) {
        if (f.depth[x] >= f.depth[y]) {
            x = f.parent[x];
            ax.push_back(x);
        } else {
            y = f.parent[y];
            bx.push_back(y);
        }
    }
    for (int i = static_cast<int>(bx.size()) - 2; i >= 0; --i) ax.push_back(bx[i]);
    return ax;
}

std::vector<int> climb_to_attachment(const PendantForest& f, int v) {
    std::vector<int> path{v};
    while (f.parent[path.back()] >= 0) path.push_back(f.parent[path.back()]);
    return path;
}

// Isometric path between two pairing members: the unique in-component path,
// or pendant descent + a base geodesic between the attachments.
std::vector<int> pair_path(const Graph& g, const PendantForest& f, int a, int b) {
    if (f.att[a] == f.att[b]) return component_path(f, a, b);
    std::vector<int> path = climb_to_attachment(f, a);
    std::vector<int> mid = shortest_path(g, f.att[a], f.att[b]);
    path.insert(path.end(), mid.begin() + 1, mid.end());
    std::vector<int> down = climb_to_attachment(f, b);
    for (int i = static_cast<int>(down.size()) - 2; i >= 0; --i) path.push_back(down[i]);
    return path;
}

// v lies in the subtree hanging below x (inclusive)?
bool below(const PendantForest& f, int v, int x) {
    if (f.att[v] != f.att[x]) return false;
    while (f.depth[v] > f.depth[x]) v = f.parent[v];
    return v == x;
}

} // namespace

RepairResult leaf_pairing_repair(const Graph& g, const BaseDecomposition& base,
                                 const LeafPairing& pairing, int tree_root) {
    RepairResult res;
    res.pairing = pairing;
    PendantForest forest = pendant_forest(g, base, tree_root);

    // edges outside the base graph, i.e. parent edges of the pendant forest
    std::vector<int> pend_edges;
    for (int ei = 0; ei < g.n_edges(); ++ei) {
        auto [u, v] = g.edges()[ei];
        if (base.is_tree_input || !base.in_base[u] || !base.in_base[v])
            pend_edges.push_back(ei);
    }

    auto rebuild = [&](size_t i) {
        res.paths[i] = pair_path(g, forest, res.pairing.pairs[i].first,
                                 res.pairing.pairs[i].second);
    };
    res.paths.resize(res.pairing.pairs.size());
    for (size_t i = 0; i < res.paths.size(); ++i) rebuild(i);

    auto covered_pendant = [&]() {
        std::vector<char> cov(g.n_edges(), 0);
        for (const auto& path : res.paths)
            for (size_t j = 0; j + 1 < path.size(); ++j)
                cov[g.edge_index(path[j], path[j + 1])] = 1;
        return cov;
    };

    size_t guard = pend_edges.size() + 1;
    while (guard-- > 0) {
        auto cov = covered_pendant();
        int uncovered = -1;
        for (int ei : pend_edges)
            if (!cov[ei]) {
                uncovered = ei;
                break;
            }
        if (uncovered < 0) return res;

        auto [u, v] = g.edges()[uncovered];
        int x = forest.depth[u] > forest.depth[v] ? u : v; // deeper endpoint
        int inside = -1, outside = -1;
        for (size_t i = 0; i < res.pairing.pairs.size(); ++i) {
            const auto& [a, b] = res.pairing.pairs[i];
            bool a_in = below(forest, a, x), b_in = below(forest, b, x);
            if (a_in && b_in && inside < 0) inside = static_cast<int>(i);
            if (!a_in && !b_in && outside < 0) outside = static_cast<int>(i);
        }
        if (inside < 0 || outside < 0)
            throw Error(ErrorCode::InternalInvariantViolation,
                        "no swappable pairs across an uncovered pendant edge");

        int covered_before = static_cast<int>(std::count(cov.begin(), cov.end(), 1));
        auto [a, b] = res.pairing.pairs[inside];
        auto [c, d] = res.pairing.pairs[outside];
        res.pairing.pairs[inside] = make_edge(a, c);
        res.pairing.pairs[outside] = make_edge(b, d);
        rebuild(inside);
        rebuild(outside);

        auto cov_after = covered_pendant();
        int covered_after = static_cast<int>(std::count(cov_after.begin(), cov_after.end(), 1));
        if (!cov_after[uncovered] || covered_after <= covered_before)
            throw Error(ErrorCode::InternalInvariantViolation,
                        "pair swap failed to make progress");
    }
    throw Error(ErrorCode::InternalInvariantViolation,
                "leaf pairing repair exceeded its iteration bound");
}

PathSystem ipec_construct(const Graph& g) {
    PathSystem ps;
    ps.mode = PathMode::edge_cover;
    ps.claimed_bound = path_theorem_bound(PathMode::edge_cover, g);
    if (g.n_vertices() == 1) return ps;

    StructureProfile prof = structure_profile(g);
    BaseDecomposition base = base_decomposition(g);
    int r;
    if (base.is_tree_input) {
        r = 0;
    } else {
        r = base.base_vertices.front();
        auto adjb = base_adjacency(g, base);
        RootedBfsIndex idx = bfs_index(adjb, r);
        GoodEdgeSet ges = good_edge_set(adjb, r);
        for (const auto& [x, y] : ges.horizontal) {
            ps.paths.push_back({x, y});
            ps.paths.push_back(root_path(ges, x));
            ps.paths.push_back(root_path(ges, y));
        }
        for (int v : base.base_vertices)
            if (idx.up[v].size() >= 2)
                for (int u : idx.up[v]) {
                    std::vector<int> path{v};
                    auto up_path = root_path(ges, u);
                    path.insert(path.end(), up_path.begin(), up_path.end());
                    ps.paths.push_back(std::move(path));
                }
    }

    if (prof.leaf_count > 0) {
        std::vector<int> members = prof.leaves;
        members.push_back(r);
        auto repaired = leaf_pairing_repair(g, base, initial_leaf_pairing(members), r);
        for (auto& path : repaired.paths) ps.paths.push_back(std::move(path));
    }

    std::vector<char> cov(g.n_edges(), 0);
    for (const auto& path : ps.paths)
        for (size_t j = 0; j + 1 < path.size(); ++j)
            cov[g.edge_index(path[j], path[j + 1])] = 1;
    for (int ei = 0; ei < g.n_edges(); ++ei)
        if (!cov[ei])
            throw Error(ErrorCode::InternalInvariantViolation,
                        "edge-cover construction left an edge uncovered");
    return ps;
}

PathSystem ipp_construct(const Graph& g) {
    PathSystem ps;
    ps.mode = PathMode::vertex_partition;
    ps.claimed_bound = path_theorem_bound(PathMode::vertex_partition, g);
    if (g.n_vertices() == 1) {
        ps.paths.push_back({0});
        return ps;
    }

    const int r = 0;
    RootedBfsIndex idx = bfs_index(g, r);
    GoodEdgeSet ges = good_edge_set(g, r);
    std::vector<char> covered(g.n_vertices(), 0);

    // Because every segment ever added is closed under tree parents, the
    // covered part of any root path is a suffix: the new piece is the maximal
    // uncovered prefix at the far endpoint.
    auto process = [&](int w) {
        auto path = root_path(ges, w);
        std::vector<int> segment;
        for (int v : path) {
            if (covered[v]) break;
            segment.push_back(v);
        }
        if (segment.empty()) return;
        int last = segment.back();
        if (last != r && !covered[ges.tree_parent[last]])
            throw Error(ErrorCode::InternalInvariantViolation,
                        "covered set is not ancestor-closed");
        for (int v : segment) covered[v] = 1;
        ps.paths.push_back(std::move(segment));
    };

    for (const auto& [x, y] : ges.horizontal) {
        process(x);
        process(y);
    }
    for (int v = 0; v < g.n_vertices(); ++v)
        if (idx.up[v].size() >= 2) {
            process(v); // covers v and its chain through the kept parent edge
            for (size_t i = 1; i < idx.up[v].size(); ++i) process(idx.up[v][i]);
        }
    for (int leaf = 0; leaf < g.n_vertices(); ++leaf)
        if (g.degree(leaf) == 1 && leaf != r) process(leaf);

    for (int v = 0; v < g.n_vertices(); ++v)
        if (!covered[v])
            throw Error(ErrorCode::InternalInvariantViolation,
                        "partition construction left a vertex uncovered");
    return ps;
}

} // namespace cyclocover
