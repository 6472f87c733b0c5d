#include "cyclocover/geodesy.hpp"

#include <algorithm>

#include "cyclocover/bfs.hpp"
#include "cyclocover/bounds.hpp"
#include "cyclocover/good_edges.hpp"
#include "cyclocover/metric_dim.hpp"
#include "cyclocover/structure.hpp"

namespace cyclocover {

namespace {

std::vector<int> sorted_unique(std::vector<int> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

} // namespace

SolutionSet geodetic_construct(const Graph& g, std::optional<int> root_override) {
    SolutionSet sol;
    sol.problem = Problem::geodetic;
    sol.method = Method::construct;
    sol.claimed_bound = theorem_bound(Problem::geodetic, g);
    if (g.n_vertices() == 1) return sol;

    StructureProfile prof = structure_profile(g);
    auto arts = articulation_points(g);
    int r = root_override ? *root_override : (arts.empty() ? 0 : arts.front());
    GoodEdgeSet ges = good_edge_set(g, r);

    sol.vertices = edge_endpoints(ges.edges);
    sol.vertices.insert(sol.vertices.end(), prof.leaves.begin(), prof.leaves.end());
    if (is_biconnected(g)) sol.vertices.push_back(r);
    sol.vertices = sorted_unique(sol.vertices);
    sol.root_used = r;
    return sol;
}

SolutionSet meg_construct(const Graph& g, std::optional<int> root_override) {
    SolutionSet sol;
    sol.problem = Problem::meg;
    sol.method = Method::construct;
    sol.claimed_bound = theorem_bound(Problem::meg, g);
    StructureProfile prof = structure_profile(g);
    if (g.n_vertices() == 1) return sol;
    if (prof.cyclomatic == 0) {
        sol.vertices = prof.leaves;
        return sol;
    }

    auto arts = articulation_points(g);
    int r = -1;
    if (root_override) {
        r = *root_override;
    } else {
        // the root must lie on a cycle; prefer a cut-vertex that does
        auto on_cycle = vertices_on_cycles(g);
        for (int v : arts)
            if (on_cycle[v]) {
                r = v;
                break;
            }
        if (r < 0)
            for (int v = 0; v < g.n_vertices() && r < 0; ++v)
                if (on_cycle[v]) r = v;
    }

    RootedBfsIndex idx = bfs_index(g, r);
    GoodEdgeSet ges = good_edge_set(g, r);
    std::vector<int> s = edge_endpoints(ges.edges);
    s.push_back(r);
    s.insert(s.end(), prof.leaves.begin(), prof.leaves.end());
    for (int u = 0; u < g.n_vertices(); ++u)
        if (idx.up[u].size() >= 2) {
            s.push_back(u);
            s.insert(s.end(), idx.up[u].begin(), idx.up[u].end());
        }
    s = sorted_unique(s);

    bool drop_attempted = false, drop_succeeded = false;
    if (std::binary_search(arts.begin(), arts.end(), r)) {
        drop_attempted = true;
        std::vector<int> without;
        for (int v : s)
            if (v != r) without.push_back(v);
        if (components_with_elements(g, r, without) >= 2) {
            s = std::move(without);
            drop_succeeded = true;
        }
    }
    if (drop_attempted && !drop_succeeded) ++sol.claimed_bound;
    sol.vertices = std::move(s);
    sol.root_used = r;
    return sol;
}

SolutionSet dem_construct(const Graph& g, std::optional<int> root_override) {
    SolutionSet sol;
    sol.problem = Problem::dem;
    sol.method = Method::construct;
    sol.claimed_bound = theorem_bound(Problem::dem, g);
    if (g.n_vertices() == 1) return sol;
    if (g.cyclomatic() == 0) {
        sol.vertices = {0};
        return sol;
    }

    BaseDecomposition base = base_decomposition(g);
    auto adjb = base_adjacency(g, base);
    int r = root_override ? *root_override : base.base_vertices.front();
    if (!base.in_base[r])
        throw Error(ErrorCode::InvalidSpec, "root must be a base-graph vertex");
    GoodEdgeSet ges = good_edge_set(adjb, r);

    std::vector<int> s{r};
    for (const auto& [u, v] : ges.edges) {
        if (ges.dist[u] == ges.dist[v])
            s.push_back(std::min(u, v)); // horizontal: either endpoint works
        else
            s.push_back(ges.dist[u] > ges.dist[v] ? u : v); // farther endpoint
    }
    sol.vertices = sorted_unique(s);
    sol.root_used = r;
    return sol;
}

} // namespace cyclocover
