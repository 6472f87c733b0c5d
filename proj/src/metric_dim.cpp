#include "cyclocover/metric_dim.hpp"

#include <algorithm>
#include <queue>

#include "cyclocover/bounds.hpp"
#include "cyclocover/good_edges.hpp"
#include "cyclocover/structure.hpp"

namespace cyclocover {

int components_with_elements(const Graph& g, int r, const std::vector<int>& s) {
    const int n = g.n_vertices();
    std::vector<int> comp(n, -1);
    int labels = 0;
    for (int v = 0; v < n; ++v) {
        if (v == r || comp[v] >= 0) continue;
        std::queue<int> q;
        comp[v] = labels;
        q.push(v);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int w : g.neighbors(u))
                if (w != r && comp[w] < 0) {
                    comp[w] = labels;
                    q.push(w);
                }
        }
        ++labels;
    }
    std::vector<char> hit(labels, 0);
    int count = 0;
    for (int v : s)
        if (v != r && !hit[comp[v]]) {
            hit[comp[v]] = 1;
            ++count;
        }
    return count;
}

namespace {

std::vector<int> sorted_unique(std::vector<int> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

struct CoreResult {
    std::vector<int> vertices;
    int root = -1;
    bool drop_attempted = false;
    bool drop_succeeded = false;
};

// Drops r from s when at least two components of G - r hold other elements,
// which is what licenses removing the root from a resolving-type set.
void try_drop(const Graph& g, CoreResult& res) {
    res.drop_attempted = true;
    std::vector<int> without;
    for (int v : res.vertices)
        if (v != res.root) without.push_back(v);
    if (components_with_elements(g, res.root, without) >= 2) {
        res.vertices = std::move(without);
        res.drop_succeeded = true;
    }
}

// Min degree >= 2: root at the lowest cut-vertex if one exists, else 0.
CoreResult core_min_deg2(const Graph& g, std::optional<int> root_override) {
    CoreResult res;
    auto arts = articulation_points(g);
    res.root = root_override ? *root_override : (arts.empty() ? 0 : arts.front());
    GoodEdgeSet ges = good_edge_set(g, res.root);
    res.vertices = edge_endpoints(ges.edges);
    res.vertices.push_back(res.root);
    res.vertices = sorted_unique(res.vertices);
    if (std::binary_search(arts.begin(), arts.end(), res.root)) try_drop(g, res);
    return res;
}

// Min degree 1, not a tree: the root must live in the base graph and be a
// cut-vertex whose removal provably leaves extension elements on two sides.
// A cut-vertex of the base always works, and so does an attachment whose
// pendant tree holds an element of the pre-selected set R.
CoreResult core_min_deg1(const Graph& g, const BaseDecomposition& base,
                         const std::vector<int>& r_set,
                         std::optional<int> root_override) {
    CoreResult res;
    auto adjb = base_adjacency(g, base);
    if (root_override) {
        if (!base.in_base[*root_override])
            throw Error(ErrorCode::InvalidSpec, "root must be a base-graph vertex");
        res.root = *root_override;
    } else {
        auto base_arts = articulation_points(adjb, base.base_vertices.front());
        std::vector<char> candidate(g.n_vertices(), 0);
        for (int v : base_arts) candidate[v] = 1;
        for (int x : r_set) candidate[base.attachment[x]] = 1;
        res.root = -1;
        for (int v : base.base_vertices)
            if (candidate[v]) {
                res.root = v;
                break;
            }
        if (res.root < 0) res.root = base.pendant_trees.begin()->first;
    }
    GoodEdgeSet ges = good_edge_set(adjb, res.root);
    res.vertices = edge_endpoints(ges.edges);
    res.vertices.push_back(res.root);
    res.vertices.insert(res.vertices.end(), r_set.begin(), r_set.end());
    res.vertices = sorted_unique(res.vertices);
    try_drop(g, res);
    return res;
}

SolutionSet finish(Problem p, const Graph& g, CoreResult res) {
    SolutionSet sol;
    sol.problem = p;
    sol.method = Method::construct;
    sol.vertices = std::move(res.vertices);
    sol.root_used = res.root;
    sol.claimed_bound = theorem_bound(p, g);
    if (res.drop_attempted && !res.drop_succeeded) ++sol.claimed_bound;
    return sol;
}

bool is_path_graph(const Graph& g) {
    if (g.cyclomatic() != 0) return false;
    for (int v = 0; v < g.n_vertices(); ++v)
        if (g.degree(v) > 2) return false;
    return true;
}

// R for the plain/edge resolving constructions: the branch-resolving choice,
// or the lowest leaf when there is none (lambda = 1).
std::vector<int> resolving_r_set(const Graph& g, const StructureProfile& prof) {
    if (prof.branch_resolving >= 1) return prof.branch_resolving_choice;
    return {prof.leaves.front()};
}

SolutionSet dim_like_construct(Problem p, const Graph& g,
                               std::optional<int> root_override) {
    StructureProfile prof = structure_profile(g);
    if (prof.cyclomatic == 0) {
        SolutionSet sol;
        sol.problem = p;
        sol.method = Method::construct;
        sol.claimed_bound = theorem_bound(p, g);
        if (g.n_vertices() == 1) return sol;
        if (is_path_graph(g))
            sol.vertices = {prof.leaves.front()};
        else
            sol.vertices = prof.branch_resolving_choice;
        return sol;
    }
    if (prof.min_degree >= 2) {
        SolutionSet sol = finish(p, g, core_min_deg2(g, root_override));
        return sol;
    }
    BaseDecomposition base = base_decomposition(g);
    return finish(p, g, core_min_deg1(g, base, resolving_r_set(g, prof), root_override));
}

} // namespace

SolutionSet doubly_resolving_construct(const Graph& g, std::optional<int> root_override) {
    if (g.min_degree() < 2)
        throw Error(ErrorCode::MinDegreeTooSmall,
                    "doubly resolving construction needs min degree 2");
    return finish(Problem::doubly, g, core_min_deg2(g, root_override));
}

SolutionSet resolving_construct(const Graph& g, std::optional<int> root_override) {
    return dim_like_construct(Problem::dim, g, root_override);
}

SolutionSet edge_resolving_construct(const Graph& g, std::optional<int> root_override) {
    return dim_like_construct(Problem::edim, g, root_override);
}

SolutionSet mixed_resolving_construct(const Graph& g, std::optional<int> root_override) {
    StructureProfile prof = structure_profile(g);
    if (prof.cyclomatic == 0) {
        SolutionSet sol;
        sol.problem = Problem::mdim;
        sol.method = Method::construct;
        sol.vertices = prof.leaves;
        sol.claimed_bound = theorem_bound(Problem::mdim, g);
        return sol;
    }
    if (prof.min_degree >= 2)
        return finish(Problem::mdim, g, core_min_deg2(g, root_override));
    BaseDecomposition base = base_decomposition(g);
    return finish(Problem::mdim, g, core_min_deg1(g, base, prof.leaves, root_override));
}

} // namespace cyclocover
