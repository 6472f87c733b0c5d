#include "cyclocover/oracle.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "cyclocover/bfs.hpp"
#include "cyclocover/bounds.hpp"
#include "cyclocover/structure.hpp"

namespace cyclocover {

DistMatrix all_pairs_distances(const Graph& g) {
    DistMatrix d(g.n_vertices());
    for (int v = 0; v < g.n_vertices(); ++v) d[v] = bfs_distances(g, v);
    return d;
}

bool edge_on_all_shortest_paths(const Graph& g, Edge e, int x, int y) {
    e = make_edge(e.first, e.second);
    if (g.edge_index(e.first, e.second) < 0)
        throw Error(ErrorCode::VertexOutOfRange, "edge not in graph");
    auto base = bfs_distances(g, x);
    auto removed = bfs_distances_avoiding(g, x, e);
    return removed[y] < 0 || removed[y] > base[y];
}

namespace {

struct Ctx {
    const Graph& g;
    DistMatrix dist;
    // deletion distances per edge index and source; built only for the
    // enumerating solvers where many candidates share them
    std::vector<DistMatrix> cube;
    bool has_cube = false;
};

Ctx make_ctx(const Graph& g, bool need_cube) {
    Ctx ctx{g, all_pairs_distances(g), {}, false};
    if (need_cube) {
        ctx.cube.resize(g.n_edges());
        for (int ei = 0; ei < g.n_edges(); ++ei) {
            ctx.cube[ei].resize(g.n_vertices());
            for (int x = 0; x < g.n_vertices(); ++x)
                ctx.cube[ei][x] = bfs_distances_avoiding(g, x, g.edges()[ei]);
        }
        ctx.has_cube = true;
    }
    return ctx;
}

json edge_json(Edge e) { return json::array({e.first, e.second}); }

bool check_dim(const Ctx& c, const std::vector<int>& s, json* w) {
    const int n = c.g.n_vertices();
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y) {
            bool resolved = false;
            for (int v : s)
                if (c.dist[v][x] != c.dist[v][y]) {
                    resolved = true;
                    break;
                }
            if (!resolved) {
                if (w) *w = {{"kind", "unresolved_vertices"}, {"x", x}, {"y", y}};
                return false;
            }
        }
    return true;
}

int edge_dist(const Ctx& c, int v, Edge e) {
    return std::min(c.dist[v][e.first], c.dist[v][e.second]);
}

bool check_edim(const Ctx& c, const std::vector<int>& s, json* w) {
    const auto& edges = c.g.edges();
    for (size_t i = 0; i < edges.size(); ++i)
        for (size_t j = i + 1; j < edges.size(); ++j) {
            bool resolved = false;
            for (int v : s)
                if (edge_dist(c, v, edges[i]) != edge_dist(c, v, edges[j])) {
                    resolved = true;
                    break;
                }
            if (!resolved) {
                if (w)
                    *w = {{"kind", "unresolved_edges"},
                          {"e", edge_json(edges[i])},
                          {"f", edge_json(edges[j])}};
                return false;
            }
        }
    return true;
}

bool check_mdim(const Ctx& c, const std::vector<int>& s, json* w) {
    // items: vertices 0..n-1, then edges by index
    const int n = c.g.n_vertices();
    const auto& edges = c.g.edges();
    const int items = n + c.g.n_edges();
    auto item_dist = [&](int v, int item) {
        return item < n ? c.dist[v][item] : edge_dist(c, v, edges[item - n]);
    };
    for (int i = 0; i < items; ++i)
        for (int j = i + 1; j < items; ++j) {
            bool resolved = false;
            for (int v : s)
                if (item_dist(v, i) != item_dist(v, j)) {
                    resolved = true;
                    break;
                }
            if (!resolved) {
                if (w) {
                    if (j < n)
                        *w = {{"kind", "unresolved_vertices"}, {"x", i}, {"y", j}};
                    else if (i >= n)
                        *w = {{"kind", "unresolved_edges"},
                              {"e", edge_json(edges[i - n])},
                              {"f", edge_json(edges[j - n])}};
                    else
                        *w = {{"kind", "unresolved_vertex_edge"},
                              {"vertex", i},
                              {"edge", edge_json(edges[j - n])}};
                }
                return false;
            }
        }
    return true;
}

bool check_doubly(const Ctx& c, const std::vector<int>& s, json* w) {
    const int n = c.g.n_vertices();
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y) {
            bool resolved = false;
            if (!s.empty()) {
                int first = c.dist[s[0]][x] - c.dist[s[0]][y];
                for (size_t i = 1; i < s.size(); ++i)
                    if (c.dist[s[i]][x] - c.dist[s[i]][y] != first) {
                        resolved = true;
                        break;
                    }
            }
            if (!resolved) {
                if (w) *w = {{"kind", "not_doubly_resolved"}, {"x", x}, {"y", y}};
                return false;
            }
        }
    return true;
}

bool check_geodetic(const Ctx& c, const std::vector<int>& s, json* w) {
    const int n = c.g.n_vertices();
    for (int v = 0; v < n; ++v) {
        bool covered = false;
        for (size_t i = 0; i < s.size() && !covered; ++i)
            for (size_t j = i; j < s.size(); ++j)
                if (c.dist[s[i]][v] + c.dist[v][s[j]] == c.dist[s[i]][s[j]]) {
                    covered = true;
                    break;
                }
        if (!covered) {
            if (w) *w = {{"kind", "uncovered_vertex"}, {"vertex", v}};
            return false;
        }
    }
    return true;
}

bool check_meg(const Ctx& c, const std::vector<int>& s, json* w) {
    for (int ei = 0; ei < c.g.n_edges(); ++ei) {
        bool monitored = false;
        for (size_t i = 0; i < s.size() && !monitored; ++i) {
            int x = s[i];
            std::vector<int> local;
            const std::vector<int>& dd =
                c.has_cube ? c.cube[ei][x]
                           : (local = bfs_distances_avoiding(c.g, x, c.g.edges()[ei]), local);
            for (int y : s)
                if (dd[y] < 0 || dd[y] > c.dist[x][y]) {
                    monitored = true;
                    break;
                }
        }
        if (!monitored) {
            if (w) *w = {{"kind", "unmonitored_edge"}, {"edge", edge_json(c.g.edges()[ei])}};
            return false;
        }
    }
    return true;
}

bool check_dem(const Ctx& c, const std::vector<int>& s, json* w) {
    const int n = c.g.n_vertices();
    for (int ei = 0; ei < c.g.n_edges(); ++ei) {
        bool monitored = false;
        for (size_t i = 0; i < s.size() && !monitored; ++i) {
            int x = s[i];
            std::vector<int> local;
            const std::vector<int>& dd =
                c.has_cube ? c.cube[ei][x]
                           : (local = bfs_distances_avoiding(c.g, x, c.g.edges()[ei]), local);
            for (int y = 0; y < n; ++y)
                if (dd[y] < 0 || dd[y] > c.dist[x][y]) {
                    monitored = true;
                    break;
                }
        }
        if (!monitored) {
            if (w) *w = {{"kind", "unmonitored_edge"}, {"edge", edge_json(c.g.edges()[ei])}};
            return false;
        }
    }
    return true;
}

bool check(Problem p, const Ctx& c, const std::vector<int>& s, json* w) {
    switch (p) {
    case Problem::dim: return check_dim(c, s, w);
    case Problem::edim: return check_edim(c, s, w);
    case Problem::mdim: return check_mdim(c, s, w);
    case Problem::doubly: return check_doubly(c, s, w);
    case Problem::geodetic: return check_geodetic(c, s, w);
    case Problem::meg: return check_meg(c, s, w);
    case Problem::dem: return check_dem(c, s, w);
    }
    throw Error(ErrorCode::UnknownProblemTag, "bad problem enum");
}

std::vector<int> sorted_unique(std::vector<int> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

// sum of C(n,0..k), clamped to cap+1
unsigned long long cumulative_combinations(int n, int k, unsigned long long cap) {
    unsigned long long total = 0, binom = 1;
    for (int i = 0; i <= k; ++i) {
        total += binom;
        if (total > cap) return cap + 1;
        if (i < k) {
            if (binom > cap * 2) return cap + 1;
            binom = binom * static_cast<unsigned long long>(n - i) /
                    static_cast<unsigned long long>(i + 1);
        }
    }
    return total;
}

bool next_combination(std::vector<int>& idx, int n) {
    const int k = static_cast<int>(idx.size());
    for (int i = k - 1; i >= 0; --i) {
        if (idx[i] < n - k + i) {
            ++idx[i];
            for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
            return true;
        }
    }
    return false;
}

} // namespace

VerificationReport verify_set(Problem p, const Graph& g, const std::vector<int>& s_in) {
    for (int v : s_in)
        if (v < 0 || v >= g.n_vertices())
            throw Error(ErrorCode::VertexOutOfRange,
                        "solution vertex " + std::to_string(v) + " with n=" +
                            std::to_string(g.n_vertices()));
    std::vector<int> s = sorted_unique(s_in);
    Ctx ctx = make_ctx(g, false);
    VerificationReport report;
    json witness;
    if (!check(p, ctx, s, &witness)) {
        report.valid = false;
        report.witness = witness;
    }
    return report;
}

VerificationReport verify_path_system(const Graph& g, const PathSystem& ps) {
    VerificationReport report;
    auto fail = [&](json w) {
        report.valid = false;
        report.witness = std::move(w);
        return report;
    };

    DistMatrix dist = all_pairs_distances(g);
    for (size_t i = 0; i < ps.paths.size(); ++i) {
        const auto& path = ps.paths[i];
        if (path.empty()) return fail({{"kind", "empty_path"}, {"index", i}});
        std::vector<int> seen = path;
        std::sort(seen.begin(), seen.end());
        bool ok = std::adjacent_find(seen.begin(), seen.end()) == seen.end();
        for (int v : path)
            if (v < 0 || v >= g.n_vertices())
                throw Error(ErrorCode::VertexOutOfRange, "path vertex out of range");
        for (size_t j = 0; ok && j + 1 < path.size(); ++j)
            ok = g.has_edge(path[j], path[j + 1]);
        if (ok)
            ok = static_cast<int>(path.size()) - 1 == dist[path.front()][path.back()];
        if (!ok)
            return fail({{"kind", "non_isometric_path"}, {"index", i}, {"path", path}});
    }

    if (ps.mode == PathMode::edge_cover) {
        std::vector<char> covered(g.n_edges(), 0);
        for (const auto& path : ps.paths)
            for (size_t j = 0; j + 1 < path.size(); ++j)
                covered[g.edge_index(path[j], path[j + 1])] = 1;
        for (int ei = 0; ei < g.n_edges(); ++ei)
            if (!covered[ei])
                return fail({{"kind", "uncovered_edge"}, {"edge", edge_json(g.edges()[ei])}});
    } else {
        std::vector<int> owner(g.n_vertices(), -1);
        for (size_t i = 0; i < ps.paths.size(); ++i)
            for (int v : ps.paths[i]) {
                if (owner[v] >= 0)
                    return fail({{"kind", "overlapping_paths"}, {"vertex", v}});
                owner[v] = static_cast<int>(i);
            }
        for (int v = 0; v < g.n_vertices(); ++v)
            if (owner[v] < 0) return fail({{"kind", "uncovered_vertex"}, {"vertex", v}});
    }
    return report;
}

SolutionSet brute_force_min_set(Problem p, const Graph& g, int limit) {
    const int n = g.n_vertices();
    if (limit < 0 || limit > n) limit = n;
    const unsigned long long cap = 8'000'000ULL;
    if (cumulative_combinations(n, limit, cap) > cap)
        throw Error(ErrorCode::LimitExceeded,
                    "brute-force enumeration infeasible at n=" + std::to_string(n));
    Ctx ctx = make_ctx(g, p == Problem::meg || p == Problem::dem);

    for (int k = 0; k <= limit; ++k) {
        std::vector<int> idx(k);
        std::iota(idx.begin(), idx.end(), 0);
        do {
            if (check(p, ctx, idx, nullptr)) {
                SolutionSet sol;
                sol.problem = p;
                sol.method = Method::brute;
                sol.vertices = idx;
                sol.claimed_bound = k;
                return sol;
            }
        } while (k > 0 && next_combination(idx, n));
    }
    throw Error(ErrorCode::LimitExceeded, "no valid set within the size limit");
}

std::vector<std::vector<int>> enumerate_isometric_paths(const Graph& g,
                                                        bool include_singletons) {
    const size_t path_cap = 200000;
    DistMatrix dist = all_pairs_distances(g);
    std::vector<std::vector<int>> out;
    if (include_singletons)
        for (int v = 0; v < g.n_vertices(); ++v) out.push_back({v});

    std::vector<int> cur;
    std::function<void(int, int)> extend = [&](int at, int target) {
        if (at == target) {
            out.push_back(cur);
            if (out.size() > path_cap)
                throw Error(ErrorCode::LimitExceeded, "too many isometric paths");
            return;
        }
        for (int w : g.neighbors(at))
            if (dist[w][target] == dist[at][target] - 1) {
                cur.push_back(w);
                extend(w, target);
                cur.pop_back();
            }
    };
    for (int u = 0; u < g.n_vertices(); ++u)
        for (int v = u + 1; v < g.n_vertices(); ++v) {
            cur = {u};
            extend(u, v);
        }
    return out;
}

namespace {

PathSystem min_partition(const Graph& g) {
    const int n = g.n_vertices();
    if (n > 24) throw Error(ErrorCode::LimitExceeded, "partition solver needs n <= 24");
    auto paths = enumerate_isometric_paths(g, true);
    const int np = static_cast<int>(paths.size());
    std::vector<std::uint32_t> vmask(np, 0);
    std::vector<std::vector<int>> at(n);
    for (int i = 0; i < np; ++i) {
        for (int v : paths[i]) vmask[i] |= 1u << v;
        for (int v : paths[i]) at[v].push_back(i);
    }
    std::vector<std::int8_t> memo(std::size_t(1) << n, -1);
    memo[0] = 0;
    std::function<int(std::uint32_t)> solve = [&](std::uint32_t mask) -> int {
        if (memo[mask] >= 0) return memo[mask];
        int v = std::countr_zero(mask);
        int best = 127;
        for (int pid : at[v])
            if ((vmask[pid] & mask) == vmask[pid])
                best = std::min(best, 1 + solve(mask & ~vmask[pid]));
        memo[mask] = static_cast<std::int8_t>(best);
        return best;
    };
    std::uint32_t full = n == 32 ? ~0u : (1u << n) - 1;
    int opt = solve(full);

    PathSystem ps;
    ps.mode = PathMode::vertex_partition;
    ps.claimed_bound = opt;
    std::uint32_t mask = full;
    while (mask) {
        int v = std::countr_zero(mask);
        for (int pid : at[v])
            if ((vmask[pid] & mask) == vmask[pid] &&
                memo[mask] == 1 + memo[mask & ~vmask[pid]]) {
                ps.paths.push_back(paths[pid]);
                mask &= ~vmask[pid];
                break;
            }
    }
    return ps;
}

PathSystem min_edge_cover(const Graph& g) {
    const int m = g.n_edges();
    if (m > 24) throw Error(ErrorCode::LimitExceeded, "edge-cover solver needs m <= 24");
    auto paths = enumerate_isometric_paths(g, false);
    const int np = static_cast<int>(paths.size());
    std::vector<std::uint32_t> emask(np, 0);
    std::vector<std::vector<int>> at(m);
    for (int i = 0; i < np; ++i) {
        const auto& path = paths[i];
        for (size_t j = 0; j + 1 < path.size(); ++j) {
            int ei = g.edge_index(path[j], path[j + 1]);
            emask[i] |= 1u << ei;
        }
        for (int ei = 0; ei < m; ++ei)
            if (emask[i] & (1u << ei)) at[ei].push_back(i);
    }
    std::vector<std::int8_t> memo(std::size_t(1) << m, -1);
    memo[0] = 0;
    std::function<int(std::uint32_t)> solve = [&](std::uint32_t mask) -> int {
        if (memo[mask] >= 0) return memo[mask];
        int e = std::countr_zero(mask);
        int best = 127;
        for (int pid : at[e]) best = std::min(best, 1 + solve(mask & ~emask[pid]));
        memo[mask] = static_cast<std::int8_t>(best);
        return best;
    };
    std::uint32_t full = m == 0 ? 0 : (m == 32 ? ~0u : (1u << m) - 1);
    int opt = full ? solve(full) : 0;

    PathSystem ps;
    ps.mode = PathMode::edge_cover;
    ps.claimed_bound = opt;
    std::uint32_t mask = full;
    while (mask) {
        int e = std::countr_zero(mask);
        for (int pid : at[e])
            if (memo[mask] == 1 + memo[mask & ~emask[pid]]) {
                ps.paths.push_back(paths[pid]);
                mask &= ~emask[pid];
                break;
            }
    }
    return ps;
}

} // namespace

PathSystem brute_force_min_path_system(PathMode mode, const Graph& g) {
    return mode == PathMode::vertex_partition ? min_partition(g) : min_edge_cover(g);
}

SolutionSet xp_solve(Problem p, const Graph& g) {
    if (p == Problem::doubly)
        throw Error(ErrorCode::UnknownProblemTag, "xp_solve does not handle doubly");
    StructureProfile prof = structure_profile(g);

    std::vector<int> forced;
    int a = 2;
    switch (p) {
    case Problem::geodetic:
    case Problem::mdim:
        forced = prof.leaves;
        break;
    case Problem::meg:
        forced = prof.leaves;
        a = 3;
        break;
    case Problem::dem:
        a = 1;
        break;
    case Problem::dim:
    case Problem::edim:
        forced = prof.branch_resolving_choice;
        break;
    default:
        break;
    }
    // a*c alone cannot realize the +1 cases (dem on trees, the no-cut-vertex
    // bounds, lambda with L = 0), so the extension search goes one deeper.
    const int budget = a * prof.cyclomatic + 1;

    std::vector<int> rest;
    std::vector<char> is_forced(g.n_vertices(), 0);
    for (int v : forced) is_forced[v] = 1;
    for (int v = 0; v < g.n_vertices(); ++v)
        if (!is_forced[v]) rest.push_back(v);
    const int nr = static_cast<int>(rest.size());
    const int kmax = std::min(budget, nr);

    const unsigned long long cap = 8'000'000ULL;
    if (cumulative_combinations(nr, kmax, cap) > cap)
        throw Error(ErrorCode::LimitExceeded,
                    "xp enumeration infeasible: budget " + std::to_string(budget) +
                        " over " + std::to_string(nr) + " vertices");

    Ctx ctx = make_ctx(g, p == Problem::meg || p == Problem::dem);
    for (int k = 0; k <= kmax; ++k) {
        std::vector<int> idx(k);
        std::iota(idx.begin(), idx.end(), 0);
        do {
            std::vector<int> chosen(k);
            for (int i = 0; i < k; ++i) chosen[i] = rest[idx[i]];
            std::vector<int> s;
            std::merge(forced.begin(), forced.end(), chosen.begin(), chosen.end(),
                       std::back_inserter(s));
            if (check(p, ctx, s, nullptr)) {
                SolutionSet sol;
                sol.problem = p;
                sol.method = Method::xp;
                sol.vertices = s;
                sol.claimed_bound = theorem_bound(p, g);
                return sol;
            }
        } while (k > 0 && next_combination(idx, nr));
    }
    throw Error(ErrorCode::InternalInvariantViolation,
                "no valid extension within the guaranteed budget");
}

} // namespace cyclocover
