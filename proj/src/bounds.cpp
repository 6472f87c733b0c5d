#include "cyclocover/bounds.hpp"

#include "cyclocover/structure.hpp"

namespace cyclocover {

int theorem_bound(Problem p, const Graph& g) {
    StructureProfile prof = structure_profile(g);
    const int c = prof.cyclomatic;
    const int l = prof.leaf_count;
    const bool has_cut = !articulation_points(g).empty();
    const bool tree = c == 0;

    switch (p) {
    case Problem::dim:
    case Problem::edim:
        if (prof.min_degree >= 2) return has_cut ? 2 * c : 2 * c + 1;
        return prof.lambda + 2 * c;
    case Problem::mdim:
        if (prof.min_degree >= 2) return has_cut ? 2 * c : 2 * c + 1;
        return l + 2 * c;
    case Problem::doubly:
        return has_cut ? 2 * c : 2 * c + 1;
    case Problem::geodetic:
        // The no-cut-vertex formula 2c+1 presumes leafless graphs; with
        // l folded in it also covers the single-edge graph.
        return has_cut ? 2 * c + l : 2 * c + l + 1;
    case Problem::meg:
        if (tree) return l;
        return has_cut ? 3 * c + l : 3 * c + l + 1;
    case Problem::dem:
        return c + 1;
    }
    return 0;
}

int path_theorem_bound(PathMode mode, const Graph& g) {
    StructureProfile prof = structure_profile(g);
    const int c = prof.cyclomatic;
    const int l = prof.leaf_count;
    if (mode == PathMode::edge_cover) return 3 * c + (l + 2) / 2;
    if (g.n_vertices() == 1) return 1;
    return 2 * c + l;
}

} // namespace cyclocover
