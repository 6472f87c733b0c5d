#ifndef CYCLOCOVER_STRUCTURE_HPP
#define CYCLOCOVER_STRUCTURE_HPP

#include <map>
#include <vector>

#include "cyclocover/graph.hpp"

namespace cyclocover {

// Counts driving every size bound: cyclomatic number c, leaf count,
// per-branch-vertex leg counts, the branch-resolving number L and
// lambda = max(L, 1), plus one concrete branch-resolving set.
struct StructureProfile {
    int cyclomatic = 0;
    int leaf_count = 0;
    std::vector<int> leaves; // ascending
    int min_degree = 0;
    std::map<int, int> legs; // branch vertex (deg >= 3) -> number of legs
    int branch_resolving = 0; // L = sum over legs(v) > 1 of legs(v)-1
    int lambda = 1;           // max(L, 1)
    // One leaf per counted leg: for each branch vertex with legs(v) > 1 the
    // leaf of every leg except the longest (ties: drop the leg with the
    // lowest leaf id). Exactly L vertices, ascending.
    std::vector<int> branch_resolving_choice;
};

StructureProfile structure_profile(const Graph& g);

struct PendantTree {
    std::vector<int> vertices; // peeled vertices only (attachment excluded), ascending
    std::vector<Edge> edges;   // includes the edge into the attachment, sorted
};

// Result of iteratively deleting degree-1 vertices. Original vertex ids are
// kept throughout; the base graph is the induced subgraph on base_vertices.
struct BaseDecomposition {
    std::vector<int> base_vertices; // ascending; empty for trees
    std::vector<Edge> base_edges;   // sorted
    std::map<int, PendantTree> pendant_trees; // attachment -> hanging tree
    bool is_tree_input = false;
    std::vector<char> in_base;   // size n
    std::vector<int> attachment; // base vertex reached by peeled vertices; self on base; -1 for trees
};

BaseDecomposition base_decomposition(const Graph& g);

// Adjacency of the induced subgraph on base vertices, original ids
// (non-members get empty lists).
std::vector<std::vector<int>> base_adjacency(const Graph& g, const BaseDecomposition& base);

// Cut vertices, ascending. The overload on an adjacency structure works on a
// connected vertex subset with original ids (start gives any member).
std::vector<int> articulation_points(const Graph& g);
std::vector<int> articulation_points(const std::vector<std::vector<int>>& adj, int start);

// n >= 3 and no cut vertex
bool is_biconnected(const Graph& g);

// on_cycle[v] = some edge at v is not a bridge, i.e. v lies on a cycle
std::vector<char> vertices_on_cycles(const Graph& g);

// Orientation of every peeled part toward the base (or toward a chosen root
// when the whole graph is a tree): parent steps along the unique path to the
// attachment. Used for pendant path walks and leaf pairing.
struct PendantForest {
    std::vector<int> parent; // toward attachment; -1 on base vertices / the root
    std::vector<int> depth;  // 0 on base vertices / the root
    std::vector<int> att;    // attachment base vertex (self on base; root for trees)
};

PendantForest pendant_forest(const Graph& g, const BaseDecomposition& base, int tree_root = 0);

} // namespace cyclocover

#endif // CYCLOCOVER_STRUCTURE_HPP
