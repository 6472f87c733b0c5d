#ifndef CYCLOCOVER_ORACLE_HPP
#define CYCLOCOVER_ORACLE_HPP

#include <vector>

#include "cyclocover/graph.hpp"
#include "cyclocover/solution.hpp"

namespace cyclocover {

using DistMatrix = std::vector<std::vector<int>>;

DistMatrix all_pairs_distances(const Graph& g);

// Exhaustive check of the defining property of each solution concept.
// Invalid reports carry a re-checkable witness.
VerificationReport verify_set(Problem p, const Graph& g, const std::vector<int>& s);

// true iff removing e strictly increases (or disconnects) the x-y distance,
// which happens exactly when e lies on every shortest x-y path.
bool edge_on_all_shortest_paths(const Graph& g, Edge e, int x, int y);

VerificationReport verify_path_system(const Graph& g, const PathSystem& ps);

// All isometric paths of g: for every vertex pair, every geodesic, expanded
// along distance-decreasing edges in ascending neighbor order. Optionally
// with the single-vertex paths (needed for partitions).
std::vector<std::vector<int>> enumerate_isometric_paths(const Graph& g,
                                                        bool include_singletons);

// Lexicographically smallest minimum-cardinality valid set; sizes tried in
// increasing order, combinations per size in lexicographic order. Throws
// LimitExceeded when the enumeration would be infeasible or when no valid
// set of size <= limit exists. limit < 0 means n.
SolutionSet brute_force_min_set(Problem p, const Graph& g, int limit = -1);

// Exact minimum isometric path edge-cover / vertex-partition by dynamic
// programming over covered-element bitmasks. Desk scale only.
PathSystem brute_force_min_path_system(PathMode mode, const Graph& g);

// Forced part (all leaves for geodetic/meg/mdim, nothing for dem, the
// branch-resolving choice for dim/edim) plus the smallest extension found by
// subset enumeration up to the per-problem budget a*c+1.
SolutionSet xp_solve(Problem p, const Graph& g);

} // namespace cyclocover

#endif // CYCLOCOVER_ORACLE_HPP
