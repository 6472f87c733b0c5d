#ifndef CYCLOCOVER_BOUNDS_HPP
#define CYCLOCOVER_BOUNDS_HPP

#include "cyclocover/graph.hpp"
#include "cyclocover/solution.hpp"

namespace cyclocover {

// The size bound the constructions guarantee for a problem on this graph,
// as a function of the cyclomatic number c, the leaf count l, lambda and the
// presence of a cut-vertex. Single source of truth for constructions, the
// exact solvers and the bench.
int theorem_bound(Problem p, const Graph& g);

int path_theorem_bound(PathMode mode, const Graph& g);

} // namespace cyclocover

#endif // CYCLOCOVER_BOUNDS_HPP
