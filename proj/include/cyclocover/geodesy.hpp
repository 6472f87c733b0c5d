#ifndef CYCLOCOVER_GEODESY_HPP
#define CYCLOCOVER_GEODESY_HPP

#include <optional>

#include "cyclocover/graph.hpp"
#include "cyclocover/solution.hpp"

namespace cyclocover {

// Leaves plus good-edge-set endpoints (plus the root when the graph is
// biconnected); within 2c + l with a cut-vertex, 2c + 1 otherwise.
SolutionSet geodetic_construct(const Graph& g, std::optional<int> root_override = {});

// Monitoring edge-geodetic set within 3c + l (+1 without a cut-vertex); trees
// get exactly their leaves.
SolutionSet meg_construct(const Graph& g, std::optional<int> root_override = {});

// Distance-edge-monitoring set of size at most c + 1, built on the base graph.
SolutionSet dem_construct(const Graph& g, std::optional<int> root_override = {});

} // namespace cyclocover

#endif // CYCLOCOVER_GEODESY_HPP
