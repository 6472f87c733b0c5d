#ifndef CYCLOCOVER_METRIC_DIM_HPP
#define CYCLOCOVER_METRIC_DIM_HPP

#include <optional>

#include "cyclocover/graph.hpp"
#include "cyclocover/solution.hpp"

namespace cyclocover {

// {root} plus the endpoints of a good edge set; the root is dropped when it
// is a cut-vertex and the drop check passes. Requires min degree >= 2.
SolutionSet doubly_resolving_construct(const Graph& g,
                                       std::optional<int> root_override = {});

// Resolving set within lambda + 2c (min degree 1) or 2c+1 / 2c (min degree 2,
// by cut-vertex presence). Trees use one path endpoint or the
// branch-resolving choice.
SolutionSet resolving_construct(const Graph& g, std::optional<int> root_override = {});

// Same skeleton as resolving_construct; the result is an edge resolving set.
SolutionSet edge_resolving_construct(const Graph& g,
                                     std::optional<int> root_override = {});

// Trees: all leaves. Otherwise leaves join the good-edge-set endpoints;
// bound l + 2c, or 2c+1 / 2c when leafless.
SolutionSet mixed_resolving_construct(const Graph& g,
                                      std::optional<int> root_override = {});

// How many components of G - r contain an element of s (r itself ignored).
// The root may only be dropped when this is at least 2.
int components_with_elements(const Graph& g, int r, const std::vector<int>& s);

} // namespace cyclocover

#endif // CYCLOCOVER_METRIC_DIM_HPP
