#ifndef CYCLOCOVER_PATH_COVER_HPP
#define CYCLOCOVER_PATH_COVER_HPP

#include <vector>

#include "cyclocover/graph.hpp"
#include "cyclocover/solution.hpp"
#include "cyclocover/structure.hpp"

namespace cyclocover {

// Isometric path edge-cover of size at most 3c + ceil((l+1)/2).
PathSystem ipec_construct(const Graph& g);

// Isometric path partition of size at most 2c + l.
PathSystem ipp_construct(const Graph& g);

// Pair the members (leaves plus the pairing root) consecutively by id; an
// odd member count pairs the last member with the first.
LeafPairing initial_leaf_pairing(std::vector<int> members);

struct RepairResult {
    LeafPairing pairing;
    std::vector<std::vector<int>> paths; // one isometric path per pair
};

// Swaps pairs across an uncovered pendant bridge until every edge outside
// the base graph lies on some pair path. The covered count strictly grows
// each round. tree_root names the pairing root for tree inputs.
RepairResult leaf_pairing_repair(const Graph& g, const BaseDecomposition& base,
                                 const LeafPairing& pairing, int tree_root = 0);

} // namespace cyclocover

#endif // CYCLOCOVER_PATH_COVER_HPP
