#ifndef CYCLOCOVER_INSTANCES_HPP
#define CYCLOCOVER_INSTANCES_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cyclocover/graph.hpp"

namespace cyclocover {

enum class Family { bouquet, k2k_plus_edge, theta, cycle, path, spider, random_cyclomatic };

std::string to_string(Family f);
Family family_from_string(const std::string& s); // throws InvalidSpec

struct FamilySpec {
    Family family = Family::cycle;
    // bouquet: k, k cycle lengths, l, l path lengths
    // k2k_plus_edge: k       theta: a, b, c (internal vertices per strand)
    // cycle/path: n          spider: t      random_cyclomatic: n, c
    std::vector<long long> parameters;
    std::optional<std::uint64_t> seed;
};

// k odd cycles and l pendant paths glued at hub vertex 0. Cycle vertices come
// first (in the given order), then path vertices. cycle_lengths[i] counts the
// cycle's vertices, path_lengths[j] the pendant path's vertices.
Graph gen_bouquet(const std::vector<int>& cycle_lengths, const std::vector<int>& path_lengths);

// K_{2,k} plus an edge joining the two degree-k vertices (ids 0 and 1).
Graph gen_k2k_plus_edge(int k);

Graph gen_family(const FamilySpec& spec);

// Uniform random labeled tree (Pruefer decode) plus c distinct extra edges.
// Bit-reproducible for a fixed seed.
Graph gen_random_cyclomatic(int n, int c, std::uint64_t seed);

// Fixed seed-splitting rule used by the bench (and anything that derives
// per-trial seeds from a master seed).
std::uint64_t split_seed(std::uint64_t master, std::uint64_t index);

} // namespace cyclocover

#endif // CYCLOCOVER_INSTANCES_HPP
