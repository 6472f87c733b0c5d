#ifndef CYCLOCOVER_SOLUTION_HPP
#define CYCLOCOVER_SOLUTION_HPP

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "cyclocover/graph.hpp"

namespace cyclocover {

using nlohmann::json;

enum class Problem { dim, edim, mdim, doubly, geodetic, meg, dem };
enum class Method { construct, xp, brute };
enum class PathMode { edge_cover, vertex_partition };

std::string to_string(Problem p);
std::string to_string(Method m);
std::string to_string(PathMode m);
Problem problem_from_string(const std::string& s);   // throws UnknownProblemTag
Method method_from_string(const std::string& s);     // throws InvalidSpec
PathMode path_mode_from_string(const std::string& s);

// A vertex set answering one of the set problems, with the bound the
// construction (or solver) claims for it.
struct SolutionSet {
    Problem problem = Problem::dim;
    Method method = Method::construct;
    std::vector<int> vertices; // ascending
    int claimed_bound = 0;
    std::optional<int> root_used;

    int size() const { return static_cast<int>(vertices.size()); }
    json to_json() const;
    static SolutionSet from_json(const json& j);
};

// An ordered collection of isometric paths, either covering all edges or
// partitioning the vertex set.
struct PathSystem {
    PathMode mode = PathMode::edge_cover;
    std::vector<std::vector<int>> paths;
    int claimed_bound = 0;

    int count() const { return static_cast<int>(paths.size()); }
    json to_json() const;
    static PathSystem from_json(const json& j);
};

// Pairing of the leaves plus the root used by the edge-cover construction.
struct LeafPairing {
    std::vector<int> members; // ascending
    std::vector<Edge> pairs;  // one member doubly paired when |members| is odd
};

struct VerificationReport {
    bool valid = true;
    json witness; // null when valid

    json to_json() const;
};

} // namespace cyclocover

#endif // CYCLOCOVER_SOLUTION_HPP
