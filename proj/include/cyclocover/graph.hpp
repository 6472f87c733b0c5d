#ifndef CYCLOCOVER_GRAPH_HPP
#define CYCLOCOVER_GRAPH_HPP

#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cyclocover/errors.hpp"

namespace cyclocover {

using Edge = std::pair<int, int>; // always stored with first < second

inline Edge make_edge(int u, int v) { return u < v ? Edge{u, v} : Edge{v, u}; }

// Simple undirected connected graph on vertices 0..n-1. Adjacency lists are
// kept sorted ascending so that every tie-break in the library (BFS parents,
// geodesic choices, subset enumeration) is deterministic.
class Graph {
public:
    // Validates: no self-loops, no duplicates, all endpoints in range,
    // connected. Throws Error otherwise.
    Graph(int n, std::vector<Edge> edges);

    int n_vertices() const { return n_; }
    int n_edges() const { return static_cast<int>(edges_.size()); }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    int min_degree() const;
    // m - n + 1 for a connected graph
    int cyclomatic() const { return n_edges() - n_vertices() + 1; }

    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    const std::vector<std::vector<int>>& adjacency() const { return adj_; }
    // sorted list of normalized edges
    const std::vector<Edge>& edges() const { return edges_; }

    bool has_edge(int u, int v) const;
    // index into edges() for a normalized edge; -1 if absent
    int edge_index(int u, int v) const;

private:
    int n_;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> adj_;
};

// Edge-list text format: '#' comment lines anywhere, first data line "n m",
// then m lines "u v". LF or CRLF. Throws Error with the codes
// MalformedLine / VertexOutOfRange / DuplicateEdge / SelfLoop / Disconnected.
Graph parse_graph(std::istream& in);
Graph parse_graph(std::string_view text);

// Inverse of parse_graph: "n m" header plus one sorted edge per line.
std::string format_edge_list(const Graph& g);

} // namespace cyclocover

#endif // CYCLOCOVER_GRAPH_HPP
