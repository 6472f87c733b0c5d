#include "cyclocover/graph.hpp"

#include <algorithm>
#include <istream>
#include <queue>
#include <set>
#include <sstream>

namespace cyclocover {

const char* error_code_name(ErrorCode code) {
    switch (code) {
    case ErrorCode::MalformedLine: return "MalformedLine";
    case ErrorCode::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorCode::DuplicateEdge: return "DuplicateEdge";
    case ErrorCode::SelfLoop: return "SelfLoop";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::MinDegreeTooSmall: return "MinDegreeTooSmall";
    case ErrorCode::EvenCycleLength: return "EvenCycleLength";
    case ErrorCode::TooManyEdges: return "TooManyEdges";
    case ErrorCode::InvalidSpec: return "InvalidSpec";
    case ErrorCode::UnknownProblemTag: return "UnknownProblemTag";
    case ErrorCode::LimitExceeded: return "LimitExceeded";
    case ErrorCode::InternalInvariantViolation: return "InternalInvariantViolation";
    }
    return "Error";
}

Graph::Graph(int n, std::vector<Edge> edges) : n_(n) {
    if (n <= 0)
        throw Error(ErrorCode::MalformedLine, "vertex count must be positive");
    std::set<Edge> seen;
    for (auto& e : edges) {
        if (e.first == e.second)
            throw Error(ErrorCode::SelfLoop,
                        "self-loop at vertex " + std::to_string(e.first));
        if (e.first < 0 || e.second < 0 || e.first >= n || e.second >= n)
            throw Error(ErrorCode::VertexOutOfRange,
                        "edge " + std::to_string(e.first) + " " +
                            std::to_string(e.second) + " with n=" + std::to_string(n));
        e = make_edge(e.first, e.second);
        if (!seen.insert(e).second)
            throw Error(ErrorCode::DuplicateEdge,
                        "edge " + std::to_string(e.first) + " " +
                            std::to_string(e.second) + " given twice");
    }
    edges_.assign(seen.begin(), seen.end());
    adj_.assign(n_, {});
    for (const auto& [u, v] : edges_) {
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    for (auto& nb : adj_) std::sort(nb.begin(), nb.end());

    // connectivity
    std::vector<char> vis(n_, 0);
    std::queue<int> q;
    q.push(0);
    vis[0] = 1;
    int reached = 1;
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int w : adj_[u])
            if (!vis[w]) {
                vis[w] = 1;
                ++reached;
                q.push(w);
            }
    }
    if (reached != n_)
        throw Error(ErrorCode::Disconnected,
                    std::to_string(n_ - reached) + " vertices unreachable from 0");
}

int Graph::min_degree() const {
    int d = n_ == 1 ? 0 : n_;
    for (int v = 0; v < n_; ++v) d = std::min(d, degree(v));
    return d;
}

bool Graph::has_edge(int u, int v) const {
    if (u < 0 || v < 0 || u >= n_ || v >= n_) return false;
    const auto& nb = adj_[u];
    return std::binary_search(nb.begin(), nb.end(), v);
}

int Graph::edge_index(int u, int v) const {
    Edge e = make_edge(u, v);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
    if (it == edges_.end() || *it != e) return -1;
    return static_cast<int>(it - edges_.begin());
}

namespace {

// Pulls the next data line (skipping blanks and '#' comments), strips CR.
bool next_data_line(std::istream& in, std::string& line) {
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        size_t pos = line.find_first_not_of(" \t");
        if (pos == std::string::npos) continue;
        if (line[pos] == '#') continue;
        return true;
    }
    return false;
}

std::vector<long long> parse_ints(const std::string& line, size_t expect) {
    std::istringstream ss(line);
    std::vector<long long> vals;
    long long x;
    while (ss >> x) vals.push_back(x);
    std::string rest;
    if (!ss.eof() && ss.fail()) {
        throw Error(ErrorCode::MalformedLine, "non-integer token in line: " + line);
    }
    if (vals.size() != expect)
        throw Error(ErrorCode::MalformedLine,
                    "expected " + std::to_string(expect) + " integers in line: " + line);
    return vals;
}

} // namespace

Graph parse_graph(std::istream& in) {
    std::string line;
    if (!next_data_line(in, line))
        throw Error(ErrorCode::MalformedLine, "missing header line \"n m\"");
    auto header = parse_ints(line, 2);
    long long n = header[0], m = header[1];
    if (n <= 0 || m < 0)
        throw Error(ErrorCode::MalformedLine, "bad header: " + line);
    std::vector<Edge> edges;
    edges.reserve(static_cast<size_t>(m));
    for (long long i = 0; i < m; ++i) {
        if (!next_data_line(in, line))
            throw Error(ErrorCode::MalformedLine,
                        "expected " + std::to_string(m) + " edge lines, got " +
                            std::to_string(i));
        auto uv = parse_ints(line, 2);
        if (uv[0] < 0 || uv[0] >= n || uv[1] < 0 || uv[1] >= n)
            throw Error(ErrorCode::VertexOutOfRange, "edge line: " + line);
        edges.emplace_back(static_cast<int>(uv[0]), static_cast<int>(uv[1]));
    }
    if (next_data_line(in, line))
        throw Error(ErrorCode::MalformedLine, "unexpected extra line: " + line);
    return Graph(static_cast<int>(n), std::move(edges));
}

Graph parse_graph(std::string_view text) {
    std::istringstream ss{std::string(text)};
    return parse_graph(ss);
}

std::string format_edge_list(const Graph& g) {
    std::ostringstream out;
    out << g.n_vertices() << ' ' << g.n_edges() << '\n';
    for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
    return out.str();
}

} // namespace cyclocover
