#include "cyclocover/instances.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "cyclocover/errors.hpp"

namespace cyclocover {

std::string to_string(Family f) {
    switch (f) {
    case Family::bouquet: return "bouquet";
    case Family::k2k_plus_edge: return "k2k";
    case Family::theta: return "theta";
    case Family::cycle: return "cycle";
    case Family::path: return "path";
    case Family::spider: return "spider";
    case Family::random_cyclomatic: return "random";
    }
    return "?";
}

Family family_from_string(const std::string& s) {
    if (s == "bouquet") return Family::bouquet;
    if (s == "k2k") return Family::k2k_plus_edge;
    if (s == "theta") return Family::theta;
    if (s == "cycle") return Family::cycle;
    if (s == "path") return Family::path;
    if (s == "spider") return Family::spider;
    if (s == "random") return Family::random_cyclomatic;
    throw Error(ErrorCode::InvalidSpec, "unknown family: " + s);
}

Graph gen_bouquet(const std::vector<int>& cycle_lengths, const std::vector<int>& path_lengths) {
    for (int len : cycle_lengths) {
        if (len < 3) throw Error(ErrorCode::InvalidSpec, "cycle length must be >= 3");
        if (len % 2 == 0)
            throw Error(ErrorCode::EvenCycleLength, "cycle length " + std::to_string(len));
    }
    for (int len : path_lengths)
        if (len < 1) throw Error(ErrorCode::InvalidSpec, "path length must be >= 1");

    std::vector<Edge> edges;
    int next = 1; // hub is vertex 0
    for (int len : cycle_lengths) {
        int first = next;
        for (int i = 1; i < len - 1; ++i) edges.emplace_back(next, next + 1), ++next;
        int last = next++;
        edges.emplace_back(0, first);
        edges.emplace_back(0, last);
    }
    for (int len : path_lengths) {
        edges.emplace_back(0, next);
        for (int i = 1; i < len; ++i) edges.emplace_back(next, next + 1), ++next;
        ++next;
    }
    return Graph(next, std::move(edges));
}

Graph gen_k2k_plus_edge(int k) {
    if (k < 2) throw Error(ErrorCode::InvalidSpec, "k2k needs k >= 2");
    std::vector<Edge> edges{{0, 1}};
    for (int i = 0; i < k; ++i) {
        edges.emplace_back(0, 2 + i);
        edges.emplace_back(1, 2 + i);
    }
    return Graph(k + 2, std::move(edges));
}

namespace {

Graph gen_theta(int a, int b, int c) {
    std::vector<int> strands{a, b, c};
    int zeros = 0;
    for (int s : strands) {
        if (s < 0) throw Error(ErrorCode::InvalidSpec, "theta strand length must be >= 0");
        if (s == 0) ++zeros;
    }
    if (zeros > 1)
        throw Error(ErrorCode::InvalidSpec, "theta allows at most one direct strand");
    std::vector<Edge> edges;
    int next = 2; // hubs 0 and 1
    for (int s : strands) {
        if (s == 0) {
            edges.emplace_back(0, 1);
            continue;
        }
        edges.emplace_back(0, next);
        for (int i = 1; i < s; ++i) edges.emplace_back(next, next + 1), ++next;
        edges.emplace_back(next, 1);
        ++next;
    }
    return Graph(next, std::move(edges));
}

Graph gen_cycle(int n) {
    if (n < 3) throw Error(ErrorCode::InvalidSpec, "cycle needs n >= 3");
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    edges.emplace_back(0, n - 1);
    return Graph(n, std::move(edges));
}

Graph gen_path(int n) {
    if (n < 1) throw Error(ErrorCode::InvalidSpec, "path needs n >= 1");
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return Graph(n, std::move(edges));
}

// Spine 0..t-1; every internal spine vertex gets a three-vertex claw whose
// center is adjacent to it. 2t-2 leaves in total.
Graph gen_spider(int t) {
    if (t < 3) throw Error(ErrorCode::InvalidSpec, "spider needs t >= 3");
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < t; ++i) edges.emplace_back(i, i + 1);
    int next = t;
    for (int v = 1; v <= t - 2; ++v) {
        int center = next++, l1 = next++, l2 = next++;
        edges.emplace_back(v, center);
        edges.emplace_back(center, l1);
        edges.emplace_back(center, l2);
    }
    return Graph(next, std::move(edges));
}

// Deterministic bounded draw; mt19937_64's output sequence is fixed by the
// standard, so this is stable across platforms.
int draw(std::mt19937_64& rng, int bound) {
    return static_cast<int>(rng() % static_cast<std::uint64_t>(bound));
}

} // namespace

Graph gen_random_cyclomatic(int n, int c, std::uint64_t seed) {
    if (n < 1) throw Error(ErrorCode::InvalidSpec, "n must be >= 1");
    long long max_extra = static_cast<long long>(n) * (n - 1) / 2 - (n - 1);
    if (c < 0 || c > max_extra)
        throw Error(ErrorCode::TooManyEdges,
                    "c=" + std::to_string(c) + " exceeds " + std::to_string(max_extra));

    std::mt19937_64 rng(seed);
    std::vector<Edge> edges;
    std::set<Edge> present;

    if (n >= 2) {
        // Pruefer decode of a uniform random sequence
        std::vector<int> seq(std::max(0, n - 2));
        for (int& s : seq) s = draw(rng, n);
        std::vector<int> deg(n, 1);
        for (int s : seq) ++deg[s];
        std::set<int> leaves;
        for (int v = 0; v < n; ++v)
            if (deg[v] == 1) leaves.insert(v);
        for (int s : seq) {
            int leaf = *leaves.begin();
            leaves.erase(leaves.begin());
            edges.push_back(make_edge(leaf, s));
            if (--deg[s] == 1) leaves.insert(s);
        }
        int a = *leaves.begin(), b = *std::next(leaves.begin());
        edges.push_back(make_edge(a, b));
        present.insert(edges.begin(), edges.end());
    }

    int added = 0;
    while (added < c) {
        int u = draw(rng, n), v = draw(rng, n);
        if (u == v) continue;
        Edge e = make_edge(u, v);
        if (present.count(e)) continue;
        present.insert(e);
        edges.push_back(e);
        ++added;
    }
    return Graph(n, std::move(edges));
}

Graph gen_family(const FamilySpec& spec) {
    const auto& p = spec.parameters;
    auto need = [&](size_t count) {
        if (p.size() != count)
            throw Error(ErrorCode::InvalidSpec,
                        to_string(spec.family) + " expects " + std::to_string(count) +
                            " parameters, got " + std::to_string(p.size()));
    };
    switch (spec.family) {
    case Family::bouquet: {
        if (p.empty()) throw Error(ErrorCode::InvalidSpec, "bouquet needs parameters");
        size_t i = 0;
        long long k = p[i++];
        if (k < 0 || i + k > p.size()) throw Error(ErrorCode::InvalidSpec, "bad bouquet k");
        std::vector<int> cycles(p.begin() + i, p.begin() + i + k);
        i += k;
        if (i >= p.size()) throw Error(ErrorCode::InvalidSpec, "bouquet needs l");
        long long l = p[i++];
        if (l < 0 || i + l != p.size()) throw Error(ErrorCode::InvalidSpec, "bad bouquet l");
        std::vector<int> paths(p.begin() + i, p.end());
        if (k == 0 && l == 0) throw Error(ErrorCode::InvalidSpec, "empty bouquet");
        return gen_bouquet(cycles, paths);
    }
    case Family::k2k_plus_edge:
        need(1);
        return gen_k2k_plus_edge(static_cast<int>(p[0]));
    case Family::theta:
        need(3);
        return gen_theta(static_cast<int>(p[0]), static_cast<int>(p[1]),
                         static_cast<int>(p[2]));
    case Family::cycle:
        need(1);
        return gen_cycle(static_cast<int>(p[0]));
    case Family::path:
        need(1);
        return gen_path(static_cast<int>(p[0]));
    case Family::spider:
        need(1);
        return gen_spider(static_cast<int>(p[0]));
    case Family::random_cyclomatic:
        need(2);
        if (!spec.seed) throw Error(ErrorCode::InvalidSpec, "random family needs a seed");
        return gen_random_cyclomatic(static_cast<int>(p[0]), static_cast<int>(p[1]),
                                     *spec.seed);
    }
    throw Error(ErrorCode::InvalidSpec, "unhandled family");
}

std::uint64_t split_seed(std::uint64_t master, std::uint64_t index) {
    // splitmix64 step on master + index
    std::uint64_t z = master + 0x9E3779B97F4A7C15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

} // namespace cyclocover
