#include <doctest.h>

#include <algorithm>

#include "cyclocover/bounds.hpp"
#include "cyclocover/instances.hpp"
#include "cyclocover/metric_dim.hpp"
#include "cyclocover/oracle.hpp"
#include "cyclocover/structure.hpp"
#include "test_util.hpp"

using namespace cyclocover;

TEST_CASE("doubly resolving the four-cycle") {
    Graph g = gen_family({Family::cycle, {4}, {}});
    auto sol = doubly_resolving_construct(g);
    CHECK(sol.size() == 3);
    CHECK(sol.claimed_bound == 3); // 2c + 1
    CHECK(verify_set(Problem::doubly, g, sol.vertices).valid);
}

TEST_CASE("doubly resolving the bowtie drops the cut-vertex root") {
    Graph g = test::bowtie();
    auto sol = doubly_resolving_construct(g);
    CHECK(sol.root_used == 0);
    CHECK(!std::binary_search(sol.vertices.begin(), sol.vertices.end(), 0));
    CHECK(sol.size() <= 4); // 2c
    CHECK(sol.claimed_bound == 4);
    CHECK(verify_set(Problem::doubly, g, sol.vertices).valid);
}

TEST_CASE("doubly resolving requires min degree two") {
    Graph g = gen_family({Family::path, {4}, {}});
    CHECK_THROWS_WITH_AS(doubly_resolving_construct(g),
                         doctest::Contains("MinDegreeTooSmall"), Error);
}

TEST_CASE("doubly resolving verified on random min-degree-two graphs") {
    for (std::uint64_t seed = 1; seed <= 200; ++seed) {
        Graph g = test::random_min_deg2(12 + static_cast<int>(seed % 14),
                                        1 + static_cast<int>(seed % 5), seed);
        auto sol = doubly_resolving_construct(g);
        CHECK(sol.size() <= sol.claimed_bound);
        CHECK(verify_set(Problem::doubly, g, sol.vertices).valid);
        // a doubly resolving set is also a resolving set
        CHECK(verify_set(Problem::dim, g, sol.vertices).valid);
    }
}

TEST_CASE("paths resolve with one endpoint") {
    Graph g = gen_family({Family::path, {5}, {}});
    auto sol = resolving_construct(g);
    CHECK(sol.vertices == std::vector<int>{0});
    CHECK(sol.claimed_bound == 1);
    CHECK(verify_set(Problem::dim, g, sol.vertices).valid);
}

TEST_CASE("non-path trees resolve with the branch-resolving choice") {
    Graph g = gen_family({Family::spider, {4}, {}});
    StructureProfile p = structure_profile(g);
    auto sol = resolving_construct(g);
    CHECK(sol.vertices == p.branch_resolving_choice);
    CHECK(sol.size() == p.branch_resolving);
    CHECK(verify_set(Problem::dim, g, sol.vertices).valid);
    auto esol = edge_resolving_construct(g);
    CHECK(esol.vertices == p.branch_resolving_choice);
    CHECK(verify_set(Problem::edim, g, esol.vertices).valid);
}

TEST_CASE("five-cycle with a pendant path") {
    Graph g = parse_graph("6 6\n0 1\n1 2\n2 3\n3 4\n4 0\n0 5");
    auto sol = resolving_construct(g);
    CHECK(sol.claimed_bound == 3); // lambda + 2c = 1 + 2
    CHECK(sol.size() <= 3);
    CHECK(verify_set(Problem::dim, g, sol.vertices).valid);
    auto msol = mixed_resolving_construct(g);
    CHECK(msol.claimed_bound == 3); // l + 2c
    CHECK(msol.size() <= 3);
    CHECK(verify_set(Problem::mdim, g, msol.vertices).valid);
}

TEST_CASE("root choice survives a pendant path at the lowest cut-vertex") {
    // four-cycle 0-1-2-3 with the path 0-4-5 and the two leaves 6,7 at
    // vertex 2; rooting at 0 would strand the pendant path after the drop
    Graph g = parse_graph("8 8\n0 1\n1 2\n2 3\n3 0\n0 4\n4 5\n2 6\n2 7");
    auto sol = resolving_construct(g);
    CHECK(sol.claimed_bound == 3); // lambda + 2c with L = 1, c = 1
    CHECK(sol.size() <= 3);
    CHECK(verify_set(Problem::dim, g, sol.vertices).valid);
    CHECK(verify_set(Problem::edim, g, edge_resolving_construct(g).vertices).valid);
}

TEST_CASE("bowtie edge and mixed resolving sets") {
    Graph g = test::bowtie();
    auto esol = edge_resolving_construct(g);
    CHECK(esol.size() <= 4);
    CHECK(esol.claimed_bound == 4); // 2c with a cut-vertex
    CHECK(verify_set(Problem::edim, g, esol.vertices).valid);
    auto msol = mixed_resolving_construct(g);
    CHECK(msol.size() <= 4);
    CHECK(verify_set(Problem::mdim, g, msol.vertices).valid);
}

TEST_CASE("four-cycle edge resolving stays within 2c + 1") {
    Graph g = gen_family({Family::cycle, {4}, {}});
    auto sol = edge_resolving_construct(g);
    CHECK(sol.claimed_bound == 3);
    CHECK(sol.size() <= 3);
    CHECK(verify_set(Problem::edim, g, sol.vertices).valid);
}

TEST_CASE("trees take exactly their leaves as mixed basis") {
    for (const char* text :
         {"6 5\n0 1\n1 2\n2 3\n3 4\n2 5", "2 1\n0 1", "4 3\n0 1\n0 2\n0 3"}) {
        Graph g = parse_graph(text);
        StructureProfile p = structure_profile(g);
        auto sol = mixed_resolving_construct(g);
        CHECK(sol.vertices == p.leaves);
        CHECK(verify_set(Problem::mdim, g, sol.vertices).valid);
    }
}

TEST_CASE("degenerate one- and two-vertex graphs") {
    Graph k1 = parse_graph("1 0");
    CHECK(resolving_construct(k1).vertices.empty());
    CHECK(mixed_resolving_construct(k1).vertices.empty());
    Graph k2 = parse_graph("2 1\n0 1");
    CHECK(resolving_construct(k2).size() == 1);
    CHECK(edge_resolving_construct(k2).size() == 1);
    CHECK(verify_set(Problem::dim, k2, resolving_construct(k2).vertices).valid);
}

TEST_CASE("constructions meet their bounds and oracles on random graphs") {
    for (std::uint64_t seed = 1; seed <= 120; ++seed) {
        int n = 8 + static_cast<int>(seed % 18);
        Graph g = gen_random_cyclomatic(n, static_cast<int>(seed % 5), seed * 31);
        if (seed % 3 == 0) g = test::random_min_deg2(n, 1 + static_cast<int>(seed % 4), seed);

        for (Problem p : {Problem::dim, Problem::edim, Problem::mdim}) {
            SolutionSet sol = p == Problem::dim    ? resolving_construct(g)
                              : p == Problem::edim ? edge_resolving_construct(g)
                                                   : mixed_resolving_construct(g);
            CHECK(sol.size() <= sol.claimed_bound);
            CHECK(sol.claimed_bound == theorem_bound(p, g));
            CHECK(verify_set(p, g, sol.vertices).valid);
            // whenever the root was dropped, two components of G - root
            // must hold solution elements
            if (sol.root_used &&
                !std::binary_search(sol.vertices.begin(), sol.vertices.end(),
                                    *sol.root_used))
                CHECK(components_with_elements(g, *sol.root_used, sol.vertices) >= 2);
        }
    }
}

TEST_CASE("metric and edge metric dimension differ by at most 2c") {
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
        Graph g = gen_random_cyclomatic(7 + static_cast<int>(seed % 4),
                                        static_cast<int>(seed % 4), seed * 7);
        int dim = brute_force_min_set(Problem::dim, g).size();
        int edim = brute_force_min_set(Problem::edim, g).size();
        CHECK(std::abs(dim - edim) <= 2 * g.cyclomatic());
    }
}

TEST_CASE("construction is deterministic") {
    Graph g = gen_random_cyclomatic(20, 4, 11);
    CHECK(resolving_construct(g).vertices == resolving_construct(g).vertices);
    CHECK(mixed_resolving_construct(g).vertices == mixed_resolving_construct(g).vertices);
}
