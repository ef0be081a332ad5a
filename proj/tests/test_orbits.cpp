// Unit tests for independent-set partitions, automorphism quotients, and the
// deletion-contraction orbit count F(G).
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>
#include <vector>

#include "tmc/errors.hpp"
#include "tmc/graph.hpp"
#include "tmc/intpoly.hpp"
#include "tmc/orbits.hpp"

using namespace tmc;

TEST_CASE("restricted growth string canonicalization") {
    CHECK(canon_rgs({2, 1, 2}) == Rgs{0, 1, 0});
    CHECK(canon_rgs({5, 5, 7}) == Rgs{0, 0, 1});
    CHECK(canon_rgs({0, 1, 2}) == Rgs{0, 1, 2});
    CHECK(canon_rgs({9}) == Rgs{0});
    CHECK(rgs_block_count({0, 1, 0, 2}) == 3);
    auto blocks = rgs_blocks({0, 1, 0, 2});
    REQUIRE(blocks.size() == 3);
    CHECK(blocks[0] == std::vector<int>{0, 2});
    CHECK(blocks[1] == std::vector<int>{1});
    CHECK(blocks[2] == std::vector<int>{3});
}

TEST_CASE("independent-set partition counts") {
    CHECK(color_orbits(path_graph(3)).size() == 2);
    CHECK(color_orbits(cycle_graph(4)).size() == 4);
    CHECK(color_orbits(cycle_graph(5)).size() == 11);
    CHECK(color_orbits(cycle_graph(6)).size() == 41);
    CHECK(color_orbits(complete_graph(3)).size() == 1);
    CHECK(color_orbits(edgeless_graph(3)).size() == 5);  // Bell(3)

    auto parts = color_orbits(path_graph(3));
    CHECK(parts[0] == Rgs{0, 1, 0});  // sorted RGS order
    CHECK(parts[1] == Rgs{0, 1, 2});
    for (const auto& p : color_orbits(cycle_graph(5)))
        for (size_t u = 0; u < p.size(); ++u)
            for (size_t v = u + 1; v < p.size(); ++v)
                if (cycle_graph(5).has_edge(static_cast<int>(u), static_cast<int>(v)))
                    CHECK(p[u] != p[v]);
}

TEST_CASE("automorphism quotient classes") {
    Graph p3 = path_graph(3);
    auto os = quotient_by_automorphisms(p3, color_orbits(p3), automorphism_group(p3));
    REQUIRE(os.classes.size() == 2);
    CHECK(os.classes[0].rep == Rgs{0, 1, 0});
    CHECK(os.classes[0].s == 2);
    CHECK(os.classes[0].members.size() == 1);
    CHECK(os.classes[1].rep == Rgs{0, 1, 2});
    CHECK(os.classes[1].s == 3);
    CHECK(os.classes[1].members.size() == 1);

    Graph c5 = cycle_graph(5);
    auto os5 = quotient_by_automorphisms(c5, color_orbits(c5), automorphism_group(c5));
    REQUIRE(os5.classes.size() == 3);
    CHECK(os5.classes[0].s == 3);
    CHECK(os5.classes[0].members.size() == 5);
    CHECK(os5.classes[1].s == 4);
    CHECK(os5.classes[1].members.size() == 5);
    CHECK(os5.classes[2].s == 5);
    CHECK(os5.classes[2].members.size() == 1);
    size_t total = 0;
    for (const auto& cl : os5.classes) {
        total += cl.members.size();
        CHECK(cl.rep == cl.members.front());  // rep is the lex-least member
        CHECK(std::is_sorted(cl.members.begin(), cl.members.end()));
        for (const auto& mem : cl.members) CHECK(rgs_block_count(mem) == cl.s);
    }
    CHECK(total == os5.sk_orbits.size());

    Graph c4 = cycle_graph(4);
    auto os4 = quotient_by_automorphisms(c4, color_orbits(c4), automorphism_group(c4));
    REQUIRE(os4.classes.size() == 3);
    CHECK(os4.classes[0].members.size() == 1);  // the two-block partition
    CHECK(os4.classes[1].members.size() == 2);  // the two three-block partitions fuse
    CHECK(os4.classes[2].members.size() == 1);
}

TEST_CASE("trivial group leaves every partition in its own class") {
    Graph c4 = cycle_graph(4);
    std::vector<Permutation> trivial = {{0, 1, 2, 3}};
    auto os = quotient_by_automorphisms(c4, color_orbits(c4), trivial);
    CHECK(os.classes.size() == color_orbits(c4).size());
    for (const auto& cl : os.classes) CHECK(cl.members.size() == 1);
}

TEST_CASE("orbit weights") {
    OrbitClass cl;
    cl.rep = {0, 1, 0, 1, 2};
    cl.members = {cl.rep, cl.rep, cl.rep, cl.rep, cl.rep};
    cl.s = 3;
    CHECK(orbit_weight(cl) == IntPoly::falling_factorial(3) * Int(5));
}

TEST_CASE("Bell numbers") {
    std::vector<long> expect = {1, 1, 2, 5, 15, 52, 203, 877, 4140, 21147};
    for (size_t n = 0; n < expect.size(); ++n) CHECK(bell_number(static_cast<int>(n)) == expect[n]);
}

TEST_CASE("partition counts for paths and cycles") {
    for (int n = 1; n <= 9; ++n) CHECK(orbit_count_f(path_graph(n)) == bell_number(n - 1));
    std::vector<long> cyc = {1, 4, 11, 41, 162, 715, 3425};  // n = 3..9
    for (int n = 3; n <= 9; ++n) CHECK(orbit_count_f(cycle_graph(n)) == cyc[n - 3]);
    CHECK(orbit_count_f(complete_graph(5)) == 1);
    CHECK(orbit_count_f(edgeless_graph(4)) == bell_number(4));
}

TEST_CASE("deletion-contraction count agrees with enumeration on random graphs") {
    std::mt19937 rng(987123);
    std::bernoulli_distribution coin(0.5);
    for (int trial = 0; trial < 25; ++trial) {
        int n = 2 + static_cast<int>(rng() % 5);
        std::vector<Edge> edges;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (coin(rng)) edges.push_back({u, v});
        Graph g(n, edges);
        CHECK(orbit_count_f(g) == Int(static_cast<long>(color_orbits(g).size())));
    }
}
