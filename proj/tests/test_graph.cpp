#include <doctest.h>

#include <numeric>
#include <random>

#include "graph_oracles.hpp"
#include "spider/graph.hpp"
#include "spider/spider.hpp"

using namespace spider;
using Edges = std::vector<std::pair<NodeId, NodeId>>;
using V = std::vector<Count>;

namespace {

Graph path(std::size_t n) {
    Edges e;
    for (NodeId i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return build_graph(n, e);
}

Graph complete(std::size_t n) {
    Edges e;
    for (NodeId i = 0; i < n; ++i)
        for (NodeId j = i + 1; j < n; ++j) e.emplace_back(i, j);
    return build_graph(n, e);
}

Graph spider_graph(Count m, Count k, Count l) { return build_spider(normalize(m, k, l)); }

}  // namespace

TEST_CASE("build_graph") {
    const Edges one{{0, 1}};
    const Graph seg = build_graph(2, one);
    CHECK(seg.node_count() == 2);
    CHECK(seg.edge_count() == 1);

    const Edges dup{{0, 1}, {1, 2}, {0, 1}};
    const Graph p3 = build_graph(3, dup);
    CHECK(p3.edge_count() == 2);
    CHECK(p3.degree(0) == 1);
    CHECK(p3.degree(1) == 2);

    const Edges bad{{0, 4}};
    CHECK_THROWS_AS(build_graph(4, bad), InputError);
    const Edges loop{{2, 2}};
    CHECK_THROWS_AS(build_graph(4, loop), InputError);
}

TEST_CASE("is_connected") {
    CHECK(is_connected(path(3)));
    CHECK_FALSE(is_connected(build_graph(2, Edges{})));
    CHECK(is_connected(build_graph(1, Edges{})));
    CHECK(is_connected(build_graph(0, Edges{})));
    const Graph sp = spider_graph(3, 2, 2);
    CHECK(sp.node_count() == 15);
    CHECK(is_connected(sp));
}

TEST_CASE("all_pairs_distances") {
    CHECK(all_pairs_distances(path(3))(0, 2) == 2);

    // Sp(2,2,1): leaves 2,3 hang off core 0, leaves 4,5 off core 1.
    const auto h = all_pairs_distances(spider_graph(2, 2, 1));
    CHECK(h(2, 4) == 3);
    CHECK(h(2, 3) == 2);

    // Sp(3,1,2): terminals are ids 4, 6, 8.
    const auto d = all_pairs_distances(spider_graph(3, 1, 2));
    CHECK(d(4, 6) == 5);
    CHECK(d(4, 8) == 5);

    const auto split = all_pairs_distances(build_graph(3, Edges{{0, 1}}));
    CHECK(split(0, 2) == DistanceMatrix::kUnreachable);
}

TEST_CASE("degree_array") {
    CHECK(degree_array(spider_graph(1, 3, 1)) == V{3, 1, 1, 1});
    CHECK(degree_array(complete(4)) == V{3, 3, 3, 3});
    CHECK(degree_array(spider_graph(3, 1, 2)) == V{3, 3, 3, 2, 2, 2, 1, 1, 1});
}

TEST_CASE("gamma_array and neighboring_index") {
    CHECK(gamma_array(path(2)) == V{2, 2});
    CHECK(gamma_array(path(3)) == V{4, 3, 3});
    CHECK(gamma_array(spider_graph(1, 3, 1)) == V{6, 4, 4, 4});
    CHECK(neighboring_index(path(2)) == 4);
    CHECK(neighboring_index(path(3)) == 10);
    // H graph: cores 3 + (3 + 1 + 1) = 8, leaves 1 + 3 = 4.
    CHECK(neighboring_index(spider_graph(2, 2, 1)) == 2 * 8 + 4 * 4);
}

TEST_CASE("alpha_array") {
    CHECK(alpha_array(spider_graph(2, 2, 1)) == V{5, 6, 4, 0, 0});
    CHECK(alpha_array(path(5)) == V{4, 3, 2, 1});
    CHECK(alpha_array(complete(4)) == V{6, 0, 0});
    CHECK(alpha_array(build_graph(1, Edges{})).empty());
    CHECK_THROWS_AS((void)alpha_array(build_graph(3, Edges{{0, 1}})), DomainError);
}

TEST_CASE("diameter") {
    CHECK(diameter(spider_graph(2, 2, 1)) == 3);
    CHECK(diameter(complete(5)) == 1);
    CHECK(diameter(spider_graph(1, 3, 2)) == 4);
    CHECK(diameter(build_graph(1, Edges{})) == 0);
    CHECK_THROWS_AS((void)diameter(build_graph(2, Edges{})), DomainError);
}

TEST_CASE("density") {
    CHECK(density(complete(4)) == Rational(1));
    CHECK(density(spider_graph(2, 2, 1)) == Rational(1, 3));
    CHECK(density(path(2)) == Rational(1));
    CHECK_THROWS_AS((void)density(build_graph(1, Edges{})), DomainError);
}

TEST_CASE("h_index") {
    CHECK(h_index(V{3, 3, 3, 2, 2, 2, 2, 2, 2, 1, 1, 1, 1, 1, 1}) == 3);
    CHECK(h_index(degree_array(spider_graph(3, 2, 2))) == 3);
    CHECK(h_index(V{1, 1}) == 1);
    CHECK(h_index(V{}) == 0);
    CHECK(h_index(V{0, 0}) == 0);
    CHECK(h_index(V{10, 9, 8}) == 3);
    CHECK_THROWS_AS((void)h_index(V{1, 2}), InputError);
}

TEST_CASE("mean_distance") {
    CHECK(mean_distance(complete(6)) == Rational(1));
    CHECK(mean_distance(spider_graph(3, 1, 2)) == Rational(93, 36));
    CHECK(mean_distance(path(3)) == Rational(4, 3));
    CHECK_THROWS_AS((void)mean_distance(build_graph(3, Edges{{0, 1}})), DomainError);
    CHECK_THROWS_AS((void)mean_distance(build_graph(1, Edges{})), DomainError);
}

TEST_CASE("BFS distances agree with Floyd-Warshall on random graphs") {
    std::mt19937_64 rng(20241015);
    for (int trial = 0; trial < 60; ++trial) {
        const auto rg = testing::random_graph(rng, 30, trial % 2 == 0);
        const Graph g = build_graph(rg.n, rg.edges);
        const auto fw = testing::floyd_warshall(g);
        const auto d = all_pairs_distances(g);
        bool connected = true;
        for (std::size_t i = 0; i < g.node_count(); ++i) {
            for (std::size_t j = 0; j < g.node_count(); ++j) {
                const auto expected = fw[i][j] >= testing::kInf ? DistanceMatrix::kUnreachable
                                                                 : static_cast<std::uint32_t>(fw[i][j]);
                REQUIRE(d(i, j) == expected);
                connected = connected && fw[i][j] < testing::kInf;
            }
        }
        CHECK(is_connected(g) == connected);
    }
}

TEST_CASE("indicator invariants on random connected graphs") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        const auto rg = testing::random_graph(rng, 25, true);
        const Graph g = build_graph(rg.n, rg.edges);
        if (g.node_count() < 2) continue;
        const auto ind = compute_indicators(g);
        const auto n = static_cast<Count>(g.node_count());
        CHECK(std::accumulate(ind.delta.begin(), ind.delta.end(), Count{0}) == 2 * g.edge_count());
        CHECK(std::accumulate(ind.alpha.begin(), ind.alpha.end(), Count{0}) == n * (n - 1) / 2);
        CHECK(ind.neighboring_index == std::accumulate(ind.gamma.begin(), ind.gamma.end(), Count{0}));
        const auto per_node = node_gamma_values(g);
        for (NodeId v = 0; v < g.node_count(); ++v) CHECK(per_node[v] >= g.degree(v));
        CHECK(ind.mean_distance >= Rational(1));
        CHECK((ind.mean_distance == Rational(1)) == (g.edge_count() == n * (n - 1) / 2));
        CHECK(Rational(ind.diameter) >= ind.mean_distance);
        CHECK(ind.diameter == diameter(g));
        CHECK(ind.total_distance == total_distance(g));
    }
}
