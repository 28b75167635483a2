#include "tempocover/reachability.hpp"

#include <gtest/gtest.h>

#include <random>

#include "tempocover/exact.hpp"
#include "tempocover/generators.hpp"
#include "test_util.hpp"

using namespace tempocover;

TEST(ReachSet, RequiresStrictlyIncreasingLabels) {
    TemporalDigraph d(3, {{0, 1, {2}}, {1, 2, {2}}});
    auto r0 = reach_set(d, 0);
    EXPECT_TRUE(r0[1]);
    EXPECT_FALSE(r0[2]);  // both labels equal, no strict continuation
    EXPECT_FALSE(r0[0]);  // a vertex does not reach itself

    TemporalDigraph ok(3, {{0, 1, {1}}, {1, 2, {2}}});
    EXPECT_TRUE(reach_set(ok, 0)[2]);

    EXPECT_THROW(reach_set(d, -1), MalformedInput);
    EXPECT_THROW(reach_set(d, 3), MalformedInput);
}

TEST(ReachSet, UsesEarliestArrivals) {
    // arriving at 1 via label 3 would miss the continuation at 2; the label-1
    // arrival keeps it open
    TemporalDigraph d(3, {{0, 1, {1, 3}}, {1, 2, {2}}});
    EXPECT_TRUE(reach_set(d, 0)[2]);
}

TEST(ReachSet, MatchesPathEnumerationOnRandomInstances) {
    std::mt19937_64 rng(5);
    for (int round = 0; round < 40; ++round) {
        int n = 2 + static_cast<int>(rng() % 6);
        TemporalDigraph d = random_instance(GraphClass::General, n, 2, 4, rng());
        auto paths = detail::all_temporal_paths(d);
        std::vector<std::vector<char>> by_paths(n, std::vector<char>(n, 0));
        for (const auto& p : paths)
            if (!p.is_single()) by_paths[p.vertices().front()][p.vertices().back()] = 1;
        for (Vertex u = 0; u < n; ++u) {
            auto r = reach_set(d, u);
            for (Vertex v = 0; v < n; ++v)
                EXPECT_EQ(static_cast<bool>(r[v]), static_cast<bool>(by_paths[u][v]))
                    << u << " -> " << v;
        }
    }
}

TEST(ConnectivityGraph, EdgeIffEitherDirectionReaches) {
    TemporalDigraph d(4, {{0, 1, {1}}, {2, 1, {5}}});
    ConnectivityGraph cg = connectivity_graph(d);
    EXPECT_TRUE(cg.reaches(0, 1));
    EXPECT_FALSE(cg.reaches(1, 0));
    EXPECT_TRUE(cg.graph.has_edge(0, 1));
    EXPECT_TRUE(cg.graph.has_edge(1, 2));
    EXPECT_FALSE(cg.graph.has_edge(0, 2));
    EXPECT_EQ(cg.graph.degree(3), 0);
}

TEST(ExactIndependentSet, KnownSizes) {
    StaticGraph c5(5);
    for (int i = 0; i < 5; ++i) c5.add_edge(i, (i + 1) % 5);
    EXPECT_EQ(detail::mis_exact(c5).size(), 2u);
    StaticGraph c6(6);
    for (int i = 0; i < 6; ++i) c6.add_edge(i, (i + 1) % 6);
    EXPECT_EQ(detail::mis_exact(c6).size(), 3u);
    StaticGraph edgeless(7);
    EXPECT_EQ(detail::mis_exact(edgeless).size(), 7u);
    EXPECT_EQ(detail::mis_exact(StaticGraph(0)).size(), 0u);
}

TEST(ExactIndependentSet, MatchesSubsetEnumeration) {
    std::mt19937_64 rng(11);
    for (int round = 0; round < 50; ++round) {
        int n = 1 + static_cast<int>(rng() % 9);
        StaticGraph g(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng() % 3 == 0) g.add_edge(u, v);
        auto mis = detail::mis_exact(g);
        EXPECT_TRUE(testutil::is_independent(g, mis));
        EXPECT_EQ(static_cast<int>(mis.size()), testutil::brute_mis(g));
    }
}

TEST(TemporalAntichain, KnownFamilies) {
    EXPECT_EQ(max_temporal_antichain(star(3)).size(), 3u);
    EXPECT_EQ(max_temporal_antichain(transitive_tournament(4)).size(), 1u);
    EXPECT_EQ(max_temporal_antichain(transitive_tournament(7)).size(), 1u);
    EXPECT_EQ(max_temporal_antichain(TemporalDigraph(4, {})).size(), 4u);
}

TEST(TemporalAntichain, IsAntichainAndTreeRouteMatchesBruteForce) {
    std::mt19937_64 rng(23);
    for (int round = 0; round < 60; ++round) {
        int n = 1 + static_cast<int>(rng() % 9);
        TemporalDigraph d = random_instance(GraphClass::OrientedTree, n, 2, 4, rng());
        auto chain = max_temporal_antichain(d);
        ConnectivityGraph cg = connectivity_graph(d);
        EXPECT_TRUE(testutil::is_independent(cg.graph, chain));
        EXPECT_EQ(static_cast<int>(chain.size()), testutil::brute_mis(cg.graph));
    }
}
