#include "tempocover/tree_solvers.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "tempocover/exact.hpp"
#include "tempocover/formats.hpp"
#include "tempocover/generators.hpp"
#include "test_util.hpp"

using namespace tempocover;

namespace {

bool vertex_disjoint(const PathCover& cover) {
    std::vector<Vertex> all;
    for (const auto& p : cover.paths)
        for (Vertex v : p.vertices()) all.push_back(v);
    std::sort(all.begin(), all.end());
    return std::adjacent_find(all.begin(), all.end()) == all.end();
}

}  // namespace

TEST(RealizeClique, BuildsPathsThroughTheTree) {
    TemporalDigraph s3 = star(3);
    TemporalPath p = realize_clique_as_path(s3, {0, 3, 4});
    EXPECT_TRUE(validate_path(s3, p));
    EXPECT_EQ(p.vertices(), (std::vector<Vertex>{0, 3, 4}));

    TemporalPath single = realize_clique_as_path(s3, {5});
    EXPECT_TRUE(single.is_single());
    EXPECT_EQ(single.vertices(), (std::vector<Vertex>{5}));

    // clique members may be far apart; route intermediates join the path
    TemporalDigraph b = read_tg_file(testutil::data_path("rooted6b.tg"));
    TemporalPath via = realize_clique_as_path(b, {0, 5});
    EXPECT_TRUE(validate_path(b, via));
    EXPECT_EQ(via.vertices(), (std::vector<Vertex>{0, 1, 2, 5}));
}

TEST(RealizeClique, RejectsBadArguments) {
    TemporalDigraph s3 = star(3);
    EXPECT_THROW(realize_clique_as_path(s3, {}), std::invalid_argument);
    EXPECT_THROW(realize_clique_as_path(s3, {0, 1}), std::invalid_argument);
    EXPECT_THROW(realize_clique_as_path(s3, {0, 99}), std::invalid_argument);
    EXPECT_THROW(realize_clique_as_path(transitive_tournament(4), {0, 1}), ClassMismatch);
}

TEST(OrientedTreeCover, MatchesOracleOnFixtures) {
    for (const char* name : {"star3.tg", "rooted6a.tg", "rooted6b.tg"}) {
        TemporalDigraph d = read_tg_file(testutil::data_path(name));
        PathCover cover = tpc_oriented_tree(d);
        EXPECT_EQ(cover.mode, CoverMode::Plain);
        EXPECT_TRUE(verify_cover(d, cover)) << name;
        EXPECT_EQ(cover.size(), exact_tpc(d).size()) << name;
        EXPECT_EQ(cover.size(), exact_antichain(d).size()) << name;
    }
    EXPECT_EQ(tpc_oriented_tree(read_tg_file(testutil::data_path("star3.tg"))).size(), 3u);
}

TEST(OrientedTreeCover, RejectsNonTrees) {
    EXPECT_THROW(tpc_oriented_tree(transitive_tournament(4)), ClassMismatch);
}

TEST(OrientedTreeCover, MatchesOracleAndAntichainOnRandomTrees) {
    std::mt19937_64 rng(11);
    for (int round = 0; round < 200; ++round) {
        int n = 2 + static_cast<int>(rng() % 9);
        TemporalDigraph d = random_instance(GraphClass::OrientedTree, n, 3, 5, rng());
        PathCover cover = tpc_oriented_tree(d);
        ASSERT_TRUE(verify_cover(d, cover)) << write_tg_string(d);
        std::size_t truth = exact_tpc(d).size();
        ASSERT_EQ(cover.size(), truth) << write_tg_string(d);
        ASSERT_EQ(exact_antichain(d).size(), truth) << write_tg_string(d);
    }
}

TEST(OrientedLineCover, HandlesDirectionFlips) {
    TemporalDigraph d(4, {{0, 1, {3}}, {1, 2, {1}}, {2, 3, {2}}});
    PathCover cover = solve_oriented_line(d);
    EXPECT_EQ(cover.mode, CoverMode::TemporallyDisjoint);
    EXPECT_TRUE(verify_cover(d, cover));
    EXPECT_TRUE(vertex_disjoint(cover));
    EXPECT_EQ(cover.size(), 2u);
    EXPECT_EQ(cover.size(), exact_tdpc(d).size());
}

TEST(OrientedLineCover, RejectsNonLines) {
    EXPECT_THROW(solve_oriented_line(star(3)), ClassMismatch);
}

TEST(OrientedLineCover, MatchesBothOraclesOnRandomLines) {
    std::mt19937_64 rng(12);
    for (int round = 0; round < 200; ++round) {
        int n = 1 + static_cast<int>(rng() % 10);
        TemporalDigraph d = random_instance(GraphClass::OrientedLine, n, 3, 5, rng());
        PathCover cover = solve_oriented_line(d);
        ASSERT_TRUE(verify_cover(d, cover)) << write_tg_string(d);
        ASSERT_TRUE(vertex_disjoint(cover)) << write_tg_string(d);
        std::size_t truth = exact_tdpc(d).size();
        ASSERT_EQ(cover.size(), truth) << write_tg_string(d);
        ASSERT_EQ(exact_tpc(d).size(), truth) << write_tg_string(d);
        ASSERT_EQ(exact_antichain(d).size(), truth) << write_tg_string(d);
    }
}

TEST(RootedTreeCover, MatchesOracleOnFixtures) {
    for (const char* name : {"rooted6a.tg", "rooted6b.tg"}) {
        TemporalDigraph d = read_tg_file(testutil::data_path(name));
        PathCover cover = solve_rooted_tree(d);
        EXPECT_EQ(cover.mode, CoverMode::TemporallyDisjoint);
        EXPECT_TRUE(verify_cover(d, cover)) << name;
        EXPECT_TRUE(vertex_disjoint(cover)) << name;
        EXPECT_EQ(cover.size(), 3u) << name;
        EXPECT_EQ(exact_tdpc(d).size(), 3u) << name;
    }
}

TEST(RootedTreeCover, TrimsOverlapsFromGreedyChains) {
    // the chain grown from vertex 3 swallows vertex 1, which the chain from
    // vertex 2 claimed first; trimming must leave 2 as a lone vertex
    TemporalDigraph d(4, {{0, 1, {1}}, {1, 2, {1}}, {1, 3, {2}}});
    PathCover cover = solve_rooted_tree(d);
    EXPECT_TRUE(verify_cover(d, cover));
    EXPECT_TRUE(vertex_disjoint(cover));
    EXPECT_EQ(cover.size(), 2u);
    EXPECT_EQ(exact_tdpc(d).size(), 2u);
}

TEST(RootedTreeCover, AcceptsForestsAndDirectedLines) {
    TemporalDigraph line(3, {{0, 1, {1}}, {1, 2, {2}}});
    EXPECT_EQ(solve_rooted_tree(line).size(), 1u);
    TemporalDigraph forest(5, {{0, 1, {1}}, {2, 3, {1}}});
    PathCover cover = solve_rooted_tree(forest);
    EXPECT_TRUE(verify_cover(forest, cover));
    EXPECT_EQ(cover.size(), 3u);
}

TEST(RootedTreeCover, RejectsInwardArcsAndCycles) {
    EXPECT_THROW(solve_rooted_tree(star(3)), ClassMismatch);
    TemporalDigraph join(3, {{0, 2, {1}}, {1, 2, {1}}});
    EXPECT_THROW(solve_rooted_tree(join), ClassMismatch);
    TemporalDigraph cyc(2, {{0, 1, {1}}, {1, 0, {2}}});
    EXPECT_THROW(solve_rooted_tree(cyc), ClassMismatch);
}

TEST(RootedTreeCover, MatchesBothOraclesOnRandomRootedTrees) {
    std::mt19937_64 rng(13);
    for (int round = 0; round < 200; ++round) {
        int n = 1 + static_cast<int>(rng() % 10);
        TemporalDigraph d = random_instance(GraphClass::RootedDirectedTree, n, 3, 5, rng());
        PathCover cover = solve_rooted_tree(d);
        ASSERT_TRUE(verify_cover(d, cover)) << write_tg_string(d);
        ASSERT_TRUE(vertex_disjoint(cover)) << write_tg_string(d);
        std::size_t truth = exact_tdpc(d).size();
        ASSERT_EQ(cover.size(), truth) << write_tg_string(d);
        ASSERT_EQ(exact_tpc(d).size(), truth) << write_tg_string(d);
        ASSERT_EQ(exact_antichain(d).size(), truth) << write_tg_string(d);
    }
}
