#include "tempocover/weakly_chordal.hpp"

#include <gtest/gtest.h>

#include <random>

#include "test_util.hpp"

using namespace tempocover;

namespace {

StaticGraph cycle(int n) {
    StaticGraph g(n);
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

StaticGraph complete(int n) {
    StaticGraph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

}  // namespace

TEST(StaticGraph, BasicsAndDerivedGraphs) {
    StaticGraph g(4);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    EXPECT_TRUE(g.has_edge(1, 0));
    EXPECT_FALSE(g.has_edge(0, 2));
    EXPECT_EQ(g.degree(1), 2);
    EXPECT_EQ(g.edge_count(), 2u);
    EXPECT_EQ(g.neighbors(1), (std::vector<Vertex>{0, 2}));
    EXPECT_THROW(g.add_edge(0, 0), MalformedInput);
    EXPECT_THROW(g.add_edge(0, 9), MalformedInput);

    StaticGraph c = g.complement();
    EXPECT_EQ(c.edge_count(), 4u);
    EXPECT_TRUE(c.has_edge(0, 2));
    EXPECT_FALSE(c.has_edge(0, 1));

    StaticGraph sub = g.induced({1, 2, 3});
    EXPECT_EQ(sub.vertex_count(), 3);
    EXPECT_TRUE(sub.has_edge(0, 1));  // old 1-2
    EXPECT_EQ(sub.edge_count(), 1u);
}

TEST(StaticGraph, TextExports) {
    StaticGraph g(3);
    g.add_edge(0, 2);
    std::string el = to_edge_list(g);
    EXPECT_NE(el.find("p edge 3 1"), std::string::npos);
    EXPECT_NE(el.find("e 1 3"), std::string::npos);
    EXPECT_NE(to_dot(g).find("0 -- 2;"), std::string::npos);
}

TEST(HoleSearch, FindsShortestInducedLongCycles) {
    EXPECT_FALSE(find_hole(cycle(4)).has_value());
    auto h5 = find_hole(cycle(5));
    ASSERT_TRUE(h5.has_value());
    EXPECT_EQ(h5->size(), 5u);
    auto h6 = find_hole(cycle(6));
    ASSERT_TRUE(h6.has_value());
    EXPECT_EQ(h6->size(), 6u);

    // a chord breaks the 5-cycle
    StaticGraph g = cycle(5);
    g.add_edge(0, 2);
    EXPECT_FALSE(find_hole(g).has_value());

    // trees and complete graphs have no holes
    StaticGraph path(6);
    for (int i = 0; i + 1 < 6; ++i) path.add_edge(i, i + 1);
    EXPECT_FALSE(find_hole(path).has_value());
    EXPECT_FALSE(find_hole(complete(7)).has_value());
}

TEST(HoleSearch, HoleWitnessIsInducedCycle) {
    StaticGraph g = cycle(7);
    auto hole = find_hole(g);
    ASSERT_TRUE(hole.has_value());
    const auto& cyc = *hole;
    ASSERT_EQ(cyc.size(), 7u);
    for (std::size_t i = 0; i < cyc.size(); ++i) {
        for (std::size_t j = i + 1; j < cyc.size(); ++j) {
            bool consecutive = j == i + 1 || (i == 0 && j + 1 == cyc.size());
            EXPECT_EQ(g.has_edge(cyc[i], cyc[j]), consecutive);
        }
    }
}

TEST(AntiholeSearch, SeesComplementHoles) {
    EXPECT_FALSE(find_antihole(cycle(4)).has_value());
    // the 5-cycle is self-complementary
    EXPECT_TRUE(find_antihole(cycle(5)).has_value());
    StaticGraph anti6 = cycle(6).complement();
    EXPECT_FALSE(find_hole(anti6).has_value());
    ASSERT_TRUE(find_antihole(anti6).has_value());
    EXPECT_EQ(find_antihole(anti6)->size(), 6u);
}

TEST(WeaklyChordal, RecognizesFamilies) {
    EXPECT_TRUE(is_weakly_chordal(StaticGraph(0)));
    EXPECT_TRUE(is_weakly_chordal(cycle(4)));
    EXPECT_TRUE(is_weakly_chordal(complete(8)));
    EXPECT_FALSE(is_weakly_chordal(cycle(5)));
    EXPECT_FALSE(is_weakly_chordal(cycle(6)));
    EXPECT_FALSE(is_weakly_chordal(cycle(6).complement()));
}

TEST(CliqueCover, RejectsNonWeaklyChordalWithWitness) {
    try {
        min_clique_cover_wc(cycle(6));
        FAIL() << "expected ClassMismatch";
    } catch (const ClassMismatch& e) {
        EXPECT_NE(std::string(e.what()).find("hole"), std::string::npos);
    }
    try {
        max_independent_set_wc(cycle(6).complement());
        FAIL() << "expected ClassMismatch";
    } catch (const ClassMismatch& e) {
        EXPECT_NE(std::string(e.what()).find("antihole"), std::string::npos);
    }
}

TEST(CliqueCover, SolvesSmallKnownGraphs) {
    EXPECT_TRUE(min_clique_cover_wc(StaticGraph(0)).empty());

    auto one = min_clique_cover_wc(StaticGraph(1));
    EXPECT_EQ(one.size(), 1u);

    auto c4 = min_clique_cover_wc(cycle(4));
    EXPECT_EQ(c4.size(), 2u);

    StaticGraph edgeless(5);
    EXPECT_EQ(min_clique_cover_wc(edgeless).size(), 5u);
    EXPECT_EQ(max_independent_set_wc(edgeless).size(), 5u);

    EXPECT_EQ(min_clique_cover_wc(complete(6)).size(), 1u);
    EXPECT_EQ(max_independent_set_wc(complete(6)).size(), 1u);
    EXPECT_EQ(max_independent_set_wc(cycle(4)).size(), 2u);
}

TEST(CliqueCover, ClassesPartitionIntoCliques) {
    std::mt19937_64 rng(7);
    for (int round = 0; round < 40; ++round) {
        int n = 1 + static_cast<int>(rng() % 10);
        StaticGraph g = testutil::random_wc_graph(n, rng);
        auto classes = min_clique_cover_wc(g);
        std::vector<int> hit(n, 0);
        for (const auto& cls : classes) {
            EXPECT_TRUE(testutil::is_clique(g, cls));
            for (Vertex v : cls) ++hit[v];
        }
        for (int v = 0; v < n; ++v) EXPECT_EQ(hit[v], 1) << "vertex " << v;
    }
}

TEST(CliqueCover, MatchesBruteForceOnRandomWeaklyChordalGraphs) {
    std::mt19937_64 rng(42);
    for (int round = 0; round < 60; ++round) {
        int n = 1 + static_cast<int>(rng() % 10);
        StaticGraph g = testutil::random_wc_graph(n, rng);
        auto cover = min_clique_cover_wc(g);
        auto mis = max_independent_set_wc(g);
        EXPECT_TRUE(testutil::is_independent(g, mis));
        int brute = testutil::brute_mis(g);
        int chrom = testutil::brute_chromatic(g.complement());
        EXPECT_EQ(static_cast<int>(cover.size()), chrom);
        EXPECT_EQ(static_cast<int>(mis.size()), brute);
        EXPECT_EQ(static_cast<int>(cover.size()), brute);
    }
}
