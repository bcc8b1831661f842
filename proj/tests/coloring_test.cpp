#include <gtest/gtest.h>

#include "mec/coloring.hpp"
#include "mec/io.hpp"

using namespace mec;

namespace {

const Graph c3 = load_graph("p edge 3 3\ne 1 2\ne 2 3\ne 1 3\n");
const Graph p4 = load_graph("p edge 4 3\ne 1 2\ne 2 3\ne 3 4\n");
const Graph k13 = load_graph("p edge 4 3\ne 1 2\ne 1 3\ne 1 4\n");

Graph cycle(int n)
{
    Graph g(n);
    for (int i = 0; i < n; ++i)
        g.add_edge(i, (i + 1) % n);
    return g;
}

} // namespace

TEST(Verify, AnyColoringOfATriangleIsValid)
{
    const VerifyReport r = verify_coloring(c3, EdgeColoring({0, 1, 2}));
    EXPECT_TRUE(r.valid);
    EXPECT_EQ(r.colors_used, 3);
}

TEST(Verify, StarWithThreeColorsFailsAtTheCenter)
{
    const VerifyReport r = verify_coloring(k13, EdgeColoring({0, 1, 2}));
    EXPECT_FALSE(r.valid);
    EXPECT_EQ(r.violations, std::vector<Vertex>{0});
    EXPECT_TRUE(verify_coloring(k13, EdgeColoring({0, 1, 2}), ValidityProfile::uniform(3)).valid);
}

TEST(Verify, PathWithThreeColors)
{
    const VerifyReport r = verify_coloring(p4, EdgeColoring({0, 1, 2}));
    EXPECT_TRUE(r.valid);
    EXPECT_EQ(r.colors_used, 3);
}

TEST(Verify, CapacityProfile)
{
    const auto profile = ValidityProfile::per_vertex({2, 1, 2, 2});
    EXPECT_FALSE(verify_coloring(p4, EdgeColoring({0, 1, 2}), profile).valid);
    EXPECT_TRUE(verify_coloring(p4, EdgeColoring({0, 0, 2}), profile).valid);
    EXPECT_THROW(ValidityProfile::per_vertex({1, 3}), InvalidInput);
    EXPECT_THROW(verify_coloring(p4, EdgeColoring({0, 1})), InvalidInput);
}

TEST(Palette, SortedDistinctColors)
{
    EXPECT_EQ(palette(k13, EdgeColoring({4, 1, 4}), 0), (std::vector<Color>{1, 4}));
    EXPECT_EQ(palette(k13, EdgeColoring({4, 1, 4}), 2), (std::vector<Color>{1}));
}

TEST(CharacterSubgraph, LowestIdPerClass)
{
    const Graph h = character_subgraph(c3, EdgeColoring({0, 0, 1}));
    EXPECT_EQ(h.num_edges(), 2);
    EXPECT_TRUE(h.has_edge(0, 1));
    EXPECT_TRUE(h.has_edge(0, 2));

    const Graph c4 = cycle(4);
    EXPECT_EQ(character_subgraph(c4, EdgeColoring({0, 1, 2, 3})), c4);
    EXPECT_EQ(character_subgraph(p4, EdgeColoring({0, 0, 0})).num_edges(), 1);
    EXPECT_THROW(character_subgraph(k13, EdgeColoring({0, 1, 2})), InvalidInput);
}

TEST(TwoFactor, CyclesYesPathsNo)
{
    EXPECT_TRUE(is_two_factor(cycle(5)));
    Graph both(7);
    for (int i = 0; i < 3; ++i)
        both.add_edge(i, (i + 1) % 3);
    for (int i = 0; i < 4; ++i)
        both.add_edge(3 + i, 3 + (i + 1) % 4);
    EXPECT_TRUE(is_two_factor(both));
    EXPECT_FALSE(is_two_factor(p4));
}

TEST(Compress, MergesTopClasses)
{
    EXPECT_EQ(compress_colors(EdgeColoring({0, 1, 2}), 2), EdgeColoring({0, 1, 1}));
    EXPECT_EQ(compress_colors(EdgeColoring({0, 1, 2, 3, 4}), 3), EdgeColoring({0, 1, 2, 2, 2}));
    EXPECT_EQ(compress_colors(EdgeColoring({2, 0, 1}), 3), EdgeColoring({2, 0, 1}));
    EXPECT_THROW(compress_colors(EdgeColoring({0, 0}), 2), InvalidInput);
}

TEST(Compress, StaysValidOnEveryTargetOfACycle)
{
    const Graph c6 = cycle(6);
    const EdgeColoring rainbow({0, 1, 2, 3, 4, 5});
    for (int k = 1; k <= 6; ++k) {
        const EdgeColoring c = compress_colors(rainbow, k);
        const VerifyReport r = verify_coloring(c6, c);
        EXPECT_TRUE(r.valid) << k;
        EXPECT_EQ(r.colors_used, k);
    }
}

TEST(EdgeColoringType, NormalizedAndRejectsNegatives)
{
    EXPECT_EQ(EdgeColoring({5, 2, 5, 9}).normalized(), EdgeColoring({1, 0, 1, 2}));
    EXPECT_EQ(EdgeColoring({5, 2, 5, 9}).colors_used(), 3);
    EXPECT_THROW(EdgeColoring({0, -1}), InvalidInput);
}
