#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "normcolour/colouring.hpp"
#include "normcolour/semantics.hpp"
#include "test_support.hpp"

namespace normcolour {
namespace {

TEST(DsaturTest, IsolatedVerticesShareColourZero) {
  const auto phi = dsatur(testing::edgeless(3));
  EXPECT_EQ(phi.num_colours, 1u);
  EXPECT_EQ(phi.assignment, (std::vector<ColourId>{0, 0, 0}));
}

TEST(DsaturTest, TriangleNeedsThreeColours) {
  const auto phi = dsatur(testing::complete(3));
  EXPECT_EQ(phi.num_colours, 3u);
  EXPECT_TRUE(is_valid_colouring(testing::complete(3), phi));
}

TEST(DsaturTest, PathOfFourMatchesChromaticNumber) {
  const auto g = testing::path(4);
  const auto phi = dsatur(g);
  EXPECT_TRUE(is_valid_colouring(g, phi));
  EXPECT_EQ(phi.num_colours, chromatic_number(g));
  EXPECT_EQ(phi.num_colours, 2u);
}

TEST(DsaturTest, EmptyGraph) {
  const auto phi = dsatur(ConflictGraph{});
  EXPECT_EQ(phi.num_colours, 0u);
  EXPECT_TRUE(phi.assignment.empty());
}

// Hand trace: degrees (a,b,c,d,e) = (2,2,2,1,1). a first (degree, then
// insertion order) -> 0; b and c reach saturation 1, b wins by position -> 1;
// c has saturation 2 -> 2; d, e then follow with 0 and 1.
TEST(DsaturTest, PinnedTieBreakTrace) {
  const auto phi = dsatur(testing::triangle_plus_edge());
  EXPECT_EQ(phi.assignment, (std::vector<ColourId>{0, 1, 2, 0, 1}));
  EXPECT_EQ(phi.num_colours, 3u);
}

TEST(DsaturTest, StartsFromHighestDegreeVertex) {
  // star with centre v3: the centre is coloured first and takes colour 0
  const auto g = testing::from_edges(4, {{3, 0}, {3, 1}, {3, 2}});
  const auto phi = dsatur(g);
  EXPECT_EQ(phi.assignment, (std::vector<ColourId>{1, 1, 1, 0}));
}

TEST(ValidityTest, BipartiteTwoColouringIsValid) {
  const auto g = testing::complete_bipartite(2, 3);
  EXPECT_TRUE(is_valid_colouring(g, Colouring{{0, 0, 1, 1, 1}, 2}));
}

TEST(ValidityTest, MonochromaticEdgeIsInvalid) {
  const auto g = testing::complete_bipartite(2, 3);
  EXPECT_FALSE(is_valid_colouring(g, Colouring{{0, 1, 1, 2, 2}, 3}));
}

TEST(ValidityTest, AnyColouringOfEdgelessGraphIsValid) {
  const auto g = testing::edgeless(4);
  EXPECT_TRUE(is_valid_colouring(g, Colouring{{0, 0, 0, 0}, 1}));
  EXPECT_TRUE(is_valid_colouring(g, Colouring{{3, 1, 2, 0}, 4}));
}

TEST(ValidityTest, IncompleteColouringThrows) {
  try {
    is_valid_colouring(testing::path(3), Colouring{{0, 1}, 2});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::IncompleteColouring);
  }
}

TEST(ColourClassTest, Examples) {
  const auto k3 = testing::complete(3);
  EXPECT_EQ(colour_classes(k3, Colouring{{0, 1, 2}, 3}),
            (std::vector<std::vector<VertexIndex>>{{0}, {1}, {2}}));

  const auto p3 = testing::path(3);
  EXPECT_EQ(colour_classes(p3, dsatur(p3)), (std::vector<std::vector<VertexIndex>>{{1}, {0, 2}}));

  const auto e5 = testing::edgeless(5);
  EXPECT_EQ(colour_classes(e5, dsatur(e5)), (std::vector<std::vector<VertexIndex>>{{0, 1, 2, 3, 4}}));
}

TEST(GreedyTest, FollowsGivenOrder) {
  const auto g = testing::path(4);
  // both ends first forces the middle pair apart: three colours on a bipartite graph
  const std::vector<VertexIndex> order{0, 3, 1, 2};
  const auto phi = greedy_colouring(g, order);
  EXPECT_EQ(phi.assignment, (std::vector<ColourId>{0, 1, 2, 0}));
  const std::vector<VertexIndex> along{0, 1, 2, 3};
  EXPECT_EQ(greedy_colouring(g, along).assignment, (std::vector<ColourId>{0, 1, 0, 1}));
  EXPECT_TRUE(is_valid_colouring(g, phi));
  EXPECT_THROW(greedy_colouring(g, std::vector<VertexIndex>{0, 0, 1, 2}), Error);
}

TEST(ColouringProperties, RandomSmallGraphs) {
  std::mt19937_64 rng(5);
  for (int round = 0; round < 300; ++round) {
    const std::size_t n = 1 + rng() % 10;
    const double p = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
    const auto g = testing::random_graph(n, p, rng);
    const auto phi = dsatur(g);
    ASSERT_TRUE(is_valid_colouring(g, phi));
    EXPECT_LE(phi.num_colours, g.max_degree() + 1);
    EXPECT_GE(phi.num_colours, chromatic_number(g));
    const auto classes = colour_classes(g, phi);
    std::size_t covered = 0;
    for (const auto& cls : classes) {
      EXPECT_FALSE(cls.empty());
      covered += cls.size();
      for (VertexIndex a : cls)
        for (VertexIndex b : cls) EXPECT_FALSE(g.has_edge(a, b));
    }
    EXPECT_EQ(covered, n);

    std::vector<VertexIndex> order(n);
    std::iota(order.begin(), order.end(), VertexIndex{0});
    std::shuffle(order.begin(), order.end(), rng);
    EXPECT_TRUE(is_valid_colouring(g, greedy_colouring(g, order)));
  }
}

TEST(ColouringProperties, ExactOnEdgelessCompleteAndBipartite) {
  for (std::size_t n = 1; n <= 8; ++n) {
    EXPECT_EQ(dsatur(testing::edgeless(n)).num_colours, 1u);
    EXPECT_EQ(dsatur(testing::complete(n)).num_colours, n);
    EXPECT_EQ(dsatur(testing::complete_bipartite(n, 9 - n)).num_colours, 2u);
    EXPECT_EQ(dsatur(testing::cycle(2 * n + 2)).num_colours, 2u);
  }
}

}  // namespace
}  // namespace normcolour
