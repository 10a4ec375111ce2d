#include <gtest/gtest.h>

#include "swarmctl/errors.hpp"
#include "swarmctl/generator.hpp"
#include "swarmctl/matching.hpp"
#include "swarmctl/verify.hpp"

using namespace swarmctl;

namespace {

DirectedGraph path3() { return DirectedGraph::build(3, {{0, 1}, {1, 2}}); }
DirectedGraph star4() { return DirectedGraph::build(4, {{0, 1}, {0, 2}, {0, 3}}); }

TEST(RealizeSystem, PathPattern) {
    const auto sys = realize_system(path3(), {0}, 1);
    ASSERT_EQ(sys.a.rows(), 3);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            const bool edge = (i == 1 && j == 0) || (i == 2 && j == 1);
            if (edge) {
                EXPECT_GE(sys.a(i, j), 0.5);
                EXPECT_LE(sys.a(i, j), 1.5);
            } else {
                EXPECT_EQ(sys.a(i, j), 0.0);
            }
        }
    ASSERT_EQ(sys.b.cols(), 1);
    EXPECT_EQ(sys.b(0, 0), 1.0);
    EXPECT_EQ(sys.b(1, 0), 0.0);
    EXPECT_EQ(sys.b(2, 0), 0.0);
    EXPECT_TRUE(sys.anchors.empty());
}

TEST(RealizeSystem, EmptyGraphFullDrivers) {
    const auto sys = realize_system(DirectedGraph::build(3, {}), {0, 1, 2}, 1);
    EXPECT_TRUE(sys.a.isZero());
    EXPECT_TRUE(sys.b.isIdentity());
}

TEST(RealizeSystem, NonzerosEqualEdgeCount) {
    for (std::uint64_t s = 0; s < 10; ++s) {
        const auto g = sample_ssn({30, RegularDegree{2}, 0.0, s});
        const auto sys = realize_system(g, {0}, s);
        EXPECT_EQ(static_cast<std::size_t>((sys.a.array() != 0.0).count()), g.edge_count());
    }
}

TEST(RealizeSystem, AnchorsUnreachableCycle) {
    // Path 0 -> 1 plus a detached 2-cycle 2 <-> 3.
    const auto g = DirectedGraph::build(4, {{0, 1}, {2, 3}, {3, 2}});
    const auto sys = realize_system(g, {0}, 4);
    EXPECT_EQ(sys.anchors, std::vector<NodeId>{2});
    EXPECT_EQ(sys.inputs(), 1u);
    EXPECT_GT(sys.b(2, 0), 0.0);
    EXPECT_EQ(kalman_rank(sys), 4u);
}

TEST(RealizeSystem, Errors) {
    EXPECT_THROW(realize_system(DirectedGraph::build(51, {}), {0}, 0), SizeError);
    EXPECT_THROW(realize_system(path3(), {}, 0), ValidationError);
    EXPECT_THROW(realize_system(path3(), {0, 0}, 0), ValidationError);
    EXPECT_THROW(realize_system(path3(), {3}, 0), ValidationError);
}

TEST(KalmanRank, Path) {
    for (std::uint64_t s = 0; s < 5; ++s) EXPECT_EQ(kalman_rank(realize_system(path3(), {0}, s)), 3u);
}

TEST(KalmanRank, StarSingleInputFromLeaf) {
    // Anchoring fixes accessibility; one input still leaves a dilation.
    const auto sys = realize_system(star4(), {1}, 2);
    EXPECT_LT(kalman_rank(sys), 4u);
}

TEST(KalmanRank, EmptyGraphIdentity) {
    EXPECT_EQ(kalman_rank(realize_system(DirectedGraph::build(5, {}), {0, 1, 2, 3, 4}, 0)), 5u);
}

TEST(KalmanRank, StarWithMatchingDrivers) {
    const auto m = max_matching(star4());
    ASSERT_EQ(m.driver_nodes.size(), 3u);
    for (std::uint64_t s = 0; s < 10; ++s)
        EXPECT_EQ(kalman_rank(realize_system(star4(), m.driver_nodes, s)), 4u);
}

TEST(KalmanRank, TooFewInputsForStar) {
    for (std::uint64_t s = 0; s < 5; ++s)
        EXPECT_EQ(kalman_rank(realize_system(star4(), {0, 1}, s)), 3u);
}

TEST(VerifyDriverSet, RandomGraphsControllable) {
    for (std::uint64_t s = 0; s < 30; ++s) {
        const auto g = remove_links(sample_ssn({12, RegularDegree{2}, 0.0, s}), 0.3, s);
        const auto r = verify_driver_set(g, s, 3);
        EXPECT_TRUE(r.controllable) << s;
        EXPECT_EQ(r.ranks.size(), 3u);
        EXPECT_EQ(r.n, 12u);
    }
}

TEST(VerifyDriverSet, PerfectMatchingUsesNodeZero) {
    const auto r = verify_driver_set(DirectedGraph::build(3, {{0, 1}, {1, 2}, {2, 0}}), 1);
    EXPECT_EQ(r.n_driver, 1u);
    EXPECT_EQ(r.drivers, std::vector<NodeId>{0});
    EXPECT_TRUE(r.controllable);
}

TEST(VerifyDriverSet, Deterministic) {
    const auto g = sample_ssn({20, RegularDegree{2}, 0.0, 3});
    const auto a = verify_driver_set(g, 9), b = verify_driver_set(g, 9);
    EXPECT_EQ(a.ranks, b.ranks);
    EXPECT_EQ(a.weight_seeds, b.weight_seeds);
    EXPECT_EQ(a.anchors, b.anchors);
}

}  // namespace
