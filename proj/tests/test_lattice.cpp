#include <gtest/gtest.h>

#include <set>
#include <vector>

#include "weylschur/lattice.hpp"

using namespace weylschur;

TEST(AlgebraContext, RankAndName) {
    const AlgebraContext a5(6);
    EXPECT_EQ(a5.n(), 6);
    EXPECT_EQ(a5.rank(), 5);
    EXPECT_EQ(a5.name(), "A5");
    EXPECT_THROW(AlgebraContext(1), usage_error);
}

TEST(Partition, Validation) {
    EXPECT_THROW((Partition{1, 2}), usage_error);
    EXPECT_THROW((Partition{2, 0}), usage_error);
    EXPECT_EQ(Partition::from_unsorted({0, 1, 3, 0, 1}), (Partition{3, 1, 1}));
    const Partition p{4, 2, 2, 1};
    EXPECT_EQ(p.weight(), 9);
    EXPECT_EQ(p.length(), 4);
    EXPECT_EQ(p.multiplicity(2), 2);
    EXPECT_EQ(p.padded(6), (std::vector<int>{4, 2, 2, 1, 0, 0}));
    EXPECT_THROW((void)p.padded(3), usage_error);
    EXPECT_EQ(p.str(), "(4,2,2,1)");
}

TEST(DominantWeight, PartitionRoundTrip) {
    const AlgebraContext ctx(6);
    const DominantWeight w({5, 1, 0, 0, 0}, ctx);
    EXPECT_EQ(w.partition(), (Partition{6, 1}));
    EXPECT_EQ(height(w), 7);
    EXPECT_EQ(w.str(), "5L1 + L2");
    EXPECT_EQ(partition_to_dominant(Partition{6, 1}, ctx), w);
    // Full columns drop out: (3,2,2,2,2,2) is (1) shifted by two columns.
    EXPECT_EQ(column_reduced(Partition{3, 2, 2, 2, 2, 2}, ctx), (Partition{1}));
    EXPECT_THROW(DominantWeight({1, 0}, ctx), usage_error);
    EXPECT_THROW(DominantWeight({1, 0, 0, 0, -1}, ctx), usage_error);
    EXPECT_THROW(partition_to_dominant(Partition{1, 1, 1, 1, 1, 1, 1}, ctx), usage_error);
}

TEST(DominantWeight, FundamentalWeights) {
    const AlgebraContext ctx(5);
    for (int i = 1; i <= 4; ++i) {
        const DominantWeight f = DominantWeight::fundamental(i, ctx);
        EXPECT_EQ(f.partition(), Partition(std::vector<int>(static_cast<std::size_t>(i), 1)));
        EXPECT_EQ(height(f), i);
    }
    EXPECT_THROW(DominantWeight::fundamental(5, ctx), usage_error);
    EXPECT_EQ(DominantWeight::zero(ctx).str(), "0");
}

TEST(Weight, CanonicalFormAndDominance) {
    const AlgebraContext ctx(4);
    const Weight a({3, 1, 1, 1}, ctx), b({2, 0, 0, 0}, ctx);
    EXPECT_EQ(a, b);
    EXPECT_EQ(a.lambda_coords(), (std::vector<int>{2, 0, 0}));
    EXPECT_TRUE(a.is_dominant());
    EXPECT_FALSE(Weight({0, 1, 0, 0}, ctx).is_dominant());
    EXPECT_EQ(simple_root(2, ctx), (std::vector<int>{0, 1, -1, 0}));
}

TEST(Partitions, CountsAndOrder) {
    // p(7) = 15; at most 6 rows drops only (1^7).
    EXPECT_EQ(partitions_of(7, 7).size(), 15u);
    const auto sub = partitions_of(7, 6);
    ASSERT_EQ(sub.size(), 14u);
    EXPECT_EQ(sub.front(), (Partition{7}));
    EXPECT_EQ(sub[1], (Partition{6, 1}));
    EXPECT_EQ(sub[3], (Partition{4, 3}));
    EXPECT_EQ(sub.back(), (Partition{2, 1, 1, 1, 1, 1}));
    for (std::size_t i = 1; i < sub.size(); ++i) EXPECT_LE(sub[i - 1].length(), sub[i].length());
    EXPECT_EQ(partitions_of(0, 3).size(), 1u);
    EXPECT_TRUE(partitions_of(-1, 3).empty());
}

TEST(SubQLambda1, SevenLambda1OfA5) {
    const AlgebraContext ctx(6);
    const auto sub = sub_q_lambda1(7, ctx);
    ASSERT_EQ(sub.size(), 14u);
    const std::vector<std::vector<int>> expected{
        {7, 0, 0, 0, 0}, {5, 1, 0, 0, 0}, {3, 2, 0, 0, 0}, {1, 3, 0, 0, 0}, {4, 0, 1, 0, 0},
        {2, 1, 1, 0, 0}, {0, 2, 1, 0, 0}, {1, 0, 2, 0, 0}, {3, 0, 0, 1, 0}, {1, 1, 0, 1, 0},
        {0, 0, 1, 1, 0}, {2, 0, 0, 0, 1}, {0, 1, 0, 0, 1}, {1, 0, 0, 0, 0}};
    for (std::size_t i = 0; i < sub.size(); ++i) EXPECT_EQ(sub[i].lambda_coords(), expected[i]) << i;
    // Heights differ from 7 by multiples of N.
    for (const auto& w : sub) EXPECT_EQ((7 - height(w)) % 6, 0);
    EXPECT_THROW(sub_q_lambda1(0, ctx), usage_error);
}

TEST(Orbits, SizesAreMultinomials) {
    const AlgebraContext ctx(6);
    EXPECT_EQ(orbit_size(DominantWeight({5, 1, 0, 0, 0}, ctx)), 30u);
    EXPECT_EQ(orbit_size(DominantWeight({1, 1, 0, 1, 0}, ctx)), 180u);
    EXPECT_EQ(orbit_size(DominantWeight::zero(ctx)), 1u);
    for (const auto& w : sub_q_lambda1(7, ctx)) {
        const auto orbit = orbit_weights(w);
        EXPECT_EQ(orbit.size(), orbit_size(w));
        std::set<Weight> distinct(orbit.begin(), orbit.end());
        EXPECT_EQ(distinct.size(), orbit.size());
        int dominant = 0;
        for (const auto& o : orbit) dominant += o.is_dominant();
        EXPECT_EQ(dominant, 1);
    }
}

TEST(Orbits, LargeRankDoesNotOverflow) {
    const AlgebraContext ctx(20);
    EXPECT_EQ(orbit_size(DominantWeight::fundamental(10, ctx)), 184756u);
    EXPECT_THROW(orbit_size(partition_to_dominant(Partition::from_unsorted({20, 19, 18, 17, 16, 15, 14, 13, 12, 11, 10,
                                                                             9, 8, 7, 6, 5, 4, 3, 2, 1}),
                                                   AlgebraContext(21))),
                 usage_error);
}
