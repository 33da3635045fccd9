#include <gtest/gtest.h>

#include <vector>

#include "weylschur/solver.hpp"
#include "weylschur/weyl.hpp"

using namespace weylschur;

namespace {

mpz_class value_at_ones(const UPoly& p) {
    mpz_class s = 0;
    for (const auto& [m, c] : p.terms()) s += c;
    return s;
}

} // namespace

TEST(Alternant, DeterminantEqualsSignedPermutationSum) {
    for (int n = 2; n <= 5; ++n) {
        const AlgebraContext ctx(n);
        for (int q = 0; q <= 5; ++q)
            for (const auto& p : partitions_of(q, n))
                EXPECT_EQ(alternant_matrix(p, ctx), alternant_sum(p, ctx)) << n << " " << p.str();
    }
}

TEST(Alternant, AntisymmetricUnderTranspositions) {
    const AlgebraContext ctx(4);
    for (const auto& p : partitions_of(4, 4)) {
        const UPoly a = alternant_matrix(p, ctx);
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = i + 1; j < 4; ++j) EXPECT_EQ(a.swapped_variables(i, j), -a) << p.str();
    }
}

TEST(Alternant, RhoIsVandermonde) {
    for (int n = 2; n <= 6; ++n) {
        const AlgebraContext ctx(n);
        EXPECT_EQ(alternant_matrix(Partition{}, ctx), vandermonde(ctx)) << n;
    }
    EXPECT_EQ(vandermonde(AlgebraContext(2)), UPoly::variable(2, 0) - UPoly::variable(2, 1));
}

TEST(Alternant, ErrorPaths) {
    EXPECT_THROW(alternant_sum(Partition{}, AlgebraContext(9)), usage_error);
    EXPECT_THROW(alternant_matrix(Partition{1, 1, 1}, AlgebraContext(2)), usage_error);
}

TEST(Character, AdjointOfA2) {
    const AlgebraContext ctx(3);
    const UPoly ch = weyl_character_u(DominantWeight({1, 1}, ctx));
    EXPECT_EQ(ch.size(), 7u);
    EXPECT_EQ(ch.coefficient({1, 1, 1}), 2);
    EXPECT_EQ(ch.coefficient({2, 1, 0}), 1);
    EXPECT_EQ(value_at_ones(ch), 8);
}

TEST(Character, EvaluatesToDimensionAndIsSchur) {
    for (int n = 2; n <= 5; ++n) {
        const AlgebraContext ctx(n);
        SchurContext s(ctx);
        for (int q = 1; q <= 5; ++q) {
            for (const auto& p : partitions_of(q, n - 1)) {
                const DominantWeight w = partition_to_dominant(p, ctx);
                const UPoly ch = weyl_character_u(w);
                EXPECT_EQ(value_at_ones(ch), dimension(w)) << n << " " << p.str();
                EXPECT_EQ(u_to_x(ch, ctx), s.generalized_schur(p)) << n << " " << p.str();
            }
        }
    }
}

TEST(Character, DirectMultiplicitiesForA5) {
    const auto direct = multiplicities_from_character(DominantWeight({5, 1, 0, 0, 0}, AlgebraContext(6)));
    std::vector<long> m;
    for (const auto& [w, c] : direct) m.push_back(c.get_si());
    EXPECT_EQ(m, (std::vector<long>{0, 1, 1, 1, 2, 2, 2, 2, 3, 3, 3, 4, 4, 5}));
    const auto trivial = multiplicities_from_character(DominantWeight::zero(AlgebraContext(4)));
    ASSERT_EQ(trivial.size(), 1u);
    EXPECT_EQ(trivial[0].second, 1);
}

TEST(Factorization, HoldsForSmallShapes) {
    for (int n = 3; n <= 4; ++n) {
        const AlgebraContext ctx(n);
        SchurContext s(ctx);
        for (int q = 1; q <= 4; ++q)
            for (const auto& p : partitions_of(q, n)) {
                const FactorizationReport r = verify_factorization(p, s);
                EXPECT_TRUE(r.passed) << n << " " << p.str();
                EXPECT_TRUE(r.difference.is_zero());
            }
    }
}

TEST(Factorization, DetectsAWrongSchurFunction) {
    // Flipping the sign of one term of S_(2,1) for A2 must break the identity.
    const AlgebraContext ctx(3);
    SchurContext s(ctx);
    XPoly wrong = s.generalized_schur(Partition{2, 1});
    ASSERT_NE(wrong.coefficient({3, 0}), 0);
    wrong += parse_xpoly("x1^3", 2) * mpq_class(-2 * wrong.coefficient({3, 0}));
    const UPoly lhs = alternant_matrix(Partition{2, 1}, ctx);
    EXPECT_NE(lhs, alternant_matrix(Partition{}, ctx) * x_to_u(wrong, ctx, 3));
}
