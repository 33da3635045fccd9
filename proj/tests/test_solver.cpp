#include <gtest/gtest.h>

#include <vector>

#include "weylschur/solver.hpp"

using namespace weylschur;

TEST(Dimension, WeylFormula) {
    const AlgebraContext a5(6);
    EXPECT_EQ(dimension(DominantWeight({5, 1, 0, 0, 0}, a5)), 1980);
    EXPECT_EQ(dimension(DominantWeight::fundamental(3, a5)), 20);
    EXPECT_EQ(dimension(DominantWeight({1, 1}, AlgebraContext(3))), 8);
    EXPECT_EQ(dimension(DominantWeight::zero(a5)), 1);
    // Sym^q of C^n.
    for (int n = 2; n <= 6; ++n)
        for (int q = 1; q <= 6; ++q) {
            std::vector<int> l(static_cast<std::size_t>(n - 1), 0);
            l[0] = q;
            mpz_class binom;
            mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(n + q - 1), static_cast<unsigned long>(q));
            EXPECT_EQ(dimension(DominantWeight(l, AlgebraContext(n))), binom);
        }
}

TEST(Solver, FiveLambda1PlusLambda2OfA5) {
    const MultiplicityTable t = solve_multiplicities(DominantWeight({5, 1, 0, 0, 0}, AlgebraContext(6)));
    std::vector<long> m;
    std::vector<std::uint64_t> sizes;
    for (const auto& e : t.entries) {
        m.push_back(e.multiplicity.get_si());
        sizes.push_back(e.orbit_size);
    }
    EXPECT_EQ(m, (std::vector<long>{0, 1, 1, 1, 2, 2, 2, 2, 3, 3, 3, 4, 4, 5}));
    EXPECT_EQ(sizes, (std::vector<std::uint64_t>{6, 30, 30, 30, 60, 120, 60, 60, 60, 180, 60, 30, 60, 6}));
    EXPECT_EQ(t.dimension, 1980);
    EXPECT_EQ(t.equations, 14u);
    ASSERT_NE(t.find(DominantWeight::fundamental(1, AlgebraContext(6))), nullptr);
    EXPECT_EQ(t.find(DominantWeight::fundamental(1, AlgebraContext(6)))->multiplicity, 5);
    EXPECT_EQ(t.entries[13].partition, (Partition{2, 1, 1, 1, 1, 1}));
}

TEST(Solver, SymmetricPowersHaveAllOnes) {
    for (int n = 2; n <= 6; ++n) {
        const AlgebraContext ctx(n);
        SchurContext s(ctx);
        for (int q = 1; q <= 7; ++q) {
            std::vector<int> l(static_cast<std::size_t>(n - 1), 0);
            l[0] = q;
            for (const auto& e : solve_multiplicities(DominantWeight(l, ctx), s).entries)
                EXPECT_EQ(e.multiplicity, 1) << n << " " << q << " " << e.weight.str();
        }
    }
}

TEST(Solver, ExteriorPowersAreMinuscule) {
    for (int n = 3; n <= 6; ++n) {
        const AlgebraContext ctx(n);
        SchurContext s(ctx);
        for (int q = 1; q < n; ++q) {
            const DominantWeight top = DominantWeight::fundamental(q, ctx);
            const MultiplicityTable t = solve_multiplicities(top, s);
            for (const auto& e : t.entries) EXPECT_EQ(e.multiplicity, e.weight == top ? 1 : 0) << n << " " << q;
        }
    }
}

TEST(Solver, SquareSystemAtEveryHeight) {
    for (int n = 3; n <= 5; ++n) {
        const AlgebraContext ctx(n);
        SchurContext s(ctx);
        for (int q = 1; q <= 6; ++q) {
            const auto parts = sub_q_lambda1_partitions(q, ctx);
            const MultiplicityTable t = solve_multiplicities(partition_to_dominant(parts.front(), ctx), s);
            EXPECT_EQ(t.equations, parts.size()) << n << " " << q;
        }
    }
}

TEST(Solver, TrivialRepresentation) {
    const MultiplicityTable t = solve_multiplicities(DominantWeight::zero(AlgebraContext(4)));
    ASSERT_EQ(t.entries.size(), 1u);
    EXPECT_EQ(t.entries[0].multiplicity, 1);
    EXPECT_EQ(t.dimension, 1);
}

TEST(SolveExact, RejectsSingularAndInconsistentSystems) {
    const XPoly x1 = parse_xpoly("x1", 2), x2 = parse_xpoly("x2", 2);
    EXPECT_THROW(solve_exact({x1, x1 * mpq_class(2)}, x1), inconsistency_error);
    EXPECT_THROW(solve_exact({x1}, x1 + x2), inconsistency_error);
    EXPECT_THROW(solve_exact({x1, x2}, x1 * x2), inconsistency_error);
    const auto sol = solve_exact({x1 + x2, x1 - x2}, x1 * mpq_class(3) + x2);
    ASSERT_EQ(sol.size(), 2u);
    EXPECT_EQ(sol[0], 2);
    EXPECT_EQ(sol[1], 1);
}

TEST(Solver, ContextMismatchIsUsageError) {
    SchurContext s{AlgebraContext(4)};
    EXPECT_THROW(solve_multiplicities(DominantWeight::fundamental(1, AlgebraContext(5)), s), usage_error);
}
