#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "weylschur/determinant.hpp"
#include "weylschur/poly.hpp"

using namespace weylschur;

namespace {

XPoly random_xpoly(std::mt19937& rng, std::size_t nvars, int terms, unsigned max_exp) {
    std::uniform_int_distribution<int> coef(-9, 9), den(1, 4);
    std::uniform_int_distribution<unsigned> ex(0, max_exp);
    XPoly p(nvars);
    for (int t = 0; t < terms; ++t) {
        std::vector<unsigned> e(nvars);
        for (auto& v : e) v = ex(rng);
        mpq_class c(coef(rng), den(rng));
        c.canonicalize();
        p.add_term(Monomial(e), c);
    }
    return p;
}

UPoly random_upoly(std::mt19937& rng, std::size_t nvars, int terms, unsigned max_exp) {
    return to_integer(random_xpoly(rng, nvars, terms, max_exp) * mpq_class(24));
}

// Sum over permutations, the reference every faster determinant is held to.
template <class C>
Polynomial<C> leibniz(const PolyMatrix<C>& m) {
    const std::size_t n = m.rows();
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    Polynomial<C> r(m.nvars());
    do {
        int inv = 0;
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = a + 1; b < n; ++b)
                if (perm[a] > perm[b]) ++inv;
        Polynomial<C> t = Polynomial<C>::one(m.nvars());
        for (std::size_t i = 0; i < n; ++i) t *= m(i, perm[i]);
        r += inv % 2 ? -t : t;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return r;
}

} // namespace

TEST(Monomial, GradedLexOrder) {
    const Monomial one{0, 0}, x1{1, 0}, x2{0, 1}, x1sq{2, 0}, x1x2{1, 1};
    EXPECT_LT(one, x2);
    EXPECT_LT(x2, x1);
    EXPECT_LT(x1, x1x2);
    EXPECT_LT(x1x2, x1sq);
    EXPECT_EQ(x1x2.total_degree(), 2u);
    EXPECT_EQ((Monomial{1, 0, 2}.weighted_degree()), 7u);
    EXPECT_TRUE(x1.divides(x1x2));
    EXPECT_FALSE(x2.divides(x1sq));
}

TEST(Polynomial, CanonicalFormDropsZeros) {
    XPoly p(2);
    p.add_term({1, 0}, 3);
    p.add_term({1, 0}, -3);
    EXPECT_TRUE(p.is_zero());
    EXPECT_EQ(p.str(), "0");
    EXPECT_THROW((void)p.degree(), usage_error);

    const std::vector<std::pair<Monomial, mpq_class>> raw{{{1, 0}, 1}, {{0, 1}, 2}, {{1, 0}, 1}, {{0, 0}, 0}};
    const XPoly q = XPoly::from_terms(2, raw);
    EXPECT_EQ(q.size(), 2u);
    EXPECT_EQ(q.coefficient({1, 0}), 2);
}

TEST(Polynomial, PrintsAscendingGradedLex) {
    XPoly p = XPoly::constant(6, -1);
    p.add_term({6, 0, 0, 0, 0, 0}, mpq_class(1, 720));
    p.add_term({1, 1, 0, 0, 0, 0}, -1);
    EXPECT_EQ(p.str(), "-1 - x1*x2 + 1/720*x1^6");
    EXPECT_EQ(str_factored(p), "1/720*(-720 - 720*x1*x2 + x1^6)");
    EXPECT_EQ(UPoly::variable(3, 2).str("u"), "u3");
}

TEST(Polynomial, RingAxiomsOnRandomInput) {
    std::mt19937 rng(20240611);
    for (int trial = 0; trial < 40; ++trial) {
        const XPoly a = random_xpoly(rng, 3, 5, 3);
        const XPoly b = random_xpoly(rng, 3, 4, 2);
        const XPoly c = random_xpoly(rng, 3, 3, 2);
        EXPECT_EQ(a + b, b + a);
        EXPECT_EQ(a * b, b * a);
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_TRUE((a - a).is_zero());
        EXPECT_EQ(a * XPoly::one(3), a);
        if (!a.is_zero() && !b.is_zero()) EXPECT_EQ((a * b).degree(), a.degree() + b.degree());
    }
}

TEST(Polynomial, PowMatchesRepeatedProduct) {
    const XPoly x = XPoly::variable(2, 0) + XPoly::variable(2, 1);
    XPoly r = XPoly::one(2);
    for (int i = 0; i < 5; ++i) r *= x;
    EXPECT_EQ(x.pow(5), r);
    EXPECT_EQ(r.coefficient({2, 3}), 10);
}

TEST(Polynomial, ExactDivisionRoundTrips) {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 30; ++trial) {
        const UPoly a = random_upoly(rng, 3, 4, 3);
        UPoly b = random_upoly(rng, 3, 3, 2);
        if (b.is_zero()) continue;
        EXPECT_EQ(divide_exact(a * b, b), a);
        const XPoly ar = to_rational(a), br = to_rational(b);
        EXPECT_EQ(divide_exact(ar * br, br), ar);
    }
}

TEST(Polynomial, InexactDivisionThrows) {
    const UPoly x = UPoly::variable(2, 0), y = UPoly::variable(2, 1);
    EXPECT_THROW(divide_exact(x * x + y, x), inexact_division);
    EXPECT_THROW(divide_exact(x + x + y, x + x), inexact_division); // content 2 does not divide y
    EXPECT_THROW(divide_exact(x, UPoly(2)), usage_error);
    EXPECT_THROW(divide_exact(x, UPoly::one(3)), usage_error);
}

TEST(Polynomial, RingSizeMismatchIsUsageError) {
    EXPECT_THROW(XPoly::one(2) + XPoly::one(3), usage_error);
    EXPECT_THROW(XPoly::variable(2, 2), usage_error);
}

TEST(Polynomial, ToIntegerRejectsFractions) {
    XPoly p(1);
    p.add_term({1}, mpq_class(1, 2));
    EXPECT_THROW(to_integer(p), inconsistency_error);
}

TEST(Polynomial, SubstituteComposes) {
    // f(x1, x2) = x1^2 - x2, x1 -> u1 + u2, x2 -> u1 u2
    XPoly f = XPoly::variable(2, 0).pow(2) - XPoly::variable(2, 1);
    const UPoly u1 = UPoly::variable(2, 0), u2 = UPoly::variable(2, 1);
    const std::vector<XPoly> images{to_rational(u1 + u2), to_rational(u1 * u2)};
    const XPoly g = f.substitute<mpq_class>(images);
    EXPECT_EQ(g, to_rational(u1 * u1 + u1 * u2 + u2 * u2));
}

TEST(Polynomial, NegatedAndSwappedVariables) {
    const XPoly p = parse_xpoly("x1^2*x2 + 3*x2", 2);
    EXPECT_EQ(p.negated_variables(), parse_xpoly("-x1^2*x2 - 3*x2", 2));
    EXPECT_EQ(p.swapped_variables(0, 1), parse_xpoly("x2^2*x1 + 3*x1", 2));
    EXPECT_EQ(p.with_nvars(3).nvars(), 3u);
    EXPECT_THROW((void)p.with_nvars(1), usage_error);
}

TEST(Parser, ReadsPrintedForms) {
    const XPoly p = parse_xpoly("-1 + 1/720 x_1^6 - 1/24 x1^4 x2 + (x2 + x3)^2", 3);
    EXPECT_EQ(p.coefficient({6, 0, 0}), mpq_class(1, 720));
    EXPECT_EQ(p.coefficient({4, 1, 0}), mpq_class(-1, 24));
    EXPECT_EQ(p.coefficient({0, 1, 1}), 2);
    EXPECT_EQ(p.coefficient({0, 0, 0}), -1);
    EXPECT_THROW(parse_xpoly("x4", 3), usage_error);
    EXPECT_THROW(parse_xpoly("1 +", 3), usage_error);
}

TEST(Parser, RoundTripsPrintedOutput) {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 25; ++trial) {
        const XPoly p = random_xpoly(rng, 4, 6, 3);
        EXPECT_EQ(parse_xpoly(p.str(), 4), p);
        EXPECT_EQ(parse_xpoly(str_factored(p), 4), p);
    }
}

TEST(Determinant, MethodsAgreeWithLeibniz) {
    std::mt19937 rng(3);
    for (std::size_t n = 1; n <= 4; ++n) {
        for (int trial = 0; trial < 5; ++trial) {
            PolyMatrix<mpz_class> m(n, n, 2);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) m(i, j) = random_upoly(rng, 2, 2, 2);
            const UPoly ref = leibniz(m);
            EXPECT_EQ(determinant(m, DetMethod::cofactor), ref) << n;
            EXPECT_EQ(determinant(m, DetMethod::bareiss), ref) << n;
        }
    }
}

TEST(Determinant, BareissPivotsPastZeros) {
    PolyMatrix<mpq_class> m(3, 3, 1);
    const XPoly x = XPoly::variable(1, 0);
    m(0, 1) = x;
    m(1, 0) = XPoly::one(1);
    m(2, 2) = x + XPoly::one(1);
    EXPECT_EQ(determinant(m, DetMethod::bareiss), -(x * (x + XPoly::one(1))));
    EXPECT_EQ(determinant(m, DetMethod::bareiss), determinant(m, DetMethod::cofactor));
}

TEST(Determinant, NonSquareIsUsageError) {
    EXPECT_THROW(determinant(PolyMatrix<mpq_class>(2, 3, 1)), usage_error);
}
