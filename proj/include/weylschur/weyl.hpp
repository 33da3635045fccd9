#pragma once

// Alternant side of the Weyl character formula with e(mu_i) = u_i.
//
// A(rho + Lambda) is the N x N determinant det[u_i^{q_j + N - j}], A(rho) is
// the Vandermonde product, and their exact quotient is the character. All
// of this lives in the free ring Z[u_1..u_N]; u_1...u_N = 1 is imposed only
// when moving to x-indeterminates.

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "determinant.hpp"
#include "errors.hpp"
#include "lattice.hpp"
#include "orbitchar.hpp"
#include "poly.hpp"
#include "schur.hpp"

namespace weylschur {

namespace detail {

inline std::vector<unsigned> shifted_exponents(const Partition& p, const AlgebraContext& ctx) {
    const int n = ctx.n();
    const std::vector<int> q = p.padded(n);
    std::vector<unsigned> e(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) e[static_cast<std::size_t>(j)] = static_cast<unsigned>(q[static_cast<std::size_t>(j)] + n - 1 - j);
    return e;
}

} // namespace detail

/// det[u_i^{q_j + N - j}]; the empty partition gives A(rho).
inline UPoly alternant_matrix(const Partition& p, const AlgebraContext& ctx) {
    if (p.length() > ctx.n()) throw usage_error("alternant: partition " + p.str() + " longer than N");
    const auto n = static_cast<std::size_t>(ctx.n());
    const std::vector<unsigned> e = detail::shifted_exponents(p, ctx);
    PolyMatrix<mpz_class> m(n, n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            std::vector<unsigned> mono(n, 0);
            mono[i] = e[j];
            m(i, j) = UPoly::term(Monomial(mono), mpz_class(1));
        }
    }
    return determinant(m);
}

/// Signed sum over all N! permutations of the shifted exponent vector, the
/// sign being that of the permutation. Cross-check only.
inline UPoly alternant_sum(const Partition& p, const AlgebraContext& ctx) {
    if (ctx.n() > 8) throw usage_error("alternant_sum is limited to N <= 8");
    if (p.length() > ctx.n()) throw usage_error("alternant: partition " + p.str() + " longer than N");
    const auto n = static_cast<std::size_t>(ctx.n());
    const std::vector<unsigned> e = detail::shifted_exponents(p, ctx);
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    UPoly r(n);
    do {
        int inversions = 0;
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = a + 1; b < n; ++b)
                if (perm[a] > perm[b]) ++inversions;
        std::vector<unsigned> mono(n);
        for (std::size_t i = 0; i < n; ++i) mono[i] = e[perm[i]];
        r.add_term(Monomial(mono), mpz_class(inversions % 2 == 0 ? 1 : -1));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return r;
}

/// prod_{i<j} (u_i - u_j).
inline UPoly vandermonde(const AlgebraContext& ctx) {
    const auto n = static_cast<std::size_t>(ctx.n());
    UPoly r = UPoly::one(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) r *= UPoly::variable(n, i) - UPoly::variable(n, j);
    return r;
}

/// A(rho + Lambda) / A(rho), exactly.
inline UPoly weyl_character_u(const DominantWeight& w) {
    const AlgebraContext& ctx = w.context();
    return divide_exact(alternant_matrix(w.partition(), ctx), alternant_matrix(Partition{}, ctx));
}

/// Coefficient of the dominant monomial u^(mu-partition) in the character,
/// for every member of Sub(Q lambda_1): the weight multiplicities read off
/// directly from the quotient of alternants.
inline std::vector<std::pair<DominantWeight, mpz_class>> multiplicities_from_character(const DominantWeight& w) {
    const AlgebraContext& ctx = w.context();
    const UPoly chr = weyl_character_u(w);
    const int q = height(w);
    std::vector<std::pair<DominantWeight, mpz_class>> out;
    if (q == 0) {
        out.emplace_back(w, chr.coefficient(Monomial(static_cast<std::size_t>(ctx.n()))));
        return out;
    }
    for (const auto& p : sub_q_lambda1_partitions(q, ctx)) {
        std::vector<unsigned> e;
        for (int v : p.padded(ctx.n())) e.push_back(static_cast<unsigned>(v));
        out.emplace_back(partition_to_dominant(p, ctx), chr.coefficient(Monomial(e)));
    }
    return out;
}

struct FactorizationReport {
    bool passed = false;
    /// A(rho + Lambda) - A(rho) * S lifted to u; zero on success.
    UPoly difference;
};

/// Checks A(rho + Lambda) = A(rho) * S_(q) with S_(q) lifted from x back to
/// the free u-ring (x_i -> p_i / i, homogenized by powers of u_1...u_N).
inline FactorizationReport verify_factorization(const Partition& p, SchurContext& schur) {
    const AlgebraContext& ctx = schur.context();
    const UPoly lifted = x_to_u(schur.generalized_schur(p), ctx, p.weight());
    const UPoly rhs = alternant_matrix(Partition{}, ctx) * lifted;
    FactorizationReport rep;
    rep.difference = alternant_matrix(p, ctx) - rhs;
    rep.passed = rep.difference.is_zero();
    return rep;
}

inline FactorizationReport verify_factorization(const Partition& p, const AlgebraContext& ctx) {
    SchurContext schur(ctx);
    return verify_factorization(p, schur);
}

} // namespace weylschur
