#pragma once

// Ground truth that never touches the Schur pipeline. Only poly.hpp and
// lattice.hpp may be included here.
//
//   freudenthal       top-down Freudenthal recursion over positive roots
//   kostka            semistandard tableaux counted by filling cells
//   brute_orbit_char  orbit sum over all N! index permutations

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "errors.hpp"
#include "lattice.hpp"
#include "poly.hpp"

namespace weylschur::oracle {

using WeightMultiplicityMap = std::map<Weight, mpz_class>;

namespace detail {

inline long norm_sq(const std::vector<int>& v) {
    long s = 0;
    for (int x : v) s += static_cast<long>(x) * x;
    return s;
}

inline bool dominated_by(const std::vector<int>& mu, const std::vector<int>& lambda) {
    long a = 0, b = 0;
    for (std::size_t i = 0; i < mu.size(); ++i) {
        a += mu[i];
        b += lambda[i];
        if (a > b) return false;
    }
    return true;
}

} // namespace detail

/// Full weight multiplicity map of the irreducible representation.
///
/// Weights are kept as nonnegative N-vectors summing to the height Q of the
/// highest weight, so the mu_1 + ... + mu_N = 0 projection drops out of every
/// inner product difference: (v, e_i - e_j) = v_i - v_j and |alpha|^2 = 2.
inline WeightMultiplicityMap freudenthal(const DominantWeight& w) {
    const AlgebraContext& ctx = w.context();
    const int n = ctx.n();
    const std::vector<int> lambda = w.partition().padded(n);
    const int q = std::accumulate(lambda.begin(), lambda.end(), 0);

    std::vector<int> rho(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) rho[static_cast<std::size_t>(i)] = n - 1 - i;
    auto shifted_norm = [&](const std::vector<int>& v) {
        std::vector<int> s(v.size());
        for (std::size_t i = 0; i < v.size(); ++i) s[i] = v[i] + rho[i];
        return detail::norm_sq(s);
    };

    // Dominant weights of the representation, highest first.
    std::vector<std::vector<int>> dominant;
    for (const auto& p : partitions_of(q, n)) {
        std::vector<int> v = p.padded(n);
        if (detail::dominated_by(v, lambda)) dominant.push_back(std::move(v));
    }
    std::stable_sort(dominant.begin(), dominant.end(), [&](const auto& a, const auto& b) {
        return shifted_norm(a) > shifted_norm(b);
    });

    std::map<std::vector<int>, mpz_class> dom_mult;
    auto lookup = [&](std::vector<int> v) -> mpz_class {
        for (int x : v)
            if (x < 0) return 0;
        std::sort(v.begin(), v.end(), std::greater<>());
        auto it = dom_mult.find(v);
        return it == dom_mult.end() ? mpz_class(0) : it->second;
    };

    const long top = shifted_norm(lambda);
    for (const auto& mu : dominant) {
        if (mu == lambda) {
            dom_mult[mu] = 1;
            continue;
        }
        mpz_class sum = 0;
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) {
                std::vector<int> v = mu;
                while (v[static_cast<std::size_t>(j)] > 0) { // mu + k alpha_ij, k = 1, 2, ...
                    ++v[static_cast<std::size_t>(i)];
                    --v[static_cast<std::size_t>(j)];
                    const mpz_class m = lookup(v);
                    if (m != 0) sum += m * (v[static_cast<std::size_t>(i)] - v[static_cast<std::size_t>(j)]);
                }
            }
        }
        const long denom = top - shifted_norm(mu);
        if (denom <= 0) throw inconsistency_error("Freudenthal denominator is not positive");
        mpz_class num = 2 * sum;
        if (!mpz_divisible_ui_p(num.get_mpz_t(), static_cast<unsigned long>(denom)))
            throw inconsistency_error("Freudenthal recursion produced a fraction");
        dom_mult[mu] = num / denom;
    }

    WeightMultiplicityMap out;
    for (const auto& [mu, m] : dom_mult) {
        if (m == 0) continue;
        std::vector<int> v = mu;
        std::sort(v.begin(), v.end());
        do {
            out.emplace(Weight(v, ctx), m);
        } while (std::next_permutation(v.begin(), v.end()));
    }
    return out;
}

/// Number of semistandard tableaux of the given shape whose entries
/// 1, 2, ... occur content[0], content[1], ... times.
inline std::uint64_t kostka(const Partition& shape, const std::vector<int>& content) {
    int total = 0;
    for (int c : content) {
        if (c < 0) throw usage_error("kostka: negative content entry");
        total += c;
    }
    if (total != shape.weight()) throw usage_error("kostka: shape and content have different weights");

    const std::size_t rows = static_cast<std::size_t>(shape.length());
    std::vector<std::vector<int>> tab(rows);
    for (std::size_t r = 0; r < rows; ++r) tab[r].assign(static_cast<std::size_t>(shape.parts()[r]), 0);
    std::vector<int> left = content;
    const int values = static_cast<int>(content.size());

    std::uint64_t count = 0;
    auto fill = [&](auto&& self, std::size_t r, std::size_t c) -> void {
        if (r == rows) {
            ++count;
            return;
        }
        const std::size_t nr = c + 1 == tab[r].size() ? r + 1 : r;
        const std::size_t nc = c + 1 == tab[r].size() ? 0 : c + 1;
        int lo = 1;
        if (c > 0) lo = std::max(lo, tab[r][c - 1]);
        if (r > 0) lo = std::max(lo, tab[r - 1][c] + 1);
        for (int v = lo; v <= values; ++v) {
            if (left[static_cast<std::size_t>(v - 1)] == 0) continue;
            --left[static_cast<std::size_t>(v - 1)];
            tab[r][c] = v;
            self(self, nr, nc);
            ++left[static_cast<std::size_t>(v - 1)];
        }
        tab[r][c] = 0;
    };
    if (rows == 0) return 1;
    fill(fill, 0, 0);
    return count;
}

inline std::uint64_t kostka(const Partition& shape, const Partition& content) {
    return kostka(shape, content.parts());
}

/// Kostka numbers K_{lambda, mu} for every uncollapsed partition mu of Q with
/// at most N rows, the shape being the highest weight's partition.
inline std::vector<std::pair<Partition, std::uint64_t>> kostka_multiplicities(const DominantWeight& w) {
    const Partition shape = w.partition();
    std::vector<std::pair<Partition, std::uint64_t>> out;
    for (const auto& mu : partitions_of(shape.weight(), w.context().n()))
        out.emplace_back(mu, kostka(shape, mu));
    return out;
}

/// Sum of u^sigma(v) over all N! index permutations sigma of the padded
/// mu-vector, keeping each distinct monomial once.
inline UPoly brute_orbit_char(const DominantWeight& w) {
    const int n = w.context().n();
    const std::vector<int> v = w.partition().padded(n);
    std::vector<std::size_t> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::set<Monomial> monomials;
    do {
        std::vector<unsigned> e(perm.size());
        for (std::size_t i = 0; i < perm.size(); ++i) e[i] = static_cast<unsigned>(v[perm[i]]);
        monomials.insert(Monomial(std::move(e)));
    } while (std::next_permutation(perm.begin(), perm.end()));
    UPoly r(static_cast<std::size_t>(n));
    for (const auto& m : monomials) r.add_term(m, mpz_class(1));
    return r;
}

} // namespace weylschur::oracle
