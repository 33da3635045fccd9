#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "poly.hpp"

namespace weylschur {

/// Dense row-major matrix of polynomials over one ring.
template <class C>
class PolyMatrix {
public:
    PolyMatrix(std::size_t rows, std::size_t cols, std::size_t nvars)
        : rows_(rows), cols_(cols), data_(rows * cols, Polynomial<C>(nvars)), nvars_(nvars) {}

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    std::size_t nvars() const noexcept { return nvars_; }

    Polynomial<C>& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Polynomial<C>& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

private:
    std::size_t rows_, cols_;
    std::vector<Polynomial<C>> data_;
    std::size_t nvars_;
};

enum class DetMethod { automatic, cofactor, bareiss };

/// Largest dimension that `automatic` expands by cofactors.
inline constexpr std::size_t cofactor_limit = 6;

namespace detail {

// Laplace expansion along rows, memoizing every minor built from the first
// r rows by its column subset. Cost is O(n 2^n) polynomial products instead
// of n!.
template <class C>
Polynomial<C> det_cofactor(const PolyMatrix<C>& m) {
    const std::size_t n = m.rows();
    if (n > 20) throw usage_error("cofactor expansion limited to 20x20");
    std::unordered_map<std::uint32_t, Polynomial<C>> prev, cur;
    prev.emplace(0u, Polynomial<C>::one(m.nvars()));
    for (std::size_t r = 0; r < n; ++r) {
        cur.clear();
        for (const auto& [mask, minor] : prev) {
            if (minor.is_zero()) continue;
            for (std::size_t c = 0; c < n; ++c) {
                const std::uint32_t bit = 1u << c;
                if (mask & bit) continue;
                const auto& entry = m(r, c);
                if (!entry.is_zero()) {
                    // Inversions added: earlier rows sitting right of c.
                    int used_right = 0;
                    for (std::size_t k = c + 1; k < n; ++k)
                        if (mask & (1u << k)) ++used_right;
                    Polynomial<C> t = entry * minor;
                    if (used_right % 2 == 1) t = -t;
                    auto [it, inserted] = cur.try_emplace(mask | bit, std::move(t));
                    if (!inserted) it->second += t;
                }
            }
        }
        std::swap(prev, cur);
    }
    const std::uint32_t full = n == 0 ? 0u : static_cast<std::uint32_t>((1ull << n) - 1);
    auto it = prev.find(full);
    return it == prev.end() ? Polynomial<C>(m.nvars()) : it->second;
}

// Fraction-free (Bareiss) elimination; every division is exact.
template <class C>
Polynomial<C> det_bareiss(PolyMatrix<C> a) {
    const std::size_t n = a.rows();
    if (n == 0) return Polynomial<C>::one(a.nvars());
    bool negate = false;
    Polynomial<C> prev_pivot = Polynomial<C>::one(a.nvars());
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k).is_zero()) {
            std::size_t p = k + 1;
            while (p < n && a(p, k).is_zero()) ++p;
            if (p == n) return Polynomial<C>(a.nvars());
            for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(p, j));
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Polynomial<C> v = a(k, k) * a(i, j) - a(i, k) * a(k, j);
                a(i, j) = divide_exact(v, prev_pivot);
            }
            a(i, k) = Polynomial<C>(a.nvars());
        }
        prev_pivot = a(k, k);
    }
    Polynomial<C> d = a(n - 1, n - 1);
    return negate ? -d : d;
}

} // namespace detail

/// Exact determinant. `automatic` expands by cofactors up to cofactor_limit
/// and switches to Bareiss elimination above it.
template <class C>
Polynomial<C> determinant(const PolyMatrix<C>& m, DetMethod method = DetMethod::automatic) {
    if (m.rows() != m.cols())
        throw usage_error("determinant of a non-square " + std::to_string(m.rows()) + "x" +
                          std::to_string(m.cols()) + " matrix");
    if (method == DetMethod::automatic)
        method = m.rows() <= cofactor_limit ? DetMethod::cofactor : DetMethod::bareiss;
    return method == DetMethod::cofactor ? detail::det_cofactor(m) : detail::det_bareiss(m);
}

} // namespace weylschur
