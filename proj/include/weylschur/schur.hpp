#pragma once

// Elementary, degenerated and generalized Schur functions in x_1..x_{N-1}.
//
// S_Q is the degree-Q coefficient of Exp(sum x_i z^i), i.e. the complete
// homogeneous symmetric function h_Q once x_i = p_i / i. Below N it is the
// generic polynomial; from N on, u_1...u_N = 1 makes it degenerate.
// S_(q_1..q_k) is the Jacobi-Trudi determinant det[S_{q_i - i + j}].

#include <gmpxx.h>

#include <cstddef>
#include <deque>
#include <map>
#include <vector>

#include "determinant.hpp"
#include "errors.hpp"
#include "lattice.hpp"
#include "orbitchar.hpp"
#include "poly.hpp"

namespace weylschur {

/// Caches elementary and generalized Schur functions for one rank. Not safe
/// for concurrent use; confine an instance to a single thread.
class SchurContext {
public:
    explicit SchurContext(const AlgebraContext& ctx) : ctx_(ctx), table_(ctx) {
        elementary_.push_back(XPoly::one(nvars()));
    }

    const AlgebraContext& context() const noexcept { return ctx_; }
    std::size_t nvars() const noexcept { return static_cast<std::size_t>(ctx_.n() - 1); }
    PowerSumTable& power_sums() noexcept { return table_; }

    /// S_Q; S_0 = 1 and S_Q = 0 for Q < 0.
    const XPoly& elementary_schur(int q) {
        if (q < 0) return zero_;
        const int n = ctx_.n();
        while (static_cast<int>(elementary_.size()) <= q) {
            const int m = static_cast<int>(elementary_.size());
            XPoly acc(nvars());
            if (m < n) {
                // m S_m = sum_{i=1}^m i x_i S_{m-i}
                for (int i = 1; i <= m; ++i)
                    acc += table_.power_sum(i) * elementary_[static_cast<std::size_t>(m - i)];
                acc *= mpq_class(1, m);
            } else {
                // h_m = sum_{k=1}^N (-1)^{k-1} e_k h_{m-k}, e_N = 1
                for (int k = 1; k <= n; ++k) {
                    XPoly t = table_.elementary(k) * elementary_[static_cast<std::size_t>(m - k)];
                    if (k % 2 == 0) acc -= t;
                    else acc += t;
                }
            }
            elementary_.push_back(std::move(acc));
        }
        return elementary_[static_cast<std::size_t>(q)];
    }

    /// S_Q with every x_i replaced by -x_i.
    XPoly star_schur(int q) { return elementary_schur(q).negated_variables(); }

    PolyMatrix<mpq_class> jacobi_trudi_matrix(const Partition& p) {
        const auto k = static_cast<std::size_t>(p.length());
        PolyMatrix<mpq_class> m(k, k, nvars());
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j)
                m(i, j) = elementary_schur(p.parts()[i] - static_cast<int>(i) + static_cast<int>(j));
        return m;
    }

    /// S_(q_1..q_k); the empty partition gives 1.
    const XPoly& generalized_schur(const Partition& p) {
        if (auto it = generalized_.find(p); it != generalized_.end()) return it->second;
        XPoly v = p.length() == 1 ? elementary_schur(p.parts()[0]) : determinant(jacobi_trudi_matrix(p));
        return generalized_.emplace(p, std::move(v)).first->second;
    }

private:
    AlgebraContext ctx_;
    PowerSumTable table_;
    std::deque<XPoly> elementary_; // stable references while growing
    std::map<Partition, XPoly> generalized_;
    XPoly zero_{static_cast<std::size_t>(ctx_.n() - 1)};
};

inline XPoly elementary_schur(int q, const AlgebraContext& ctx) { return SchurContext(ctx).elementary_schur(q); }
inline XPoly star_schur(int q, const AlgebraContext& ctx) { return SchurContext(ctx).star_schur(q); }
inline XPoly generalized_schur(const Partition& p, const AlgebraContext& ctx) {
    return SchurContext(ctx).generalized_schur(p);
}

} // namespace weylschur
