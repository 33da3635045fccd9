#pragma once

// Weight-lattice bookkeeping for A_{N-1}.
//
// Weights live in the basis of the N weights mu_1..mu_N of the defining
// representation, subject to mu_1 + ... + mu_N = 0. A weight is therefore an
// integer N-vector modulo adding a constant to every entry; dominant weights
// are exactly the weakly decreasing vectors, i.e. partitions.

#include <algorithm>
#include <compare>
#include <functional>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <numeric>
#include <string>
#include <vector>

#include "errors.hpp"

namespace weylschur {

/// Rank datum: the algebra A_{N-1}.
class AlgebraContext {
public:
    explicit AlgebraContext(int n) : n_(n) {
        if (n < 2) throw usage_error("A_{N-1} needs N >= 2, got N = " + std::to_string(n));
    }
    int n() const noexcept { return n_; }
    int rank() const noexcept { return n_ - 1; }
    std::string name() const { return "A" + std::to_string(n_ - 1); }

    friend bool operator==(const AlgebraContext&, const AlgebraContext&) = default;

private:
    int n_;
};

/// Weakly decreasing sequence of positive integers.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] <= 0) throw usage_error("partition parts must be positive");
            if (i > 0 && parts_[i] > parts_[i - 1]) throw usage_error("partition parts must be weakly decreasing");
        }
    }
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    /// Drops zeros and sorts descending.
    static Partition from_unsorted(std::vector<int> v) {
        std::erase(v, 0);
        std::sort(v.begin(), v.end(), std::greater<>());
        return Partition(std::move(v));
    }

    const std::vector<int>& parts() const noexcept { return parts_; }
    int weight() const noexcept { return std::accumulate(parts_.begin(), parts_.end(), 0); }
    int length() const noexcept { return static_cast<int>(parts_.size()); }
    bool empty() const noexcept { return parts_.empty(); }
    int operator[](std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }

    /// Number of parts equal to v.
    int multiplicity(int v) const { return static_cast<int>(std::count(parts_.begin(), parts_.end(), v)); }

    /// Parts zero-padded to exactly n entries. Requires length() <= n.
    std::vector<int> padded(int n) const {
        if (length() > n) throw usage_error("partition longer than " + std::to_string(n));
        std::vector<int> v = parts_;
        v.resize(static_cast<std::size_t>(n), 0);
        return v;
    }

    std::string str() const {
        std::string s = "(";
        for (std::size_t i = 0; i < parts_.size(); ++i) s += (i ? "," : "") + std::to_string(parts_[i]);
        return s + ")";
    }

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition&, const Partition&) = default;

private:
    std::vector<int> parts_;
};

/// Any weight, as its canonical mu-exponent vector (minimum entry 0).
class Weight {
public:
    Weight(std::vector<int> mu, const AlgebraContext& ctx) : ctx_(ctx), mu_(std::move(mu)) {
        if (static_cast<int>(mu_.size()) != ctx.n()) throw usage_error("weight needs exactly N mu-exponents");
        const int lo = *std::min_element(mu_.begin(), mu_.end());
        for (int& v : mu_) v -= lo;
    }

    const AlgebraContext& context() const noexcept { return ctx_; }
    const std::vector<int>& mu() const noexcept { return mu_; }

    /// Coefficients over lambda_1..lambda_{N-1}: mu_i - mu_{i+1}.
    std::vector<int> lambda_coords() const {
        std::vector<int> a(mu_.size() - 1);
        for (std::size_t i = 0; i + 1 < mu_.size(); ++i) a[i] = mu_[i] - mu_[i + 1];
        return a;
    }

    bool is_dominant() const { return std::is_sorted(mu_.begin(), mu_.end(), std::greater<>()); }

    friend bool operator==(const Weight& a, const Weight& b) { return a.mu_ == b.mu_; }
    friend auto operator<=>(const Weight& a, const Weight& b) { return a.mu_ <=> b.mu_; }

private:
    AlgebraContext ctx_;
    std::vector<int> mu_;
};

/// Nonnegative combination of lambda_1..lambda_{N-1}.
class DominantWeight {
public:
    DominantWeight(std::vector<int> lambda, const AlgebraContext& ctx) : ctx_(ctx), lambda_(std::move(lambda)) {
        if (static_cast<int>(lambda_.size()) != ctx.rank())
            throw usage_error("dominant weight of " + ctx.name() + " needs " + std::to_string(ctx.rank()) +
                              " lambda-coordinates, got " + std::to_string(lambda_.size()));
        for (int a : lambda_)
            if (a < 0) throw usage_error("dominant weight coordinates must be nonnegative");
    }

    static DominantWeight zero(const AlgebraContext& ctx) {
        return DominantWeight(std::vector<int>(static_cast<std::size_t>(ctx.rank()), 0), ctx);
    }

    /// lambda_i as a dominant weight (1-based i, 1 <= i <= N-1).
    static DominantWeight fundamental(int i, const AlgebraContext& ctx) {
        if (i < 1 || i > ctx.rank()) throw usage_error("fundamental weight index out of range");
        DominantWeight w = zero(ctx);
        w.lambda_[static_cast<std::size_t>(i - 1)] = 1;
        return w;
    }

    const AlgebraContext& context() const noexcept { return ctx_; }
    const std::vector<int>& lambda_coords() const noexcept { return lambda_; }

    /// Column-reduced mu-basis partition: q_i = a_i + ... + a_{N-1}.
    Partition partition() const {
        std::vector<int> q(lambda_.size());
        int acc = 0;
        for (std::size_t i = lambda_.size(); i-- > 0;) {
            acc += lambda_[i];
            q[i] = acc;
        }
        return Partition::from_unsorted(std::move(q));
    }

    Weight weight() const { return Weight(partition().padded(ctx_.n()), ctx_); }

    std::string str() const {
        std::string s;
        for (std::size_t i = 0; i < lambda_.size(); ++i) {
            if (lambda_[i] == 0) continue;
            if (!s.empty()) s += " + ";
            if (lambda_[i] != 1) s += std::to_string(lambda_[i]);
            s += "L" + std::to_string(i + 1);
        }
        return s.empty() ? "0" : s;
    }

    friend bool operator==(const DominantWeight& a, const DominantWeight& b) {
        return a.ctx_ == b.ctx_ && a.lambda_ == b.lambda_;
    }

private:
    AlgebraContext ctx_;
    std::vector<int> lambda_;
};

/// Pads to N entries, subtracts the N-th entry from all (mu_1 + ... + mu_N = 0)
/// and reads off lambda-coordinates q_i - q_{i+1}.
inline DominantWeight partition_to_dominant(const Partition& p, const AlgebraContext& ctx) {
    if (p.length() > ctx.n())
        throw usage_error("partition " + p.str() + " has more than N = " + std::to_string(ctx.n()) + " rows");
    const std::vector<int> q = p.padded(ctx.n());
    std::vector<int> a(static_cast<std::size_t>(ctx.rank()));
    for (std::size_t i = 0; i < a.size(); ++i) a[i] = q[i] - q[i + 1];
    return DominantWeight(std::move(a), ctx);
}

/// Partition with all full columns (length-N columns) removed.
inline Partition column_reduced(const Partition& p, const AlgebraContext& ctx) {
    return partition_to_dominant(p, ctx).partition();
}

/// Sum of the mu-basis coefficients of the reduced partition.
inline int height(const DominantWeight& w) { return w.partition().weight(); }

/// The simple root alpha_i = mu_i - mu_{i+1} as a raw mu-vector (1-based i).
inline std::vector<int> simple_root(int i, const AlgebraContext& ctx) {
    if (i < 1 || i > ctx.rank()) throw usage_error("simple root index out of range");
    std::vector<int> v(static_cast<std::size_t>(ctx.n()), 0);
    v[static_cast<std::size_t>(i - 1)] = 1;
    v[static_cast<std::size_t>(i)] = -1;
    return v;
}

/// All partitions of q with at most max_len parts, by length, then
/// descending lexicographic order of the parts.
inline std::vector<Partition> partitions_of(int q, int max_len) {
    std::vector<Partition> out;
    if (q < 0) return out;
    if (q == 0) {
        out.emplace_back();
        return out;
    }
    std::vector<int> cur;
    // Generate in descending lexicographic order; stable sort by length after.
    auto rec = [&](auto&& self, int remaining, int max_part) -> void {
        if (remaining == 0) {
            out.emplace_back(cur);
            return;
        }
        if (static_cast<int>(cur.size()) == max_len) return;
        for (int part = std::min(remaining, max_part); part >= 1; --part) {
            cur.push_back(part);
            self(self, remaining - part, part);
            cur.pop_back();
        }
    };
    rec(rec, q, q);
    std::stable_sort(out.begin(), out.end(),
                     [](const Partition& a, const Partition& b) { return a.length() < b.length(); });
    return out;
}

/// The partitions behind Sub(Q lambda_1): every partition of exactly Q with
/// at most N rows, in the order used by sub_q_lambda1.
inline std::vector<Partition> sub_q_lambda1_partitions(int q, const AlgebraContext& ctx) {
    if (q < 1) throw usage_error("Sub(Q lambda_1) needs Q >= 1");
    return partitions_of(q, ctx.n());
}

/// Dominant weights congruent to Q lambda_1 (mod the root lattice): the
/// column reductions of all partitions of Q with at most N rows.
inline std::vector<DominantWeight> sub_q_lambda1(int q, const AlgebraContext& ctx) {
    std::vector<DominantWeight> out;
    for (const auto& p : sub_q_lambda1_partitions(q, ctx)) out.push_back(partition_to_dominant(p, ctx));
    return out;
}

/// Every distinct permutation of the padded mu-vector, once each, in
/// ascending lexicographic order.
inline std::vector<Weight> orbit_weights(const DominantWeight& w) {
    const AlgebraContext& ctx = w.context();
    std::vector<int> v = w.partition().padded(ctx.n());
    std::sort(v.begin(), v.end());
    std::vector<Weight> out;
    do {
        out.emplace_back(v, ctx);
    } while (std::next_permutation(v.begin(), v.end()));
    return out;
}

/// N! / prod_v (count of v)!; throws if it does not fit 64 bits.
inline std::uint64_t orbit_size(const DominantWeight& w) {
    const int n = w.context().n();
    std::vector<int> v = w.partition().padded(n);
    std::sort(v.begin(), v.end());
    // Multinomial as a product of binomials, each exact.
    std::uint64_t result = 1;
    int placed = 0;
    for (std::size_t i = 0; i < v.size();) {
        std::size_t j = i;
        while (j < v.size() && v[j] == v[i]) ++j;
        const int run = static_cast<int>(j - i);
        for (int k = 1; k <= run; ++k) {
            const auto mult = static_cast<std::uint64_t>(placed + k);
            if (result > std::numeric_limits<std::uint64_t>::max() / mult)
                throw usage_error("orbit size overflows 64 bits");
            result = result * mult / static_cast<std::uint64_t>(k);
        }
        placed += run;
        i = j;
    }
    return result;
}

} // namespace weylschur
