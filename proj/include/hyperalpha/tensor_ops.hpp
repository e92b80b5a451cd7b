#pragma once

#include <algorithm>
#include <cmath>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "hypergraph.hpp"

namespace hyperalpha {

/// Convex-combination weight of the degree part, restricted to [0, 1).
class Alpha {
public:
    explicit Alpha(double v) : v_(v) {
        if (!(v >= 0.0 && v < 1.0))
            throw PreconditionViolated("alpha must lie in [0,1)");
    }
    double value() const { return v_; }

private:
    double v_;
};

/// x^e for nonnegative integer e.
inline double ipow(double x, int e) {
    double r = 1.0;
    while (e > 0) {
        if (e & 1) r *= x;
        x *= x;
        e >>= 1;
    }
    return r;
}

/// Real vector of dimension n with its k-norm (sum |x_i|^k)^(1/k) cached.
class KVector {
public:
    KVector(std::vector<double> entries, int k) : v_(std::move(entries)), k_(k) {
        if (k_ < 2) throw PreconditionViolated("tensor order must be >= 2");
        for (double x : v_)
            if (!std::isfinite(x)) throw PreconditionViolated("non-finite vector entry");
        knorm_ = compute_knorm(v_, k_);
    }

    static KVector uniform_unit(int n, int k) {
        return KVector(std::vector<double>(n, std::pow(static_cast<double>(n), -1.0 / k)), k);
    }
    static KVector ones(int n, int k) { return KVector(std::vector<double>(n, 1.0), k); }

    int dim() const { return static_cast<int>(v_.size()); }
    int order() const { return k_; }
    double k_norm() const { return knorm_; }
    const std::vector<double>& entries() const& { return v_; }
    std::vector<double> entries() && { return std::move(v_); }
    double operator[](int i) const { return v_[i]; }  // 0-based

    bool is_unit(double tol = 1e-12) const {
        double s = 0.0;
        for (double x : v_) s += ipow(std::fabs(x), k_);
        return std::fabs(s - 1.0) <= tol;
    }
    bool is_positive() const {
        for (double x : v_)
            if (!(x > 0.0)) return false;
        return true;
    }

    KVector normalized() const {
        if (knorm_ == 0.0) throw ZeroVector("cannot normalize the zero vector");
        std::vector<double> out(v_);
        for (double& x : out) x /= knorm_;
        return KVector(std::move(out), k_);
    }

    static double compute_knorm(const std::vector<double>& v, int k) {
        double s = 0.0;
        for (double x : v) s += ipow(std::fabs(x), k);
        return std::pow(s, 1.0 / k);
    }

private:
    std::vector<double> v_;
    int k_;
    double knorm_;
};

namespace detail {

inline void check_dims(const Hypergraph& g, std::span<const double> x) {
    if (static_cast<int>(x.size()) != g.n())
        throw DimensionMismatch("vector dimension " + std::to_string(x.size()) +
                                " does not match vertex count " + std::to_string(g.n()));
}

inline void check_vec(const Hypergraph& g, const KVector& x) {
    if (x.dim() != g.n())
        throw DimensionMismatch("vector dimension " + std::to_string(x.dim()) +
                                " does not match vertex count " + std::to_string(g.n()));
    if (x.order() != g.k())
        throw DimensionMismatch("vector order " + std::to_string(x.order()) +
                                " does not match edge cardinality " + std::to_string(g.k()));
}

}  // namespace detail

/// out_i = sum over edges e containing i of prod_{j in e, j != i} x_j.
/// The per-edge product is formed once and divided out coordinate-wise; edges
/// with zero entries fall back to explicit (k-1)-term products.
inline void apply_adjacency(const Hypergraph& g, std::span<const double> x,
                            std::span<double> out) {
    detail::check_dims(g, x);
    detail::check_dims(g, out);
    std::fill(out.begin(), out.end(), 0.0);
    for (const Edge& e : g.edges()) {
        double prod = 1.0;
        int zeros = 0, zero_at = -1;
        for (int v : e) {
            double xv = x[v - 1];
            if (xv == 0.0) {
                ++zeros;
                zero_at = v;
            } else {
                prod *= xv;
            }
        }
        if (zeros == 0) {
            for (int v : e) out[v - 1] += prod / x[v - 1];
        } else if (zeros == 1) {
            out[zero_at - 1] += prod;
        }
        // two or more zeros: every coordinate contribution vanishes
    }
}

/// out_i = alpha d_i x_i^{k-1} + (1-alpha) sum_{e in E_i} x^{e \ i}.
inline void apply_a_alpha(const Hypergraph& g, Alpha alpha, std::span<const double> x,
                          std::span<double> out) {
    apply_adjacency(g, x, out);
    const double a = alpha.value();
    const int k = g.k();
    for (int v = 1; v <= g.n(); ++v)
        out[v - 1] = a * g.degree(v) * ipow(x[v - 1], k - 1) + (1.0 - a) * out[v - 1];
}

inline void apply_laplacian(const Hypergraph& g, std::span<const double> x,
                            std::span<double> out) {
    apply_adjacency(g, x, out);
    const int k = g.k();
    for (int v = 1; v <= g.n(); ++v)
        out[v - 1] = g.degree(v) * ipow(x[v - 1], k - 1) - out[v - 1];
}

inline void apply_signless_laplacian(const Hypergraph& g, std::span<const double> x,
                                     std::span<double> out) {
    apply_adjacency(g, x, out);
    const int k = g.k();
    for (int v = 1; v <= g.n(); ++v)
        out[v - 1] = g.degree(v) * ipow(x[v - 1], k - 1) + out[v - 1];
}

enum class TensorKind { adjacency, laplacian, signless_laplacian, a_alpha };

inline void tensor_apply(const Hypergraph& g, TensorKind kind, Alpha alpha,
                         std::span<const double> x, std::span<double> out) {
    switch (kind) {
        case TensorKind::adjacency: apply_adjacency(g, x, out); break;
        case TensorKind::laplacian: apply_laplacian(g, x, out); break;
        case TensorKind::signless_laplacian: apply_signless_laplacian(g, x, out); break;
        case TensorKind::a_alpha: apply_a_alpha(g, alpha, x, out); break;
    }
}

// KVector conveniences.
inline KVector apply_adjacency(const Hypergraph& g, const KVector& x) {
    detail::check_vec(g, x);
    std::vector<double> out(g.n());
    apply_adjacency(g, x.entries(), out);
    return KVector(std::move(out), g.k());
}
inline KVector apply_a_alpha(const Hypergraph& g, Alpha alpha, const KVector& x) {
    detail::check_vec(g, x);
    std::vector<double> out(g.n());
    apply_a_alpha(g, alpha, x.entries(), out);
    return KVector(std::move(out), g.k());
}
inline KVector apply_laplacian(const Hypergraph& g, const KVector& x) {
    detail::check_vec(g, x);
    std::vector<double> out(g.n());
    apply_laplacian(g, x.entries(), out);
    return KVector(std::move(out), g.k());
}
inline KVector apply_signless_laplacian(const Hypergraph& g, const KVector& x) {
    detail::check_vec(g, x);
    std::vector<double> out(g.n());
    apply_signless_laplacian(g, x.entries(), out);
    return KVector(std::move(out), g.k());
}

enum class Summation { plain, compensated };

/// x^T(A_alpha x) = alpha sum_i d_i x_i^k + (1-alpha) sum_{e} k x^e.
inline double rayleigh(const Hypergraph& g, Alpha alpha, const KVector& x,
                       Summation mode = Summation::plain) {
    detail::check_vec(g, x);
    const double a = alpha.value();
    const int k = g.k();
    if (mode == Summation::plain) {
        double s = 0.0;
        for (int v = 1; v <= g.n(); ++v) s += a * g.degree(v) * ipow(x[v - 1], k);
        for (const Edge& e : g.edges()) {
            double prod = 1.0;
            for (int v : e) prod *= x[v - 1];
            s += (1.0 - a) * k * prod;
        }
        return s;
    }
    // Kahan compensated accumulation: keeps the bound-versus-rho comparisons
    // from drowning in rounding noise on larger edge sets.
    double s = 0.0, c = 0.0;
    auto add = [&](double term) {
        double y = term - c;
        double t = s + y;
        c = (t - s) - y;
        s = t;
    };
    for (int v = 1; v <= g.n(); ++v) add(a * g.degree(v) * ipow(x[v - 1], k));
    for (const Edge& e : g.edges()) {
        double prod = 1.0;
        for (int v : e) prod *= x[v - 1];
        add((1.0 - a) * k * prod);
    }
    return s;
}

/// max_i |(Tx)_i - lambda x_i^{k-1}| / max(1, ||x||_inf^{k-1}).
inline double eig_residual(const Hypergraph& g, TensorKind kind, Alpha alpha, double lambda,
                           const KVector& x) {
    detail::check_vec(g, x);
    bool all_zero = true;
    for (double v : x.entries())
        if (v != 0.0) all_zero = false;
    if (all_zero) throw ZeroVector("eigenpair residual needs a nonzero vector");
    std::vector<double> tx(g.n());
    tensor_apply(g, kind, alpha, x.entries(), tx);
    const int k = g.k();
    double worst = 0.0, xmax = 0.0;
    for (int i = 0; i < g.n(); ++i) {
        worst = std::max(worst, std::fabs(tx[i] - lambda * ipow(x[i], k - 1)));
        xmax = std::max(xmax, std::fabs(x[i]));
    }
    return worst / std::max(1.0, ipow(xmax, k - 1));
}

inline double eig_residual(const Hypergraph& g, TensorKind kind, double lambda,
                           const KVector& x) {
    return eig_residual(g, kind, Alpha(0.0), lambda, x);
}

}  // namespace hyperalpha
