#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "errors.hpp"
#include "hypergraph.hpp"
#include "tensor_ops.hpp"

namespace hyperalpha {

inline constexpr double kDefaultSpectralTol = 1e-10;
inline constexpr int kDefaultMaxIter = 100000;

/// Spectral radius estimate with a certified bracket.
///
/// For any positive x the componentwise ratios (Tx)_i / x_i^{k-1} of a
/// nonnegative tensor enclose rho(T), so lower <= rho <= upper holds at every
/// iteration, not just at convergence.
struct SpectralResult {
    double rho = 0.0;
    double lower = 0.0;
    double upper = 0.0;
    KVector eigvec{std::vector<double>{}, 2};
    double residual = 0.0;
    int iterations = 0;
    bool converged = false;
};

/// rho_alpha of a connected hypergraph by power iteration on the shifted
/// operator T'x = A_alpha x + x^{[k-1]}. The unit shift keeps the iteration
/// convergent for weakly irreducible nonnegative tensors and moves every
/// eigenvalue by exactly one, which is subtracted from the reported bracket.
/// Update rule: x <- (T'x)^{[1/(k-1)]}, renormalized to unit k-norm, from a
/// uniform positive start.
inline SpectralResult spectral_radius(const Hypergraph& g, Alpha alpha,
                                      double tol = kDefaultSpectralTol,
                                      int max_iter = kDefaultMaxIter) {
    if (!(tol > 0.0)) throw PreconditionViolated("tolerance must be positive");
    if (!is_connected(g)) throw NotConnected("spectral_radius needs a connected hypergraph");
    const int n = g.n();
    const int k = g.k();
    if (g.m() == 0) {
        // Single isolated vertex: the zero tensor.
        SpectralResult r{0.0, 0.0, 0.0, KVector::uniform_unit(n, k), 0.0, 0, true};
        return r;
    }
    const double shift = 1.0;
    std::vector<double> x(n, std::pow(static_cast<double>(n), -1.0 / k));
    std::vector<double> tx(n), y(n);
    double lower = 0.0, upper = 0.0;
    int it = 0;
    bool converged = false;
    while (it < max_iter) {
        ++it;
        apply_a_alpha(g, alpha, x, tx);
        double lo = std::numeric_limits<double>::infinity();
        double hi = -lo;
        for (int i = 0; i < n; ++i) {
            const double xk1 = ipow(x[i], k - 1);
            y[i] = tx[i] + shift * xk1;
            const double ratio = y[i] / xk1;
            lo = std::min(lo, ratio);
            hi = std::max(hi, ratio);
        }
        lower = lo - shift;
        upper = hi - shift;
        if (hi - lo <= tol) {
            converged = true;
            break;
        }
        double norm_k = 0.0;
        for (int i = 0; i < n; ++i) {
            x[i] = std::pow(y[i], 1.0 / (k - 1));
            norm_k += ipow(x[i], k);
        }
        norm_k = std::pow(norm_k, 1.0 / k);
        for (int i = 0; i < n; ++i) x[i] /= norm_k;
    }
    KVector vec(std::move(x), k);
    SpectralResult r;
    r.lower = lower;
    r.upper = upper;
    r.rho = std::clamp(rayleigh(g, alpha, vec), lower, upper);
    r.residual = eig_residual(g, TensorKind::a_alpha, alpha, r.rho, vec);
    r.eigvec = std::move(vec);
    r.iterations = it;
    r.converged = converged;
    return r;
}

/// Per-component decomposition used for hypergraphs that may be disconnected.
struct ComponentSpectrum {
    std::vector<std::vector<int>> components;
    std::vector<SpectralResult> per_component;  // aligned with components
    int argmax = 0;                             // component index attaining the max
    SpectralResult overall;                     // eigvec embedded in dimension n
};

/// rho_alpha of an arbitrary hypergraph: the maximum over its connected
/// components; isolated vertices contribute zero.
inline ComponentSpectrum spectral_radius_components(const Hypergraph& g, Alpha alpha,
                                                    double tol = kDefaultSpectralTol,
                                                    int max_iter = kDefaultMaxIter) {
    ComponentSpectrum cs;
    Connectivity c = connectivity(g);
    cs.components = c.components;
    int total_iters = 0;
    bool all_converged = true;
    double best = -1.0;
    for (std::size_t ci = 0; ci < cs.components.size(); ++ci) {
        const std::vector<int>& comp = cs.components[ci];
        SpectralResult r;
        if (comp.size() == 1) {
            r = SpectralResult{0.0, 0.0, 0.0, KVector::uniform_unit(1, g.k()), 0.0, 0, true};
        } else {
            r = spectral_radius(induced(g, comp), alpha, tol, max_iter);
        }
        total_iters += r.iterations;
        all_converged = all_converged && r.converged;
        if (r.rho > best) {
            best = r.rho;
            cs.argmax = static_cast<int>(ci);
        }
        cs.per_component.push_back(std::move(r));
    }
    const SpectralResult& top = cs.per_component[cs.argmax];
    std::vector<double> embedded(g.n(), 0.0);
    const std::vector<int>& comp = cs.components[cs.argmax];
    for (std::size_t i = 0; i < comp.size(); ++i) embedded[comp[i] - 1] = top.eigvec[static_cast<int>(i)];
    KVector vec(std::move(embedded), g.k());
    SpectralResult overall;
    overall.lower = top.lower;
    overall.upper = top.upper;
    for (const SpectralResult& r : cs.per_component) {
        overall.lower = std::max(overall.lower, r.lower);
        overall.upper = std::max(overall.upper, r.upper);
    }
    overall.rho = std::clamp(top.rho, overall.lower, overall.upper);
    overall.residual = g.m() == 0 ? 0.0
                                  : eig_residual(g, TensorKind::a_alpha, alpha, overall.rho, vec);
    overall.eigvec = std::move(vec);
    overall.iterations = total_iters;
    overall.converged = all_converged;
    cs.overall = std::move(overall);
    return cs;
}

inline SpectralResult spectral_radius_any(const Hypergraph& g, Alpha alpha,
                                          double tol = kDefaultSpectralTol,
                                          int max_iter = kDefaultMaxIter) {
    return spectral_radius_components(g, alpha, tol, max_iter).overall;
}

inline long long factorial(int k) {
    long long f = 1;
    for (int i = 2; i <= k; ++i) f *= i;
    return f;
}

/// u (x) e: the product-space vector whose (i,j) entry is u_i, laid out with i
/// varying fastest, matching product_vertex().
inline KVector kron_with_ones(const KVector& u, int m_h) {
    std::vector<double> out(static_cast<std::size_t>(u.dim()) * m_h);
    for (int j = 0; j < m_h; ++j)
        for (int i = 0; i < u.dim(); ++i) out[static_cast<std::size_t>(j) * u.dim() + i] = u[i];
    return KVector(std::move(out), u.order());
}

/// Outcome of verifying rho_alpha(G x H) = (k-1)! d rho_alpha(G) for a
/// connected d-regular H, together with the eigenvector transport u (x) e.
struct ProductRhoReport {
    int degree_h = 0;
    double rho_g = 0.0;
    double rho_product = 0.0;
    double expected = 0.0;   // (k-1)! * d * rho_g
    double diff = 0.0;       // |rho_product - expected|
    double evec_residual = 0.0;
    double scale = 1.0;      // 1 + |rho_product|
    double tol = 0.0;
    bool rho_ok = false;
    bool evec_ok = false;
    bool passed = false;
};

inline ProductRhoReport check_product_rho(const Hypergraph& g, const Hypergraph& h, Alpha alpha,
                                          double tol = 1e-6,
                                          double spectral_tol = kDefaultSpectralTol,
                                          int max_iter = kDefaultMaxIter) {
    if (g.k() != h.k()) throw ArityMismatch("edge cardinalities differ");
    if (g.k() < 3) throw KTooSmall("product spectral transport needs k >= 3");
    if (!is_connected(g)) throw PreconditionViolated("G must be connected");
    if (!is_connected(h)) throw PreconditionViolated("H must be connected");
    DegreeProfile ph = degree_profile(h);
    if (!ph.regular()) throw PreconditionViolated("H must be regular");

    ProductRhoReport rep;
    rep.degree_h = ph.max_degree;
    rep.tol = tol;
    SpectralResult rg = spectral_radius(g, alpha, spectral_tol, max_iter);
    Hypergraph prod = direct_product(g, h);
    SpectralResult rp = spectral_radius(prod, alpha, spectral_tol, max_iter);
    rep.rho_g = rg.rho;
    rep.rho_product = rp.rho;
    rep.expected = static_cast<double>(factorial(g.k() - 1)) * ph.max_degree * rg.rho;
    rep.diff = std::fabs(rp.rho - rep.expected);
    rep.scale = 1.0 + std::fabs(rp.rho);
    KVector ue = kron_with_ones(rg.eigvec, h.n());
    rep.evec_residual = eig_residual(prod, TensorKind::a_alpha, alpha, rep.expected, ue);
    rep.rho_ok = rep.diff <= tol * rep.scale;
    rep.evec_ok = rep.evec_residual <= tol * rep.scale;
    rep.passed = rep.rho_ok && rep.evec_ok;
    return rep;
}

/// Outcome of transporting a Laplacian eigenpair (lambda, u) of G to the
/// eigenpair ((k-1)! d lambda, u (x) e) of G x H for d-regular H.
struct LaplacianTransportReport {
    int degree_h = 0;
    double lambda_in = 0.0;
    double residual_in = 0.0;
    double lambda_out = 0.0;
    double residual_out = 0.0;
    double tol = 0.0;
    bool passed = false;
};

inline LaplacianTransportReport check_laplacian_transport(const Hypergraph& g,
                                                          const Hypergraph& h, double lambda,
                                                          const KVector& u, double tol) {
    if (g.k() != h.k()) throw ArityMismatch("edge cardinalities differ");
    DegreeProfile ph = degree_profile(h);
    if (!ph.regular()) throw PreconditionViolated("H must be regular");
    LaplacianTransportReport rep;
    rep.degree_h = ph.max_degree;
    rep.lambda_in = lambda;
    rep.tol = tol;
    rep.residual_in = eig_residual(g, TensorKind::laplacian, lambda, u);
    if (rep.residual_in > tol)
        throw PreconditionViolated("(lambda, u) is not a Laplacian eigenpair within tolerance");
    Hypergraph prod = direct_product(g, h);
    rep.lambda_out = static_cast<double>(factorial(g.k() - 1)) * ph.max_degree * lambda;
    KVector ue = kron_with_ones(u, h.n());
    rep.residual_out = eig_residual(prod, TensorKind::laplacian, rep.lambda_out, ue);
    rep.passed = rep.residual_out <= 10.0 * tol;
    return rep;
}

}  // namespace hyperalpha
