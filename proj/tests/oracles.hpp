// Test-only reference implementations, kept independent of the library paths
// they are used to check. Everything here works straight off edge lists with
// its own arithmetic.
#pragma once

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>
#include <vector>

#include <hyperalpha/hypergraph.hpp>

namespace oracle {

using hyperalpha::Edge;
using hyperalpha::Hypergraph;

// Connectivity via boolean transitive closure on the vertex adjacency matrix.
inline bool connected_closure(const Hypergraph& g) {
    const int n = g.n();
    std::vector<std::vector<char>> reach(n, std::vector<char>(n, 0));
    for (int i = 0; i < n; ++i) reach[i][i] = 1;
    for (const Edge& e : g.edges())
        for (int a : e)
            for (int b : e) reach[a - 1][b - 1] = 1;
    for (int t = 0; t < n; ++t)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (reach[i][t] && reach[t][j]) reach[i][j] = 1;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (!reach[i][j]) return false;
    return true;
}

// Adjacency contraction straight from the definition: enumerate every index
// tuple (i, i2, ..., ik) whose underlying set is an edge and accumulate
// 1/(k-1)! times the matching entry product.
inline std::vector<double> adjacency_apply_by_tuples(const Hypergraph& g,
                                                     const std::vector<double>& x) {
    const int n = g.n(), k = g.k();
    double fact = 1.0;
    for (int i = 2; i <= k - 1; ++i) fact *= i;
    std::vector<double> out(n, 0.0);
    std::vector<int> tuple(k - 1, 1);
    for (int i = 1; i <= n; ++i) {
        std::fill(tuple.begin(), tuple.end(), 1);
        while (true) {
            Edge candidate{i};
            candidate.insert(candidate.end(), tuple.begin(), tuple.end());
            std::sort(candidate.begin(), candidate.end());
            if (std::adjacent_find(candidate.begin(), candidate.end()) == candidate.end() &&
                g.has_edge(candidate)) {
                double prod = 1.0;
                for (int v : tuple) prod *= x[v - 1];
                out[i - 1] += prod / fact;
            }
            int pos = k - 2;
            while (pos >= 0 && tuple[pos] == n) tuple[pos--] = 1;
            if (pos < 0) break;
            ++tuple[pos];
        }
    }
    return out;
}

// Quadratic form alpha sum_i d_i x_i^k + (1-alpha) k sum_e x^e.
inline double quadratic_form(const Hypergraph& g, double alpha, const std::vector<double>& x) {
    const int k = g.k();
    std::vector<int> deg(g.n(), 0);
    for (const Edge& e : g.edges())
        for (int v : e) ++deg[v - 1];
    double s = 0.0;
    for (int i = 0; i < g.n(); ++i) s += alpha * deg[i] * std::pow(x[i], k);
    for (const Edge& e : g.edges()) {
        double prod = 1.0;
        for (int v : e) prod *= x[v - 1];
        s += (1.0 - alpha) * k * prod;
    }
    return s;
}

// Multi-start projected gradient ascent of the quadratic form over the
// nonnegative unit-k-norm shell. The gradient is projected onto the tangent
// space of the shell before stepping; steps halve on non-improvement.
inline double pga_spectral_radius(const Hypergraph& g, double alpha, std::uint64_t seed,
                                  int starts = 32, int max_steps = 5000) {
    const int n = g.n(), k = g.k();
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unif(0.05, 1.0);
    std::vector<int> deg(n, 0);
    for (const Edge& e : g.edges())
        for (int v : e) ++deg[v - 1];

    auto grad = [&](const std::vector<double>& x) {
        std::vector<double> grd(n, 0.0);
        for (int i = 0; i < n; ++i) grd[i] = alpha * deg[i] * k * std::pow(x[i], k - 1);
        for (const Edge& e : g.edges())
            for (int t = 0; t < k; ++t) {
                double prod = 1.0;
                for (int u = 0; u < k; ++u)
                    if (u != t) prod *= x[e[u] - 1];
                grd[e[t] - 1] += (1.0 - alpha) * k * prod;
            }
        return grd;
    };
    auto renorm = [&](std::vector<double>& x) {
        double s = 0.0;
        for (double v : x) s += std::pow(v, k);
        if (s <= 0.0) return false;
        const double norm = std::pow(s, 1.0 / k);
        for (double& v : x) v /= norm;
        return true;
    };

    double best = 0.0;
    for (int start = 0; start < starts; ++start) {
        std::vector<double> x(n);
        for (double& v : x) v = unif(rng);
        renorm(x);
        double fx = quadratic_form(g, alpha, x);
        double step = 1.0;
        for (int it = 0; it < max_steps; ++it) {
            std::vector<double> grd = grad(x);
            // Tangent projection: remove the component along x^{[k-1]}.
            double num = 0.0, den = 0.0;
            for (int i = 0; i < n; ++i) {
                const double xk1 = std::pow(x[i], k - 1);
                num += xk1 * grd[i];
                den += xk1 * xk1;
            }
            double tangent_norm = 0.0;
            for (int i = 0; i < n; ++i) {
                grd[i] -= den > 0.0 ? num / den * std::pow(x[i], k - 1) : 0.0;
                tangent_norm += grd[i] * grd[i];
            }
            if (std::sqrt(tangent_norm) < 1e-14) break;
            bool accepted = false;
            for (int halvings = 0; halvings < 80; ++halvings) {
                std::vector<double> z(n);
                for (int i = 0; i < n; ++i) z[i] = std::max(x[i] + step * grd[i], 0.0);
                if (renorm(z)) {
                    const double fz = quadratic_form(g, alpha, z);
                    if (fz > fx) {
                        x = std::move(z);
                        fx = fz;
                        step *= 1.5;
                        accepted = true;
                        break;
                    }
                }
                step /= 2;
            }
            if (!accepted) break;
        }
        best = std::max(best, fx);
    }
    return best;
}

// Exhaustive subset solvers for n <= 20 or so; plain 2^n scans.
inline bool strong_pred(const Hypergraph& g, std::uint32_t mask) {
    for (const Edge& e : g.edges()) {
        int hits = 0;
        for (int v : e)
            if (mask >> (v - 1) & 1u) ++hits;
        if (hits > 1) return false;
    }
    return true;
}

inline bool weak_pred(const Hypergraph& g, std::uint32_t mask) {
    for (const Edge& e : g.edges()) {
        bool inside = true;
        for (int v : e)
            if (!(mask >> (v - 1) & 1u)) inside = false;
        if (inside) return false;
    }
    return true;
}

inline int exhaustive_alpha_strong(const Hypergraph& g) {
    int best = 0;
    for (std::uint32_t mask = 0; mask < (1u << g.n()); ++mask)
        if (strong_pred(g, mask)) best = std::max(best, std::popcount(mask));
    return best;
}

inline int exhaustive_alpha_weak(const Hypergraph& g) {
    int best = 0;
    for (std::uint32_t mask = 0; mask < (1u << g.n()); ++mask)
        if (weak_pred(g, mask)) best = std::max(best, std::popcount(mask));
    return best;
}

// Minimum disconnecting deletion over all proper subsets, same deletion
// semantics as the library: removed vertices take their incident edges along,
// and a single surviving vertex still counts as connected. Complete
// hypergraphs carry no vertex cut by definition.
inline int exhaustive_vertex_connectivity(const Hypergraph& g) {
    if (g.is_complete()) return -1;
    int best = -1;
    for (std::uint32_t mask = 1; mask < (1u << g.n()) - 1u; ++mask) {
        std::vector<int> keep;
        for (int v = 1; v <= g.n(); ++v)
            if (!(mask >> (v - 1) & 1u)) keep.push_back(v);
        if (keep.size() < 2) continue;
        if (!connected_closure(hyperalpha::induced(g, keep))) {
            const int size = std::popcount(mask);
            if (best < 0 || size < best) best = size;
        }
    }
    return best;  // -1 when no cut exists
}

// Smallest r admitting a coloring with no monochromatic edge; odometer scan
// over all r^n assignments.
inline int exhaustive_weak_chromatic(const Hypergraph& g) {
    const int n = g.n();
    for (int r = 1; r <= n; ++r) {
        std::vector<int> color(n, 0);
        while (true) {
            bool ok = true;
            for (const Edge& e : g.edges()) {
                bool mono = true;
                for (int v : e)
                    if (color[v - 1] != color[e[0] - 1]) mono = false;
                if (mono) {
                    ok = false;
                    break;
                }
            }
            if (ok) return r;
            int pos = n - 1;
            while (pos >= 0 && color[pos] == r - 1) color[pos--] = 0;
            if (pos < 0) break;
            ++color[pos];
        }
    }
    return n;
}

// Direct-product membership test straight from the definition: a k-set of
// product vertices is an edge iff both coordinate projections are k distinct
// values forming edges.
inline bool product_edge_pred(const Hypergraph& g, const Hypergraph& h, const Edge& candidate) {
    Edge gi, hj;
    for (int pv : candidate) {
        const int i = (pv - 1) % g.n() + 1;
        const int j = (pv - 1) / g.n() + 1;
        gi.push_back(i);
        hj.push_back(j);
    }
    std::sort(gi.begin(), gi.end());
    std::sort(hj.begin(), hj.end());
    if (std::adjacent_find(gi.begin(), gi.end()) != gi.end()) return false;
    if (std::adjacent_find(hj.begin(), hj.end()) != hj.end()) return false;
    return g.has_edge(gi) && h.has_edge(hj);
}

// Random 3-uniform circulant: orbits of base edges {0, a, b} under rotation.
// Rotation invariance keeps every vertex degree equal, so the result is
// regular by construction; resample until connected.
inline Hypergraph random_connected_regular_3(int n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    for (int attempt = 0; attempt < 1000; ++attempt) {
        const int generators = 1 + static_cast<int>(hyperalpha::bounded_uniform(rng, 2));
        std::set<Edge> edges;
        for (int gidx = 0; gidx < generators; ++gidx) {
            const int a = 1 + static_cast<int>(hyperalpha::bounded_uniform(rng, n - 2));
            int b = a;
            while (b == a) b = 1 + static_cast<int>(hyperalpha::bounded_uniform(rng, n - 1));
            for (int i = 0; i < n; ++i) {
                Edge e{i + 1, (i + a) % n + 1, (i + b) % n + 1};
                std::sort(e.begin(), e.end());
                if (std::adjacent_find(e.begin(), e.end()) == e.end()) edges.insert(e);
            }
        }
        if (edges.empty()) continue;
        Hypergraph g = Hypergraph::build(n, 3, std::vector<Edge>(edges.begin(), edges.end()));
        if (hyperalpha::is_connected(g) && hyperalpha::degree_profile(g).regular()) return g;
    }
    throw std::runtime_error("no connected regular circulant found");
}

}  // namespace oracle
