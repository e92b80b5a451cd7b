#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "errors.hpp"

namespace hyperalpha {

/// An edge is a sorted list of k distinct 1-based vertex ids.
using Edge = std::vector<int>;

/// Immutable k-uniform hypergraph on vertices {1..n}.
///
/// Edges are stored sorted ascending within each edge and lexicographically
/// across edges, with no duplicates. Per-vertex incidence lists (edge indices)
/// are built once at construction. All queries are pure, so instances can be
/// shared freely across threads.
class Hypergraph {
public:
    /// Validates and canonicalizes an edge list.
    static Hypergraph build(int n, int k, std::vector<Edge> edges) {
        if (n < 1) throw InvalidDimensions("vertex count must be >= 1");
        if (k < 2) throw InvalidDimensions("edge cardinality must be >= 2");
        for (Edge& e : edges) {
            if (static_cast<int>(e.size()) != k)
                throw EdgeWrongArity("edge has " + std::to_string(e.size()) +
                                     " vertices, expected " + std::to_string(k));
            std::sort(e.begin(), e.end());
            for (std::size_t i = 0; i < e.size(); ++i) {
                if (e[i] < 1 || e[i] > n)
                    throw VertexOutOfRange("vertex id " + std::to_string(e[i]) +
                                           " outside 1.." + std::to_string(n));
                if (i > 0 && e[i] == e[i - 1])
                    throw EdgeWrongArity("repeated vertex " + std::to_string(e[i]) +
                                         " inside edge");
            }
        }
        std::sort(edges.begin(), edges.end());
        for (std::size_t i = 1; i < edges.size(); ++i)
            if (edges[i] == edges[i - 1]) throw DuplicateEdge("duplicate edge in input");
        return Hypergraph(n, k, std::move(edges));
    }

    /// Complete k-uniform hypergraph: every k-subset of {1..n} is an edge.
    static Hypergraph complete(int n, int k) {
        if (k < 2) throw InvalidDimensions("edge cardinality must be >= 2");
        if (n < k) throw InvalidDimensions("complete hypergraph needs n >= k");
        return Hypergraph(n, k, all_k_subsets(n, k));
    }

    /// Edgeless hypergraph on n vertices.
    static Hypergraph empty(int n, int k) {
        if (n < 1) throw InvalidDimensions("vertex count must be >= 1");
        if (k < 2) throw InvalidDimensions("edge cardinality must be >= 2");
        return Hypergraph(n, k, {});
    }

    int n() const { return n_; }  ///< vertex count
    int k() const { return k_; }  ///< edge cardinality
    int m() const { return static_cast<int>(edges_.size()); }  ///< edge count

    const std::vector<Edge>& edges() const& { return edges_; }
    std::vector<Edge> edges() && { return std::move(edges_); }
    const Edge& edge(int idx) const { return edges_[idx]; }

    /// Indices into edges() of the edges containing vertex v (1-based).
    const std::vector<int>& incident_edges(int v) const { return incidence_[v - 1]; }

    int degree(int v) const { return static_cast<int>(incidence_[v - 1].size()); }

    bool has_edge(Edge e) const {
        std::sort(e.begin(), e.end());
        return std::binary_search(edges_.begin(), edges_.end(), e);
    }

    /// True when some edge contains both u and v.
    bool adjacent(int u, int v) const {
        if (u == v) return false;
        for (int ei : incident_edges(u)) {
            const Edge& e = edges_[ei];
            if (std::binary_search(e.begin(), e.end(), v)) return true;
        }
        return false;
    }

    bool is_complete() const {
        return static_cast<unsigned long long>(m()) == binomial(n_, k_);
    }

    /// All k-subsets of {1..n} in lexicographic order.
    static std::vector<Edge> all_k_subsets(int n, int k) {
        std::vector<Edge> out;
        if (k > n) return out;
        Edge cur(k);
        std::iota(cur.begin(), cur.end(), 1);
        while (true) {
            out.push_back(cur);
            int i = k - 1;
            while (i >= 0 && cur[i] == n - (k - 1 - i)) --i;
            if (i < 0) break;
            ++cur[i];
            for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
        }
        return out;
    }

    /// C(n, k) clamped at 2^62 to avoid overflow; exact at desk scales.
    static unsigned long long binomial(int n, int k) {
        if (k < 0 || k > n) return 0;
        k = std::min(k, n - k);
        const unsigned long long cap = 1ull << 62;
        unsigned long long r = 1;
        for (int i = 1; i <= k; ++i) {
            if (r > cap / (n - k + i)) return cap;
            r = r * (n - k + i) / i;
        }
        return r;
    }

private:
    Hypergraph(int n, int k, std::vector<Edge> canonical_edges)
        : n_(n), k_(k), edges_(std::move(canonical_edges)), incidence_(n) {
        for (int ei = 0; ei < m(); ++ei)
            for (int v : edges_[ei]) incidence_[v - 1].push_back(ei);
    }

    int n_, k_;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> incidence_;
};

/// Per-vertex degrees plus the summary values used throughout the bounds.
struct DegreeProfile {
    std::vector<int> degrees;  // degrees[v-1]
    int max_degree = 0;
    int min_degree = 0;
    long long avg_num = 0;  // reduced fraction k*m/n
    long long avg_den = 1;

    double average() const { return static_cast<double>(avg_num) / static_cast<double>(avg_den); }
    bool regular() const { return max_degree == min_degree; }
};

inline DegreeProfile degree_profile(const Hypergraph& g) {
    DegreeProfile p;
    p.degrees.resize(g.n());
    for (int v = 1; v <= g.n(); ++v) p.degrees[v - 1] = g.degree(v);
    p.max_degree = *std::max_element(p.degrees.begin(), p.degrees.end());
    p.min_degree = *std::min_element(p.degrees.begin(), p.degrees.end());
    long long num = static_cast<long long>(g.k()) * g.m();
    long long den = g.n();
    long long d = std::gcd(num, den);
    if (d == 0) d = 1;
    p.avg_num = num / d;
    p.avg_den = den / d;
    return p;
}

/// Average degree k*m/n.
inline double average_degree(const Hypergraph& g) {
    return static_cast<double>(g.k()) * g.m() / g.n();
}

struct Connectivity {
    bool connected = false;
    /// Vertex partition into connected components; isolated vertices are
    /// singletons. Components are ordered by smallest member, members sorted.
    std::vector<std::vector<int>> components;
};

inline Connectivity connectivity(const Hypergraph& g) {
    Connectivity c;
    std::vector<char> seen(g.n(), 0);
    for (int s = 1; s <= g.n(); ++s) {
        if (seen[s - 1]) continue;
        std::vector<int> comp, stack{s};
        seen[s - 1] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (int ei : g.incident_edges(v))
                for (int u : g.edge(ei))
                    if (!seen[u - 1]) {
                        seen[u - 1] = 1;
                        stack.push_back(u);
                    }
        }
        std::sort(comp.begin(), comp.end());
        c.components.push_back(std::move(comp));
    }
    c.connected = c.components.size() == 1;
    return c;
}

inline bool is_connected(const Hypergraph& g) { return connectivity(g).connected; }

/// All k-subsets of the vertex set that are not edges of G.
inline Hypergraph complement(const Hypergraph& g) {
    std::vector<Edge> edges;
    for (const Edge& e : Hypergraph::all_k_subsets(g.n(), g.k()))
        if (!g.has_edge(e)) edges.push_back(e);
    return Hypergraph::build(g.n(), g.k(), std::move(edges));
}

/// Sub-hypergraph induced on `keep` (sorted, 1-based): vertices are relabeled
/// 1..|keep| in the given order; only edges fully inside `keep` survive.
inline Hypergraph induced(const Hypergraph& g, const std::vector<int>& keep) {
    std::vector<int> newid(g.n() + 1, 0);
    for (std::size_t i = 0; i < keep.size(); ++i) newid[keep[i]] = static_cast<int>(i) + 1;
    std::vector<Edge> edges;
    for (const Edge& e : g.edges()) {
        Edge mapped;
        mapped.reserve(e.size());
        for (int v : e) {
            if (!newid[v]) break;
            mapped.push_back(newid[v]);
        }
        if (mapped.size() == e.size()) edges.push_back(std::move(mapped));
    }
    return Hypergraph::build(static_cast<int>(keep.size()), g.k(), std::move(edges));
}

/// Disjoint union; vertices of `b` are shifted by a.n().
inline Hypergraph disjoint_union(const Hypergraph& a, const Hypergraph& b) {
    if (a.k() != b.k()) throw ArityMismatch("edge cardinalities differ");
    std::vector<Edge> edges = a.edges();
    for (Edge e : b.edges()) {
        for (int& v : e) v += a.n();
        edges.push_back(std::move(e));
    }
    return Hypergraph::build(a.n() + b.n(), a.k(), std::move(edges));
}

/// Flat index of the product vertex (i, j), with i varying fastest.
inline int product_vertex(int i, int j, int n_g) { return (j - 1) * n_g + i; }

/// Direct product G x H: vertex set V(G) x V(H), and one edge
/// {(i_{s(1)},j_1),...,(i_{s(k)},j_k)} for every edge pair (e, f) and every
/// bijection s between them. Degrees multiply: d((i,j)) = (k-1)! d_G(i) d_H(j),
/// and m(GxH) = k! m_G m_H.
inline Hypergraph direct_product(const Hypergraph& g, const Hypergraph& h) {
    if (g.k() != h.k()) throw ArityMismatch("edge cardinalities differ");
    const int k = g.k();
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(g.m()) * h.m());
    std::vector<int> perm(k);
    for (const Edge& e : g.edges()) {
        for (const Edge& f : h.edges()) {
            std::iota(perm.begin(), perm.end(), 0);
            do {
                Edge pe(k);
                for (int t = 0; t < k; ++t) pe[t] = product_vertex(e[perm[t]], f[t], g.n());
                std::sort(pe.begin(), pe.end());
                edges.push_back(std::move(pe));
            } while (std::next_permutation(perm.begin(), perm.end()));
        }
    }
    // Distinct (e, f, s) triples always yield distinct vertex sets for simple
    // inputs; dedupe anyway so the construction stays safe under extension.
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return Hypergraph::build(g.n() * h.n(), k, std::move(edges));
}

/// Uniform draw from {0..bound-1} by rejection; depends only on the engine's
/// standardized output sequence, so results are reproducible everywhere.
inline std::uint64_t bounded_uniform(std::mt19937_64& rng, std::uint64_t bound) {
    // Largest multiple of bound below 2^64; draws at or above it are rejected.
    const std::uint64_t top = std::numeric_limits<std::uint64_t>::max();
    const std::uint64_t limit = top - top % bound;
    std::uint64_t r;
    do { r = rng(); } while (r >= limit);
    return r % bound;
}

/// Random k-subset of {1..n}, sorted; partial Fisher-Yates.
inline Edge random_k_subset(std::mt19937_64& rng, int n, int k) {
    std::vector<int> pool(n);
    std::iota(pool.begin(), pool.end(), 1);
    Edge e(k);
    for (int i = 0; i < k; ++i) {
        std::uint64_t j = i + bounded_uniform(rng, static_cast<std::uint64_t>(n - i));
        std::swap(pool[i], pool[j]);
        e[i] = pool[i];
    }
    std::sort(e.begin(), e.end());
    return e;
}

/// Connected hypergraph with exactly m distinct edges, sampled by rejection:
/// draw edge sets uniformly until one is connected. Deterministic per seed.
inline Hypergraph random_connected(int n, int k, int m, std::uint64_t seed) {
    if (n < 1 || k < 2) throw InvalidDimensions("need n >= 1 and k >= 2");
    if (n == 1 && m == 0) return Hypergraph::empty(1, k);
    const int min_edges = (n - 1 + k - 2) / (k - 1);  // ceil((n-1)/(k-1))
    if (m < std::max(min_edges, 1))
        throw InfeasibleRequest(std::to_string(m) + " edges cannot connect " +
                                std::to_string(n) + " vertices");
    if (static_cast<unsigned long long>(m) > Hypergraph::binomial(n, k))
        throw InfeasibleRequest("more edges requested than k-subsets exist");
    std::mt19937_64 rng(seed);
    for (long attempt = 0; attempt < 1000000; ++attempt) {
        std::set<Edge> picked;
        while (static_cast<int>(picked.size()) < m) picked.insert(random_k_subset(rng, n, k));
        Hypergraph g = Hypergraph::build(n, k, std::vector<Edge>(picked.begin(), picked.end()));
        if (is_connected(g)) return g;
    }
    throw InfeasibleRequest("rejection sampling failed to find a connected instance");
}

}  // namespace hyperalpha
