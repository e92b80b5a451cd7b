#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "errors.hpp"
#include "hypergraph.hpp"

namespace hyperalpha {

/// Exact-search caps. Larger instances raise TooLarge instead of silently
/// falling back to heuristics; the greedy_* variants are the explicit opt-in.
inline constexpr int kIndependenceCap = 24;
inline constexpr int kEnumerationCap = 16;

enum class SubsetKind { arbitrary, strong_independent, weak_independent, clique, vertex_cut };

inline const char* to_string(SubsetKind kind) {
    switch (kind) {
        case SubsetKind::arbitrary: return "arbitrary";
        case SubsetKind::strong_independent: return "strong_independent";
        case SubsetKind::weak_independent: return "weak_independent";
        case SubsetKind::clique: return "clique";
        case SubsetKind::vertex_cut: return "vertex_cut";
    }
    return "?";
}

struct VertexSubset {
    std::vector<int> members;  // sorted 1-based ids
    SubsetKind kind = SubsetKind::arbitrary;
};

namespace detail {

inline void check_subset(const Hypergraph& g, const std::vector<int>& s) {
    for (int v : s)
        if (v < 1 || v > g.n())
            throw VertexOutOfRange("vertex id " + std::to_string(v) + " outside 1.." +
                                   std::to_string(g.n()));
    for (std::size_t i = 1; i < s.size(); ++i)
        if (s[i] == s[i - 1]) throw PreconditionViolated("repeated vertex in subset");
}

inline std::uint32_t to_mask(const std::vector<int>& s) {
    std::uint32_t m = 0;
    for (int v : s) m |= 1u << (v - 1);
    return m;
}

inline std::vector<int> from_mask(std::uint32_t m) {
    std::vector<int> out;
    while (m) {
        int b = std::countr_zero(m);
        out.push_back(b + 1);
        m &= m - 1;
    }
    return out;
}

inline std::vector<std::uint32_t> edge_masks(const Hypergraph& g) {
    std::vector<std::uint32_t> out;
    out.reserve(g.m());
    for (const Edge& e : g.edges()) out.push_back(to_mask(e));
    return out;
}

/// Conflict-graph neighbourhoods: u and v conflict when co-contained in an edge.
inline std::vector<std::uint32_t> shadow_neighbours(const Hypergraph& g) {
    std::vector<std::uint32_t> nbr(g.n(), 0);
    for (const Edge& e : g.edges()) {
        std::uint32_t em = to_mask(e);
        for (int v : e) nbr[v - 1] |= em & ~(1u << (v - 1));
    }
    return nbr;
}

/// Max independent set size within `cand` on the conflict graph.
inline void mis_search(std::uint32_t cand, const std::vector<std::uint32_t>& nbr, int size,
                       int& best) {
    while (true) {
        if (size + std::popcount(cand) <= best) return;
        if (cand == 0) {
            best = std::max(best, size);
            return;
        }
        int pick = -1, pick_deg = -1;
        std::uint32_t rest = cand;
        while (rest) {
            int v = std::countr_zero(rest);
            rest &= rest - 1;
            int dv = std::popcount(nbr[v] & cand);
            if (dv == 0) {  // isolated in cand: always take it
                ++size;
                cand &= ~(1u << v);
                pick = -2;
                break;
            }
            if (dv > pick_deg) {
                pick_deg = dv;
                pick = v;
            }
        }
        if (pick == -2) continue;
        const std::uint32_t bit = 1u << pick;
        mis_search(cand & ~bit & ~nbr[pick], nbr, size + 1, best);
        cand &= ~bit;  // exclude pick, loop on
    }
}

inline int mis_size(std::uint32_t cand, const std::vector<std::uint32_t>& nbr) {
    int best = 0;
    mis_search(cand, nbr, 0, best);
    return best;
}

/// Minimum transversal (hitting set) size, with forced / forbidden vertices.
/// Returns a value > n when infeasible.
inline int min_transversal(const std::vector<std::uint32_t>& edges, std::uint32_t chosen,
                           std::uint32_t forbidden, int size, int& best) {
    if (size >= best) return best;
    std::uint32_t pick_edge = 0;
    int pick_options = 1 << 30;
    for (std::uint32_t em : edges) {
        if (em & chosen) continue;  // already hit
        std::uint32_t options = em & ~forbidden;
        int c = std::popcount(options);
        if (c == 0) return best;  // this edge can no longer be hit
        if (c < pick_options) {
            pick_options = c;
            pick_edge = options;
        }
    }
    if (pick_options == 1 << 30) {
        best = std::min(best, size);
        return best;
    }
    while (pick_edge) {
        int v = std::countr_zero(pick_edge);
        pick_edge &= pick_edge - 1;
        min_transversal(edges, chosen | (1u << v), forbidden, size + 1, best);
        forbidden |= 1u << v;  // later branches must hit the edge elsewhere
    }
    return best;
}

inline int min_transversal_size(const std::vector<std::uint32_t>& edges, std::uint32_t forced,
                                std::uint32_t forbidden, int n) {
    int best = n + 1;
    min_transversal(edges, forced, forbidden, std::popcount(forced), best);
    return best;
}

}  // namespace detail

/// |e intersect S| <= 1 for every edge.
inline bool is_strong_independent(const Hypergraph& g, std::vector<int> s) {
    std::sort(s.begin(), s.end());
    detail::check_subset(g, s);
    if (g.n() <= 32) {
        std::uint32_t sm = detail::to_mask(s);
        for (const Edge& e : g.edges())
            if (std::popcount(detail::to_mask(e) & sm) > 1) return false;
        return true;
    }
    for (const Edge& e : g.edges()) {
        int hits = 0;
        for (int v : e)
            if (std::binary_search(s.begin(), s.end(), v)) ++hits;
        if (hits > 1) return false;
    }
    return true;
}

/// No edge lies fully inside S.
inline bool is_weak_independent(const Hypergraph& g, std::vector<int> s) {
    std::sort(s.begin(), s.end());
    detail::check_subset(g, s);
    for (const Edge& e : g.edges()) {
        bool inside = true;
        for (int v : e)
            if (!std::binary_search(s.begin(), s.end(), v)) {
                inside = false;
                break;
            }
        if (inside) return false;
    }
    return true;
}

/// Every k-subset of S is an edge; subsets smaller than k are cliques vacuously.
inline bool is_clique(const Hypergraph& g, std::vector<int> s) {
    std::sort(s.begin(), s.end());
    detail::check_subset(g, s);
    if (static_cast<int>(s.size()) < g.k()) return true;
    for (const Edge& cand : Hypergraph::all_k_subsets(static_cast<int>(s.size()), g.k())) {
        Edge e(cand.size());
        for (std::size_t i = 0; i < cand.size(); ++i) e[i] = s[cand[i] - 1];
        if (!g.has_edge(e)) return false;
    }
    return true;
}

/// Lexicographically least maximum strong independent set, by branch and bound
/// over the conflict graph.
inline VertexSubset max_strong_independent(const Hypergraph& g) {
    if (g.n() > kIndependenceCap)
        throw TooLarge("exact strong independence capped at n <= " +
                       std::to_string(kIndependenceCap));
    auto nbr = detail::shadow_neighbours(g);
    const std::uint32_t all = g.n() == 32 ? ~0u : (1u << g.n()) - 1;
    const int target = detail::mis_size(all, nbr);
    std::uint32_t chosen = 0;
    int chosen_size = 0;
    std::uint32_t cand = all;
    for (int v = 0; v < g.n(); ++v) {
        const std::uint32_t bit = 1u << v;
        if (!(cand & bit)) continue;
        std::uint32_t rest = cand & ~bit & ~nbr[v];
        if (chosen_size + 1 + detail::mis_size(rest, nbr) == target) {
            chosen |= bit;
            ++chosen_size;
            cand = rest;
        } else {
            cand &= ~bit;
        }
    }
    return VertexSubset{detail::from_mask(chosen), SubsetKind::strong_independent};
}

/// Lexicographically least maximum weak independent set. Complements of weak
/// independent sets are exactly the transversals, so the search minimizes a
/// hitting set.
inline VertexSubset max_weak_independent(const Hypergraph& g) {
    if (g.n() > kIndependenceCap)
        throw TooLarge("exact weak independence capped at n <= " +
                       std::to_string(kIndependenceCap));
    auto edges = detail::edge_masks(g);
    const int tau = detail::min_transversal_size(edges, 0, 0, g.n());
    std::uint32_t in_s = 0, in_t = 0;
    for (int v = 0; v < g.n(); ++v) {
        const std::uint32_t bit = 1u << v;
        if (detail::min_transversal_size(edges, in_t, in_s | bit, g.n()) == tau) {
            in_s |= bit;  // v can stay outside every minimum transversal
        } else {
            in_t |= bit;
        }
    }
    return VertexSubset{detail::from_mask(in_s), SubsetKind::weak_independent};
}

/// omega of the complement equals the weak independence number.
inline VertexSubset max_clique_of_complement(const Hypergraph& g) {
    VertexSubset s = max_weak_independent(g);
    s.kind = SubsetKind::clique;
    return s;
}

inline int clique_number_of_complement(const Hypergraph& g) {
    return static_cast<int>(max_clique_of_complement(g).members.size());
}

/// Maximal (not maximum) strong independent set by first-fit; any n.
inline VertexSubset greedy_strong_independent(const Hypergraph& g) {
    std::vector<int> s;
    for (int v = 1; v <= g.n(); ++v) {
        s.push_back(v);
        if (!is_strong_independent(g, s)) s.pop_back();
    }
    return VertexSubset{std::move(s), SubsetKind::strong_independent};
}

/// Maximal (not maximum) weak independent set by first-fit; any n.
inline VertexSubset greedy_weak_independent(const Hypergraph& g) {
    std::vector<int> s;
    for (int v = 1; v <= g.n(); ++v) {
        s.push_back(v);
        if (!is_weak_independent(g, s)) s.pop_back();
    }
    return VertexSubset{std::move(s), SubsetKind::weak_independent};
}

struct CutResult {
    int connectivity = 0;
    VertexSubset cut;
};

namespace detail {

/// G - S disconnected, where deleting S removes its incident edges. A single
/// remaining vertex counts as connected.
inline bool deletion_disconnects(const Hypergraph& g, const std::vector<int>& remove) {
    std::vector<char> gone(g.n() + 1, 0);
    for (int v : remove) gone[v] = 1;
    std::vector<int> keep;
    for (int v = 1; v <= g.n(); ++v)
        if (!gone[v]) keep.push_back(v);
    if (keep.size() < 2) return false;
    return !is_connected(induced(g, keep));
}

}  // namespace detail

/// Minimum vertex cut by size-ascending subset enumeration; the first cut in
/// lexicographic order is returned. Complete hypergraphs carry no vertex cut.
inline CutResult vertex_connectivity(const Hypergraph& g) {
    if (g.n() > kEnumerationCap)
        throw TooLarge("exact vertex connectivity capped at n <= " +
                       std::to_string(kEnumerationCap));
    if (!is_connected(g)) throw NotConnected("vertex connectivity needs a connected hypergraph");
    if (g.is_complete()) throw NoCutExists("complete hypergraphs have no vertex cut");
    for (int size = 1; size <= g.n() - 2; ++size) {
        for (const Edge& subset : Hypergraph::all_k_subsets(g.n(), size)) {
            if (detail::deletion_disconnects(g, subset))
                return CutResult{size, VertexSubset{subset, SubsetKind::vertex_cut}};
        }
    }
    throw NoCutExists("no vertex cut found");  // unreachable for non-complete inputs
}

namespace detail {

inline bool colorable(const Hypergraph& g, int r,
                      const std::vector<std::vector<int>>& closing_edges, std::vector<int>& color,
                      int v) {
    if (v > g.n()) return true;
    // Symmetry break: vertex v may only open one fresh color.
    int used = 0;
    for (int u = 1; u < v; ++u) used = std::max(used, color[u]);
    const int limit = std::min(r, used + 1);
    for (int c = 1; c <= limit; ++c) {
        color[v] = c;
        bool ok = true;
        for (int ei : closing_edges[v]) {
            const Edge& e = g.edge(ei);
            bool mono = true;
            for (int u : e)
                if (color[u] != c) {
                    mono = false;
                    break;
                }
            if (mono) {
                ok = false;
                break;
            }
        }
        if (ok && colorable(g, r, closing_edges, color, v + 1)) return true;
    }
    color[v] = 0;
    return false;
}

}  // namespace detail

/// Fewest colors admitting no monochromatic edge, by iterative deepening.
inline int weak_chromatic_number(const Hypergraph& g) {
    if (g.n() > kEnumerationCap)
        throw TooLarge("exact chromatic number capped at n <= " +
                       std::to_string(kEnumerationCap));
    if (g.m() == 0) throw PreconditionViolated("chromatic number needs at least one edge");
    // Edges become checkable once their largest vertex is colored.
    std::vector<std::vector<int>> closing(g.n() + 1);
    for (int ei = 0; ei < g.m(); ++ei) closing[g.edge(ei).back()].push_back(ei);
    for (int r = 2; r <= g.n(); ++r) {
        std::vector<int> color(g.n() + 1, 0);
        if (detail::colorable(g, r, closing, color, 1)) return r;
    }
    return g.n();  // all-distinct coloring is always proper for k >= 2
}

}  // namespace hyperalpha
