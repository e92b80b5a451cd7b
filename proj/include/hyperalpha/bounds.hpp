#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "combinatorics.hpp"
#include "errors.hpp"
#include "hypergraph.hpp"
#include "spectral.hpp"
#include "tensor_ops.hpp"

namespace hyperalpha {

/// A bound never exceeds rho; "holds" allows this much certified-bracket slack.
inline constexpr double kSoundnessTol = 1e-8;

/// One evaluated lower bound on rho_alpha, with the reference bracket it was
/// compared against. A negative slack beyond kSoundnessTol means the claimed
/// inequality failed and must surface as a failure, never be dropped.
struct BoundReport {
    std::string bound;
    double alpha = 0.0;
    std::optional<VertexSubset> subset;
    std::map<std::string, double> params;
    double value = 0.0;
    double rho_lower = 0.0;
    double rho_upper = 0.0;
    double slack = 0.0;  // rho_lower - value
    bool holds = false;  // value <= rho_upper + kSoundnessTol
};

namespace detail {

/// x^(num/den) for integer-valued x >= 0, seeded by pow and polished with one
/// Newton step on y^den = x^num so large integer degrees stay tight.
inline double root_pow(double x, int num, int den) {
    if (x == 0.0) return 0.0;
    const double target = ipow(x, num);
    double y = std::pow(x, static_cast<double>(num) / den);
    if (std::isfinite(y) && y > 0.0) {
        const double yd1 = ipow(y, den - 1);
        y -= (yd1 * y - target) / (den * yd1);
    }
    return y;
}

/// Degree power sums over a subset: P1 = sum d^{(2k-1)/(k-1)},
/// P0 = sum d^{k/(k-1)}, DS = sum d.
struct SubsetSums {
    int s = 0;
    double p1 = 0.0;
    double p0 = 0.0;
    double ds = 0.0;
    bool uniform = true;  // all degrees in S equal
};

inline SubsetSums subset_sums(const Hypergraph& g, const std::vector<int>& members) {
    const int k = g.k();
    SubsetSums out;
    out.s = static_cast<int>(members.size());
    int first_deg = g.degree(members.front());
    for (int v : members) {
        const int d = g.degree(v);
        out.p1 += root_pow(d, 2 * k - 1, k - 1);
        out.p0 += root_pow(d, k, k - 1);
        out.ds += d;
        if (d != first_deg) out.uniform = false;
    }
    return out;
}

/// T1 = s P1/P0 - DS (nonnegative by the rearrangement inequality) and
/// T2 = s^{1/k} P0^{(k-1)/k} - DS (nonnegative by Hoelder). Both vanish iff the
/// degrees in S are all equal; that case is short-circuited to exact zero.
inline double term_t1(const SubsetSums& ss) {
    if (ss.uniform || ss.p0 == 0.0) return 0.0;
    return ss.s * ss.p1 / ss.p0 - ss.ds;
}

inline double term_t2(const SubsetSums& ss, int k) {
    if (ss.uniform || ss.p0 == 0.0) return 0.0;
    return root_pow(ss.s, 1, k) * std::pow(ss.p0, static_cast<double>(k - 1) / k) - ss.ds;
}

inline VertexSubset classify(const Hypergraph& g, std::vector<int> members) {
    std::sort(members.begin(), members.end());
    SubsetKind kind = SubsetKind::arbitrary;
    if (is_strong_independent(g, members)) kind = SubsetKind::strong_independent;
    else if (is_weak_independent(g, members)) kind = SubsetKind::weak_independent;
    return VertexSubset{std::move(members), kind};
}

inline BoundReport make_report(std::string name, Alpha alpha, std::optional<VertexSubset> subset,
                               std::map<std::string, double> params, double value,
                               const SpectralResult& rho) {
    BoundReport r;
    r.bound = std::move(name);
    r.alpha = alpha.value();
    r.subset = std::move(subset);
    r.params = std::move(params);
    r.value = value;
    r.rho_lower = rho.lower;
    r.rho_upper = rho.upper;
    r.slack = rho.lower - value;
    r.holds = value <= rho.upper + kSoundnessTol;
    return r;
}

inline void require_connected_k3(const Hypergraph& g, const char* op) {
    if (g.k() < 3) throw KTooSmall(std::string(op) + " needs k >= 3");
    if (!is_connected(g)) throw PreconditionViolated(std::string(op) + " needs a connected hypergraph");
}

inline std::vector<int> checked_members(const Hypergraph& g, std::vector<int> s) {
    if (s.empty()) throw PreconditionViolated("subset must be nonempty");
    std::sort(s.begin(), s.end());
    check_subset(g, s);
    return s;
}

}  // namespace detail

/// rho_alpha >= k m / n, with equality iff G is regular (when connected).
inline BoundReport bound_average_degree(const Hypergraph& g, Alpha alpha,
                                        const SpectralResult& rho) {
    return detail::make_report("average_degree", alpha, std::nullopt, {}, average_degree(g), rho);
}

/// Strong independent S: rho_alpha >= km/n + (alpha T1 + (1-alpha) k T2) / n.
inline BoundReport bound_strong_set(const Hypergraph& g, Alpha alpha, std::vector<int> members,
                                    const SpectralResult& rho) {
    members = detail::checked_members(g, std::move(members));
    if (!is_strong_independent(g, members))
        throw PreconditionViolated("subset is not a strong independent set");
    auto ss = detail::subset_sums(g, members);
    const double a = alpha.value();
    const double value = average_degree(g) +
                         (a * detail::term_t1(ss) + (1.0 - a) * g.k() * detail::term_t2(ss, g.k())) /
                             g.n();
    return detail::make_report("strong_set", alpha,
                               VertexSubset{members, SubsetKind::strong_independent},
                               {{"s", double(ss.s)}}, value, rho);
}

/// Arbitrary S (connected G, k >= 3): the strong-set bracket weakened by 1/k.
inline BoundReport bound_subset(const Hypergraph& g, Alpha alpha, std::vector<int> members,
                                const SpectralResult& rho) {
    detail::require_connected_k3(g, "subset bound");
    members = detail::checked_members(g, std::move(members));
    auto ss = detail::subset_sums(g, members);
    const double a = alpha.value();
    const double value =
        average_degree(g) +
        (a * detail::term_t1(ss) + (1.0 - a) * g.k() * detail::term_t2(ss, g.k())) /
            (static_cast<double>(g.k()) * g.n());
    return detail::make_report("subset", alpha, detail::classify(g, members),
                               {{"s", double(ss.s)}}, value, rho);
}

/// S = V specialization in closed form:
/// alpha/k * sum d^{(2k-1)/(k-1)} / sum d^{k/(k-1)}
///   + (1-alpha) (sum d^{k/(k-1)} / n)^{(k-1)/k} + alpha (k-1) m / n.
inline BoundReport bound_full_vertex_set(const Hypergraph& g, Alpha alpha,
                                         const SpectralResult& rho) {
    detail::require_connected_k3(g, "full vertex set bound");
    std::vector<int> all(g.n());
    std::iota(all.begin(), all.end(), 1);
    auto ss = detail::subset_sums(g, all);
    const double a = alpha.value();
    const int k = g.k();
    double value;
    if (ss.uniform) {
        value = average_degree(g);
    } else {
        value = (a / k) * (ss.p1 / ss.p0) +
                (1.0 - a) * std::pow(ss.p0 / g.n(), static_cast<double>(k - 1) / k) +
                a * (k - 1) * static_cast<double>(g.m()) / g.n();
    }
    return detail::make_report("full_vertex_set", alpha, std::nullopt, {}, value, rho);
}

namespace detail {

struct PairTerms {
    double t1_first = 0.0;   // 2 (di^q + dj^q)/(di^p + dj^p) - (di + dj)
    double t1_second = 0.0;  // (di^q + dj^q)/di^p - (di + dj), di the larger
    double t2 = 0.0;         // 2^{1/k} (di^p + dj^p)^{(k-1)/k} - (di + dj)
};

inline PairTerms pair_terms(int di, int dj, int k) {
    PairTerms t;
    if (di == dj) return t;
    const double qi = root_pow(di, 2 * k - 1, k - 1), qj = root_pow(dj, 2 * k - 1, k - 1);
    const double pi = root_pow(di, k, k - 1), pj = root_pow(dj, k, k - 1);
    const double dsum = di + dj;
    t.t1_first = 2.0 * (qi + qj) / (pi + pj) - dsum;
    t.t1_second = (qi + qj) / std::max(pi, pj) - dsum;
    t.t2 = root_pow(2, 1, k) * std::pow(pi + pj, static_cast<double>(k - 1) / k) - dsum;
    return t;
}

}  // namespace detail

/// Vertex pair with d_i > d_j; c = k when i ~ j and c = 1 otherwise.
inline BoundReport bound_vertex_pair(const Hypergraph& g, Alpha alpha, int i, int j,
                                     const SpectralResult& rho) {
    detail::require_connected_k3(g, "vertex pair bound");
    if (i == j) throw PreconditionViolated("vertex pair bound needs two distinct vertices");
    detail::check_subset(g, {std::min(i, j), std::max(i, j)});
    if (g.degree(i) <= g.degree(j))
        throw PreconditionViolated("vertex pair bound needs d_i > d_j strictly");
    const int c = g.adjacent(i, j) ? g.k() : 1;
    auto t = detail::pair_terms(g.degree(i), g.degree(j), g.k());
    const double a = alpha.value();
    const double value = average_degree(g) + a * t.t1_first / (c * static_cast<double>(g.n())) +
                         (1.0 - a) * g.k() * t.t2 / (c * static_cast<double>(g.n()));
    std::vector<int> members{std::min(i, j), std::max(i, j)};
    const SubsetKind kind =
        c == 1 ? SubsetKind::strong_independent : SubsetKind::arbitrary;
    return detail::make_report(
        "vertex_pair", alpha, VertexSubset{members, kind},
        {{"c", double(c)}, {"d_i", double(g.degree(i))}, {"d_j", double(g.degree(j))}}, value,
        rho);
}

/// Both closed forms of the pair bound; the first dominates the
/// second because d_i^p exceeds the average of the two p-th powers.
struct PairBoundForms {
    double first = 0.0;
    double second = 0.0;
};

inline PairBoundForms vertex_pair_display_forms(const Hypergraph& g, Alpha alpha, int i, int j) {
    detail::require_connected_k3(g, "vertex pair bound");
    if (g.degree(i) <= g.degree(j))
        throw PreconditionViolated("vertex pair bound needs d_i > d_j strictly");
    const int c = g.adjacent(i, j) ? g.k() : 1;
    auto t = detail::pair_terms(g.degree(i), g.degree(j), g.k());
    const double a = alpha.value();
    const double cn = c * static_cast<double>(g.n());
    const double avg = average_degree(g);
    PairBoundForms f;
    f.first = avg + a * t.t1_first / cn + (1.0 - a) * g.k() * t.t2 / cn;
    f.second = avg + a * t.t1_second / cn + (1.0 - a) * g.k() * t.t2 / cn;
    return f;
}

namespace detail {

/// Shared template for the variants that replace the cardinality slot by a
/// surrogate s* while the degree sums still run over the named subset S.
inline double substituted_subset_value(const Hypergraph& g, Alpha alpha, const SubsetSums& ss,
                                       double s_substitute) {
    const double a = alpha.value();
    const int k = g.k();
    double t1;
    double t2;
    if (ss.p0 == 0.0) {
        t1 = t2 = 0.0;
    } else {
        t1 = s_substitute * ss.p1 / ss.p0 - ss.ds;
        t2 = std::pow(s_substitute, 1.0 / k) * std::pow(ss.p0, static_cast<double>(k - 1) / k) -
             ss.ds;
    }
    return average_degree(g) + a * t1 / (k * static_cast<double>(g.n())) +
           (1.0 - a) * t2 / g.n();
}

}  // namespace detail

/// S = maximum weak independent set, cardinality alpha(G).
inline BoundReport bound_weak_independence(const Hypergraph& g, Alpha alpha,
                                           const SpectralResult& rho) {
    detail::require_connected_k3(g, "weak independence bound");
    VertexSubset s = max_weak_independent(g);
    auto ss = detail::subset_sums(g, s.members);
    const double value = ss.uniform ? average_degree(g)
                                    : detail::substituted_subset_value(g, alpha, ss, ss.s);
    return detail::make_report("weak_independence", alpha, s, {{"alpha_G", double(ss.s)}}, value,
                               rho);
}

/// Berge: chi(G) alpha(G) >= n, so n/chi(G) may stand in for the cardinality.
inline BoundReport bound_chromatic(const Hypergraph& g, Alpha alpha, const SpectralResult& rho) {
    detail::require_connected_k3(g, "chromatic bound");
    VertexSubset s = max_weak_independent(g);
    const int chi = weak_chromatic_number(g);
    const double substitute = static_cast<double>(g.n()) / chi;
    auto ss = detail::subset_sums(g, s.members);
    const double value = detail::substituted_subset_value(g, alpha, ss, substitute);
    return detail::make_report("chromatic", alpha, s,
                               {{"chi", double(chi)}, {"s_substitute", substitute}}, value, rho);
}

/// S = maximum clique of the complement; omega(complement) = alpha(G).
inline BoundReport bound_clique_complement(const Hypergraph& g, Alpha alpha,
                                           const SpectralResult& rho) {
    detail::require_connected_k3(g, "clique complement bound");
    VertexSubset s = max_clique_of_complement(g);
    auto ss = detail::subset_sums(g, s.members);
    const double value = ss.uniform ? average_degree(g)
                                    : detail::substituted_subset_value(g, alpha, ss, ss.s);
    return detail::make_report("clique_complement", alpha, s,
                               {{"omega_complement", double(ss.s)}}, value, rho);
}

/// S = minimum vertex cut; c = 1 when S is strong independent, else c = k.
inline BoundReport bound_vertex_cut(const Hypergraph& g, Alpha alpha,
                                    const SpectralResult& rho) {
    detail::require_connected_k3(g, "vertex cut bound");
    CutResult cut = vertex_connectivity(g);
    auto ss = detail::subset_sums(g, cut.cut.members);
    const int c = is_strong_independent(g, cut.cut.members) ? 1 : g.k();
    const double a = alpha.value();
    double value;
    if (ss.uniform) {
        value = average_degree(g);
    } else {
        const double t1 = ss.s * ss.p1 / ss.p0 - ss.ds;
        const double t2 = detail::term_t2(ss, g.k());
        value = average_degree(g) + a * t1 / (c * static_cast<double>(g.n())) +
                (1.0 - a) * g.k() * t2 / (c * static_cast<double>(g.n()));
    }
    return detail::make_report("vertex_cut", alpha, cut.cut,
                               {{"nu", double(cut.connectivity)}, {"c", double(c)}}, value, rho);
}

/// Square-form refinement over an arbitrary S (connected, k >= 3):
/// km/n + (alpha sum_S d ((s d^p / P0)^{1/2} - 1)^2 + k T2) / (k n).
inline BoundReport bound_square_subset(const Hypergraph& g, Alpha alpha, std::vector<int> members,
                                       const SpectralResult& rho) {
    detail::require_connected_k3(g, "square subset bound");
    members = detail::checked_members(g, std::move(members));
    auto ss = detail::subset_sums(g, members);
    const int k = g.k();
    double value;
    if (ss.uniform || ss.p0 == 0.0) {
        value = average_degree(g);
    } else {
        double sq = 0.0;
        for (int v : members) {
            const int d = g.degree(v);
            const double ratio = ss.s * detail::root_pow(d, k, k - 1) / ss.p0;
            const double dev = std::sqrt(ratio) - 1.0;
            sq += d * dev * dev;
        }
        value = average_degree(g) +
                (alpha.value() * sq + k * detail::term_t2(ss, k)) /
                    (k * static_cast<double>(g.n()));
    }
    return detail::make_report("square_subset", alpha, detail::classify(g, members),
                               {{"s", double(ss.s)}}, value, rho);
}

/// k-th-power-form refinement over an arbitrary S (connected, k >= 3):
/// km/n + alpha/(k^k n) sum_S d (((s d^p / P0)^{1/k} + k - 1)^k - k^k)
///      + (1-alpha)/n T2.
inline BoundReport bound_kpower_subset(const Hypergraph& g, Alpha alpha, std::vector<int> members,
                                       const SpectralResult& rho) {
    detail::require_connected_k3(g, "k-power subset bound");
    members = detail::checked_members(g, std::move(members));
    auto ss = detail::subset_sums(g, members);
    const int k = g.k();
    double value;
    if (ss.uniform || ss.p0 == 0.0) {
        value = average_degree(g);
    } else {
        const double kk = ipow(k, k);
        double kp = 0.0;
        for (int v : members) {
            const int d = g.degree(v);
            const double ratio = ss.s * detail::root_pow(d, k, k - 1) / ss.p0;
            kp += d * (ipow(std::pow(ratio, 1.0 / k) + k - 1, k) - kk);
        }
        value = average_degree(g) + alpha.value() * kp / (kk * g.n()) +
                (1.0 - alpha.value()) * detail::term_t2(ss, k) / g.n();
    }
    return detail::make_report("kpower_subset", alpha, detail::classify(g, members),
                               {{"s", double(ss.s)}}, value, rho);
}

/// Two-copy bound from the extreme degrees; holds for every hypergraph with an
/// edge, connected or not, at the universal 1/(2n) weight.
inline BoundReport bound_max_min_pair(const Hypergraph& g, Alpha alpha,
                                      const SpectralResult& rho) {
    if (g.m() < 1) throw PreconditionViolated("max/min degree bound needs at least one edge");
    DegreeProfile p = degree_profile(g);
    const double a = alpha.value();
    double value;
    if (p.regular()) {
        value = average_degree(g);
    } else {
        auto t = detail::pair_terms(p.max_degree, p.min_degree, g.k());
        value = average_degree(g) + a * t.t1_first / (2.0 * g.n()) +
                (1.0 - a) * g.k() * t.t2 / (2.0 * g.n());
    }
    return detail::make_report(
        "max_min_pair", alpha, std::nullopt,
        {{"Delta", double(p.max_degree)}, {"delta", double(p.min_degree)}}, value, rho);
}

/// The named extremal subsets, solved once and reused across bounds.
struct NamedSubsets {
    VertexSubset strong;
    VertexSubset weak;
    std::optional<CutResult> cut;  // absent for complete hypergraphs
    int chromatic = 0;
    std::optional<std::pair<int, int>> extreme_pair;  // (argmax, argmin), absent if regular
};

inline NamedSubsets solve_named_subsets(const Hypergraph& g) {
    NamedSubsets out;
    out.strong = max_strong_independent(g);
    out.weak = max_weak_independent(g);
    if (g.m() >= 1) out.chromatic = weak_chromatic_number(g);
    if (is_connected(g) && !g.is_complete()) out.cut = vertex_connectivity(g);
    DegreeProfile p = degree_profile(g);
    if (!p.regular()) {
        int hi = 0, lo = 0;
        for (int v = 1; v <= g.n(); ++v) {
            if (g.degree(v) == p.max_degree && hi == 0) hi = v;
            if (g.degree(v) == p.min_degree && lo == 0) lo = v;
        }
        out.extreme_pair = std::make_pair(hi, lo);
    }
    return out;
}

/// Every applicable bound at the named subsets (plus S = V for the square and
/// k-th-power forms), most optimistic first. Bounds whose hypotheses the
/// instance does not meet (connectivity, k >= 3, an extreme-degree pair, a
/// vertex cut) are left out rather than rejected.
inline std::vector<BoundReport> evaluate_all_bounds(const Hypergraph& g, Alpha alpha,
                                                    const SpectralResult& rho,
                                                    const NamedSubsets& subsets) {
    std::vector<int> all(g.n());
    std::iota(all.begin(), all.end(), 1);
    std::vector<BoundReport> out;
    out.push_back(bound_average_degree(g, alpha, rho));
    out.push_back(bound_strong_set(g, alpha, subsets.strong.members, rho));
    if (g.m() >= 1) out.push_back(bound_max_min_pair(g, alpha, rho));
    if (g.k() >= 3 && is_connected(g)) {
        out.push_back(bound_full_vertex_set(g, alpha, rho));
        out.push_back(bound_subset(g, alpha, subsets.weak.members, rho));
        out.push_back(bound_weak_independence(g, alpha, rho));
        if (subsets.chromatic > 0) out.push_back(bound_chromatic(g, alpha, rho));
        out.push_back(bound_clique_complement(g, alpha, rho));
        if (subsets.cut) out.push_back(bound_vertex_cut(g, alpha, rho));
        if (subsets.extreme_pair)
            out.push_back(bound_vertex_pair(g, alpha, subsets.extreme_pair->first,
                                            subsets.extreme_pair->second, rho));
        out.push_back(bound_square_subset(g, alpha, all, rho));
        out.push_back(bound_kpower_subset(g, alpha, all, rho));
    }
    std::stable_sort(out.begin(), out.end(), [](const BoundReport& a, const BoundReport& b) {
        if (a.value != b.value) return a.value > b.value;
        return a.bound < b.bound;
    });
    return out;
}

/// Convenience wrapper: solves the subsets, computes the reference bracket and
/// evaluates everything.
inline std::vector<BoundReport> best_bound(const Hypergraph& g, Alpha alpha,
                                           double tol = kDefaultSpectralTol) {
    detail::require_connected_k3(g, "bound sweep");
    SpectralResult rho = spectral_radius(g, alpha, tol);
    return evaluate_all_bounds(g, alpha, rho, solve_named_subsets(g));
}

}  // namespace hyperalpha
