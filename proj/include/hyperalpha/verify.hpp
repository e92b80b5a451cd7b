#pragma once

#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <exception>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "bounds.hpp"
#include "hypergraph.hpp"
#include "report_json.hpp"
#include "spectral.hpp"

namespace hyperalpha {

/// Worker cap: HYPERALPHA_THREADS when set, else the hardware count.
inline int worker_count() {
    int hw = static_cast<int>(std::thread::hardware_concurrency());
    if (hw < 1) hw = 1;
    if (const char* env = std::getenv("HYPERALPHA_THREADS")) {
        int cap = std::atoi(env);
        if (cap >= 1) return std::min(cap, hw);
    }
    return hw;
}

/// Runs fn(0..count-1) on up to `threads` workers. Work items must be
/// independent; output slots indexed by item keep results deterministic.
/// The first exception raised by any item is rethrown after all workers join.
template <typename Fn>
void parallel_for_index(int count, int threads, Fn&& fn) {
    threads = std::min(threads, count);
    if (threads <= 1) {
        for (int i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<int> next{0};
    std::atomic<int> first_error{count};
    std::vector<std::exception_ptr> errors(count);
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (int t = 0; t < threads; ++t)
        pool.emplace_back([&] {
            for (int i = next.fetch_add(1); i < count; i = next.fetch_add(1)) {
                try {
                    fn(i);
                } catch (...) {
                    errors[i] = std::current_exception();
                    int expected = first_error.load();
                    while (i < expected && !first_error.compare_exchange_weak(expected, i)) {
                    }
                }
            }
        });
    for (std::thread& t : pool) t.join();
    if (first_error.load() < count) std::rethrow_exception(errors[first_error.load()]);
}

struct VerifyFamily {
    int n_lo = 4;
    int n_hi = 9;
    int k = 3;
    int m_lo = 0;  // 0 = derive from feasibility
    int m_hi = 0;
};

struct VerifyOptions {
    std::uint64_t seed = 0;
    int trials = 50;
    VerifyFamily family;
    std::vector<double> alphas{0.0, 0.25, 0.5, 0.75, 0.99};
    double spectral_tol = 1e-10;
    // Iteration headroom: alpha near 1 slows the power iteration by roughly
    // a (1 - alpha) factor, so campaigns get ten times the per-call default.
    int spectral_max_iter = 1000000;
    double soundness_tol = kSoundnessTol;
    double ordering_tol = 1e-9;
    double improvement_tol = 1e-12;
    double product_tol = 1e-6;
    int threads = 1;
    bool inject_bound_error = false;  // self-test hook: corrupts one bound value
};

struct VerifyFailure {
    int trial = 0;
    double alpha = 0.0;
    std::string suite;
    std::string detail;
    double slack = 0.0;
};

struct TrialSummary {
    int trial = 0;
    std::uint64_t seed = 0;
    int n = 0, k = 0, m = 0;
    bool regular = false;
    int checks = 0;
};

struct VerifyRun {
    VerifyOptions opts;
    std::vector<TrialSummary> results;
    std::vector<VerifyFailure> failures;
    long long total_checks = 0;
    bool passed = false;
};

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e9b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

struct TrialOutcome {
    TrialSummary summary;
    std::vector<VerifyFailure> failures;
};

// Bounds that the refinement results promise never fall below km/n. The
// chromatic variant substitutes n/chi for the true cardinality and genuinely
// can undershoot the average degree, so it is checked for soundness only.
inline bool improves_average(const std::string& name) {
    return name != "chromatic" && name != "average_degree";
}

inline TrialOutcome run_trial(const VerifyOptions& o, int trial) {
    TrialOutcome out;
    const VerifyFamily& fam = o.family;
    std::uint64_t trial_seed = splitmix64(o.seed ^ splitmix64(static_cast<std::uint64_t>(trial) + 1));
    std::mt19937_64 rng(trial_seed);
    const int n = fam.n_lo + static_cast<int>(bounded_uniform(
                                 rng, static_cast<std::uint64_t>(fam.n_hi - fam.n_lo + 1)));
    const int k = fam.k;
    const int feas_lo = std::max(1, (n - 1 + k - 2) / (k - 1));
    const int feas_hi = static_cast<int>(std::min<unsigned long long>(
        Hypergraph::binomial(n, k), 1000));
    int m_lo = fam.m_lo > 0 ? std::max(fam.m_lo, feas_lo) : feas_lo;
    int m_hi = fam.m_hi > 0 ? std::min(fam.m_hi, feas_hi) : feas_hi;
    if (m_lo > m_hi) m_lo = m_hi;
    const int m =
        m_lo + static_cast<int>(bounded_uniform(rng, static_cast<std::uint64_t>(m_hi - m_lo + 1)));
    Hypergraph g = random_connected(n, k, m, rng());

    TrialSummary& s = out.summary;
    s.trial = trial;
    s.seed = trial_seed;
    s.n = n;
    s.k = k;
    s.m = m;
    DegreeProfile prof = degree_profile(g);
    s.regular = prof.regular();
    const double avg = average_degree(g);

    auto fail = [&](double alpha, const char* suite, std::string detail, double slack) {
        out.failures.push_back(VerifyFailure{trial, alpha, suite, std::move(detail), slack});
    };

    NamedSubsets subsets = solve_named_subsets(g);
    std::vector<int> all(g.n());
    std::iota(all.begin(), all.end(), 1);

    for (std::size_t ai = 0; ai < o.alphas.size(); ++ai) {
        const Alpha alpha(o.alphas[ai]);
        SpectralResult rho = spectral_radius(g, alpha, o.spectral_tol, o.spectral_max_iter);
        if (!rho.converged)
            fail(alpha.value(), "spectral", "power iteration did not converge", 0.0);

        // Soundness: every applicable bound stays at or below the bracket.
        std::vector<BoundReport> reports = evaluate_all_bounds(g, alpha, rho, subsets);
        if (o.inject_bound_error && trial == 0 && ai == 0 && !reports.empty()) {
            reports.front().value += 1.0;
            reports.front().slack = rho.lower - reports.front().value;
            reports.front().holds = reports.front().value <= rho.upper + o.soundness_tol;
        }
        for (const BoundReport& r : reports) {
            ++s.checks;
            if (!(r.value <= rho.upper + o.soundness_tol))
                fail(alpha.value(), "soundness",
                     r.bound + " value " + std::to_string(r.value) + " exceeds rho upper " +
                         std::to_string(rho.upper),
                     r.slack);
            if (improves_average(r.bound)) {
                ++s.checks;
                if (!(r.value >= avg - o.improvement_tol))
                    fail(alpha.value(), "improvement",
                         r.bound + " fell below the average degree", r.value - avg);
            }
        }

        // Ordering: the plain subset bracket dominates both refinements on the
        // same subset, and the first pair form dominates the second.
        for (const std::vector<int>* sel :
             g.k() >= 3 ? std::vector<const std::vector<int>*>{&all, &subsets.weak.members}
                        : std::vector<const std::vector<int>*>{}) {
            BoundReport plain = bound_subset(g, alpha, *sel, rho);
            BoundReport square = bound_square_subset(g, alpha, *sel, rho);
            BoundReport kpow = bound_kpower_subset(g, alpha, *sel, rho);
            s.checks += 2;
            if (!(plain.value >= square.value - o.ordering_tol))
                fail(alpha.value(), "ordering", "subset < square_subset on identical S",
                     plain.value - square.value);
            if (!(plain.value >= kpow.value - o.ordering_tol))
                fail(alpha.value(), "ordering", "subset < kpower_subset on identical S",
                     plain.value - kpow.value);
        }
        if (subsets.extreme_pair && g.k() >= 3) {
            PairBoundForms forms = vertex_pair_display_forms(
                g, alpha, subsets.extreme_pair->first, subsets.extreme_pair->second);
            ++s.checks;
            if (!(forms.first >= forms.second - o.ordering_tol))
                fail(alpha.value(), "ordering", "pair bound forms out of order",
                     forms.first - forms.second);
        }

        // Regular equality / irregular strictness.
        ++s.checks;
        if (s.regular) {
            if (!(std::fabs(rho.rho - prof.max_degree) <= 1e-8))
                fail(alpha.value(), "regular_equality", "regular instance with rho != d",
                     rho.rho - prof.max_degree);
        } else {
            if (!(rho.lower > avg))
                fail(alpha.value(), "regular_equality",
                     "irregular instance with rho not above km/n", rho.lower - avg);
        }
    }

    // Product transport against the one-edge regular factor.
    if (g.k() >= 3) {
        const Alpha alpha(o.alphas[trial % o.alphas.size()]);
        ProductRhoReport rep =
            check_product_rho(g, Hypergraph::complete(g.k(), g.k()), alpha, o.product_tol,
                              o.spectral_tol, o.spectral_max_iter);
        ++s.checks;
        if (!rep.passed)
            fail(alpha.value(), "product_transport",
                 "rho diff " + std::to_string(rep.diff) + ", evec residual " +
                     std::to_string(rep.evec_residual),
                 rep.diff);
    }
    return out;
}

}  // namespace detail

/// Seeded campaign over random connected instances: soundness, improvement,
/// ordering, regular-equality and product-transport suites. Trials may run
/// concurrently; aggregation is by trial index, so output is reproducible.
inline VerifyRun run_verify(const VerifyOptions& opts) {
    VerifyRun run;
    run.opts = opts;
    std::vector<detail::TrialOutcome> outcomes(opts.trials);
    parallel_for_index(opts.trials, std::max(1, opts.threads),
                       [&](int t) { outcomes[t] = detail::run_trial(opts, t); });
    for (detail::TrialOutcome& o : outcomes) {
        run.total_checks += o.summary.checks;
        run.results.push_back(std::move(o.summary));
        for (VerifyFailure& f : o.failures) run.failures.push_back(std::move(f));
    }
    run.passed = run.failures.empty();
    return run;
}

inline void to_json(nlohmann::json& j, const VerifyFailure& f) {
    j = nlohmann::json{{"trial", f.trial},
                       {"alpha", f.alpha},
                       {"suite", f.suite},
                       {"detail", f.detail},
                       {"slack", f.slack}};
}

inline void to_json(nlohmann::json& j, const TrialSummary& s) {
    j = nlohmann::json{{"trial", s.trial}, {"seed", s.seed},       {"n", s.n},
                       {"k", s.k},         {"m", s.m},             {"regular", s.regular},
                       {"checks", s.checks}};
}

inline void to_json(nlohmann::json& j, const VerifyRun& run) {
    j = nlohmann::json{
        {"schema", kSchemaTag},
        {"seed", run.opts.seed},
        {"trials", run.opts.trials},
        {"family",
         {{"n_lo", run.opts.family.n_lo},
          {"n_hi", run.opts.family.n_hi},
          {"k", run.opts.family.k},
          {"m_lo", run.opts.family.m_lo},
          {"m_hi", run.opts.family.m_hi}}},
        {"alphas", run.opts.alphas},
        {"tolerances",
         {{"spectral", run.opts.spectral_tol},
          {"soundness", run.opts.soundness_tol},
          {"ordering", run.opts.ordering_tol},
          {"improvement", run.opts.improvement_tol},
          {"product", run.opts.product_tol}}},
        {"results", run.results},
        {"failures", run.failures},
        {"total_checks", run.total_checks},
        {"passed", run.passed}};
}

}  // namespace hyperalpha
