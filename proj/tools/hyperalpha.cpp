// Command-line front end: info | spectral | bounds | verify | product | gen.
//
// Exit codes: 0 = all checks hold, 1 = a mathematical property failed,
// 2 = usage or parse error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <hyperalpha/bounds.hpp>
#include <hyperalpha/combinatorics.hpp>
#include <hyperalpha/hypergraph.hpp>
#include <hyperalpha/io.hpp>
#include <hyperalpha/report_json.hpp>
#include <hyperalpha/spectral.hpp>
#include <hyperalpha/tensor_ops.hpp>
#include <hyperalpha/verify.hpp>

namespace ha = hyperalpha;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitPropertyFailed = 1;
constexpr int kExitUsage = 2;

std::vector<int> parse_id_list(const std::string& text) {
    std::vector<int> out;
    std::string token;
    std::istringstream is(text);
    while (std::getline(is, token, ','))
        if (!token.empty()) out.push_back(std::stoi(token));
    return out;
}

std::vector<double> parse_double_list(const std::string& text) {
    std::vector<double> out;
    std::string token;
    std::istringstream is(text);
    while (std::getline(is, token, ','))
        if (!token.empty()) out.push_back(std::stod(token));
    return out;
}

// "4:9" or "6"
std::pair<int, int> parse_range(const std::string& text) {
    auto pos = text.find(':');
    if (pos == std::string::npos) {
        int v = std::stoi(text);
        return {v, v};
    }
    return {std::stoi(text.substr(0, pos)), std::stoi(text.substr(pos + 1))};
}

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

void print_spectral_line(std::ostream& os, const ha::SpectralResult& r) {
    os << "rho=" << fmt(r.rho) << " bracket=[" << fmt(r.lower) << "," << fmt(r.upper)
       << "] iterations=" << r.iterations << " converged=" << (r.converged ? "true" : "false")
       << " residual=" << fmt(r.residual) << '\n';
}

int cmd_info(const std::string& path) {
    ha::Hypergraph g = ha::read_uhg_file(path);
    ha::DegreeProfile p = ha::degree_profile(g);
    ha::Connectivity c = ha::connectivity(g);
    std::cout << "k=" << g.k() << " n=" << g.n() << " m=" << g.m() << " Δ=" << p.max_degree
              << " δ=" << p.min_degree << " connected=" << (c.connected ? "true" : "false")
              << '\n';
    std::cout << "average_degree=" << fmt(p.average()) << '\n';
    std::cout << "degrees:";
    for (int d : p.degrees) std::cout << ' ' << d;
    std::cout << '\n';
    std::cout << "components:";
    for (const auto& comp : c.components) {
        std::cout << " {";
        for (std::size_t i = 0; i < comp.size(); ++i) std::cout << (i ? "," : "") << comp[i];
        std::cout << "}";
    }
    std::cout << '\n';
    return kExitOk;
}

int cmd_spectral(const std::string& path, double alpha, double tol, int max_iter, bool as_json) {
    ha::Hypergraph g = ha::read_uhg_file(path);
    ha::ComponentSpectrum cs = ha::spectral_radius_components(g, ha::Alpha(alpha), tol, max_iter);
    if (as_json) {
        json j = cs.overall;
        j["schema"] = ha::kSchemaTag;
        j["alpha"] = alpha;
        if (cs.components.size() > 1) {
            json comps = json::array();
            for (std::size_t i = 0; i < cs.components.size(); ++i) {
                json cj = cs.per_component[i];
                cj["vertices"] = cs.components[i];
                comps.push_back(std::move(cj));
            }
            j["components"] = std::move(comps);
        }
        std::cout << j.dump() << '\n';
        return kExitOk;
    }
    std::cout << "alpha=" << fmt(alpha) << '\n';
    if (cs.components.size() > 1) {
        for (std::size_t i = 0; i < cs.components.size(); ++i) {
            std::cout << "component " << i + 1 << " (" << cs.components[i].size() << " vertices): ";
            print_spectral_line(std::cout, cs.per_component[i]);
        }
        std::cout << "max over components:\n";
    }
    print_spectral_line(std::cout, cs.overall);
    return kExitOk;
}

int cmd_bounds(const std::string& path, double alpha_v, const std::string& subset_arg, bool all,
               double tol, bool as_json) {
    ha::Hypergraph g = ha::read_uhg_file(path);
    ha::Alpha alpha(alpha_v);
    ha::SpectralResult rho = ha::is_connected(g) ? ha::spectral_radius(g, alpha, tol)
                                                 : ha::spectral_radius_any(g, alpha, tol);
    std::vector<ha::BoundReport> reports;
    if (!subset_arg.empty()) {
        std::vector<int> members = parse_id_list(subset_arg);
        // Strong independent subsets get the tighter 1/n bracket.
        if (ha::is_strong_independent(g, members))
            reports.push_back(ha::bound_strong_set(g, alpha, members, rho));
        else
            reports.push_back(ha::bound_subset(g, alpha, members, rho));
    } else {
        (void)all;  // default behaviour is the full sweep
        reports = ha::evaluate_all_bounds(g, alpha, rho, ha::solve_named_subsets(g));
    }
    if (as_json) {
        json j{{"schema", ha::kSchemaTag},
               {"alpha", alpha_v},
               {"rho_lower", rho.lower},
               {"rho_upper", rho.upper},
               {"bounds", reports}};
        std::cout << j.dump() << '\n';
        return kExitOk;
    }
    std::cout << "alpha=" << fmt(alpha_v) << "  rho bracket=[" << fmt(rho.lower) << ","
              << fmt(rho.upper) << "]\n";
    std::printf("%-20s %-18s %-14s %s\n", "bound", "value", "slack", "holds");
    for (const ha::BoundReport& r : reports)
        std::printf("%-20s %-18.12g %-14.6g %s\n", r.bound.c_str(), r.value, r.slack,
                    r.holds ? "✓" : "VIOLATED");
    bool all_hold = true;
    for (const ha::BoundReport& r : reports) all_hold = all_hold && r.holds;
    return all_hold ? kExitOk : kExitPropertyFailed;
}

int cmd_product(const std::string& path_g, const std::string& path_h, double alpha_v, double tol,
                bool laplacian, bool as_json) {
    ha::Hypergraph g = ha::read_uhg_file(path_g);
    ha::Hypergraph h = ha::read_uhg_file(path_h);
    ha::Alpha alpha(alpha_v);
    json j{{"schema", ha::kSchemaTag}, {"alpha", alpha_v}};
    bool ok = true;

    ha::ProductRhoReport rep = ha::check_product_rho(g, h, alpha, tol);
    ok = ok && rep.passed;
    j["product_rho"] = rep;
    if (!as_json) {
        std::cout << "G: n=" << g.n() << " m=" << g.m() << " k=" << g.k() << "   H: n=" << h.n()
                  << " m=" << h.m() << " d=" << rep.degree_h << '\n';
        std::cout << "rho(G)=" << fmt(rep.rho_g) << '\n';
        std::cout << "rho(GxH)=" << fmt(rep.rho_product) << '\n';
        std::cout << "(k-1)! * d * rho(G)=" << fmt(rep.expected) << '\n';
        std::cout << "|diff|=" << fmt(rep.diff) << " (tol " << fmt(tol * rep.scale) << ") "
                  << (rep.rho_ok ? "OK" : "FAILED") << '\n';
        std::cout << "u⊗e residual=" << fmt(rep.evec_residual) << " "
                  << (rep.evec_ok ? "OK" : "FAILED") << '\n';
    }

    if (laplacian) {
        // Transport route for regular G: the all-ones Laplacian kernel vector
        // and the pair derived from the adjacency Perron eigenpair.
        ha::DegreeProfile pg = ha::degree_profile(g);
        if (!pg.regular())
            throw ha::PreconditionViolated("--laplacian needs a regular G for the eigenpair route");
        ha::KVector ones = ha::KVector::ones(g.n(), g.k());
        ha::LaplacianTransportReport zero_rep =
            ha::check_laplacian_transport(g, h, 0.0, ones, tol);
        ha::SpectralResult adj = ha::spectral_radius(g, ha::Alpha(0.0), 1e-12);
        ha::LaplacianTransportReport derived_rep =
            ha::check_laplacian_transport(g, h, pg.max_degree - adj.rho, adj.eigvec, tol);
        ok = ok && zero_rep.passed && derived_rep.passed;
        j["laplacian_zero"] = zero_rep;
        j["laplacian_derived"] = derived_rep;
        if (!as_json) {
            std::cout << "L transport lambda=0: residual=" << fmt(zero_rep.residual_out) << " "
                      << (zero_rep.passed ? "OK" : "FAILED") << '\n';
            std::cout << "L transport lambda=d-rho0=" << fmt(derived_rep.lambda_in)
                      << ": residual=" << fmt(derived_rep.residual_out) << " "
                      << (derived_rep.passed ? "OK" : "FAILED") << '\n';
        }
    }
    if (as_json) {
        j["passed"] = ok;
        std::cout << j.dump() << '\n';
    }
    return ok ? kExitOk : kExitPropertyFailed;
}

int cmd_verify(const ha::VerifyOptions& opts, bool as_json) {
    ha::VerifyRun run = ha::run_verify(opts);
    if (as_json) {
        json j = run;
        std::cout << j.dump() << '\n';
    } else {
        std::cout << "trials=" << opts.trials << " checks=" << run.total_checks
                  << " failures=" << run.failures.size() << '\n';
        for (const ha::VerifyFailure& f : run.failures)
            std::cout << "FAIL trial=" << f.trial << " alpha=" << fmt(f.alpha) << " [" << f.suite
                      << "] " << f.detail << " slack=" << fmt(f.slack) << '\n';
        std::cout << (run.passed ? "all checks passed" : "FAILURES FOUND") << '\n';
    }
    return run.passed ? kExitOk : kExitPropertyFailed;
}

int cmd_gen(int n, int k, int m, std::uint64_t seed, const std::string& out_path,
            const std::string& family) {
    ha::Hypergraph g = family == "complete" ? ha::Hypergraph::complete(n, k)
                                            : ha::random_connected(n, k, m, seed);
    if (out_path.empty() || out_path == "-") {
        ha::write_uhg(std::cout, g);
    } else {
        ha::write_uhg_file(out_path, g);
        std::cerr << "wrote " << out_path << " (n=" << g.n() << " k=" << g.k() << " m=" << g.m()
                  << ")\n";
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"A_alpha spectral radius toolkit for k-uniform hypergraphs"};
    app.require_subcommand(1);

    std::string path, path_h, out_path, subset_arg, alphas_arg = "0,0.25,0.5,0.75,0.99";
    std::string n_range = "4:9", m_range, family = "random";
    double alpha = 0.0, tol = ha::kDefaultSpectralTol, ptol = 1e-6, spectral_tol = 1e-10;
    int max_iter = ha::kDefaultMaxIter;
    int gen_n = 6, gen_k = 3, gen_m = 0, fam_k = 3, trials = 50;
    std::uint64_t seed = 0;
    bool as_json = false, all_bounds = false, laplacian = false, inject = false;

    CLI::App* info = app.add_subcommand("info", "structural summary of a .uhg file");
    info->add_option("path", path)->required();

    CLI::App* spectral = app.add_subcommand("spectral", "A_alpha spectral radius with bracket");
    spectral->add_option("path", path)->required();
    spectral->add_option("--alpha", alpha, "alpha in [0,1)");
    spectral->add_option("--tol", tol, "bracket width target");
    spectral->add_option("--max-iter", max_iter);
    spectral->add_flag("--json", as_json);

    CLI::App* bounds = app.add_subcommand("bounds", "degree-based lower bounds versus rho");
    bounds->add_option("path", path)->required();
    bounds->add_option("--alpha", alpha);
    bounds->add_option("--subset", subset_arg, "comma-separated vertex ids");
    bounds->add_flag("--all", all_bounds, "evaluate every applicable bound (default)");
    bounds->add_option("--tol", tol);
    bounds->add_flag("--json", as_json);

    CLI::App* product = app.add_subcommand("product", "direct-product spectral transport check");
    product->add_option("pathG", path)->required();
    product->add_option("pathH", path_h)->required();
    product->add_option("--alpha", alpha);
    product->add_option("--tol", ptol, "relative transport tolerance");
    product->add_flag("--laplacian", laplacian, "also transport Laplacian eigenpairs");
    product->add_flag("--json", as_json);

    CLI::App* verify = app.add_subcommand("verify", "randomized property campaign");
    // Campaigns always take an explicit seed; there is no wall-clock default.
    verify->add_option("--seed", seed)->required();
    verify->add_option("--trials", trials);
    verify->add_option("--n", n_range, "vertex count or lo:hi range");
    verify->add_option("--k", fam_k);
    verify->add_option("--m", m_range, "edge count or lo:hi range (default: feasible range)");
    verify->add_option("--alphas", alphas_arg, "comma-separated alpha values");
    verify->add_option("--spectral-tol", spectral_tol);
    verify->add_flag("--json", as_json);
    verify->add_flag("--inject-bound-error", inject)->group("");  // self-test hook

    CLI::App* gen = app.add_subcommand("gen", "write a random or complete instance");
    gen->add_option("--n", gen_n)->required();
    gen->add_option("--k", gen_k)->required();
    gen->add_option("--m", gen_m);
    gen->add_option("--seed", seed);
    gen->add_option("--out", out_path, "output path (default: stdout)");
    gen->add_option("--family", family)->check(CLI::IsMember({"random", "complete"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*info) return cmd_info(path);
        if (*spectral) return cmd_spectral(path, alpha, tol, max_iter, as_json);
        if (*bounds) return cmd_bounds(path, alpha, subset_arg, all_bounds, tol, as_json);
        if (*product) return cmd_product(path, path_h, alpha, ptol, laplacian, as_json);
        if (*verify) {
            ha::VerifyOptions opts;
            opts.seed = seed;
            opts.trials = trials;
            auto [n_lo, n_hi] = parse_range(n_range);
            opts.family.n_lo = n_lo;
            opts.family.n_hi = n_hi;
            opts.family.k = fam_k;
            if (!m_range.empty()) {
                auto [m_lo, m_hi] = parse_range(m_range);
                opts.family.m_lo = m_lo;
                opts.family.m_hi = m_hi;
            }
            opts.alphas = parse_double_list(alphas_arg);
            if (opts.alphas.empty()) throw ha::PreconditionViolated("--alphas must be nonempty");
            opts.spectral_tol = spectral_tol;
            opts.threads = ha::worker_count();
            opts.inject_bound_error = inject;
            return cmd_verify(opts, as_json);
        }
        if (*gen) return cmd_gen(gen_n, gen_k, gen_m, seed, out_path, family);
    } catch (const ha::ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const ha::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
