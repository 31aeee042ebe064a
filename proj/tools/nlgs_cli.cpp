// nlgs: spectral computations for non-local ground-state equations.
//
// Subcommands: solve, verify, continue, spectrum, constants. Every run writes
// machine-readable JSON/CSV; exit codes are 0 (success), 1 (numerical failure
// or failed check), 2 (invalid input).

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <thread>

#include "nlgs/bridge.hpp"
#include "nlgs/continuation.hpp"
#include "nlgs/functionals.hpp"
#include "nlgs/io.hpp"
#include "nlgs/linearized.hpp"
#include "nlgs/multiplier.hpp"
#include "nlgs/quadrature.hpp"
#include "nlgs/report.hpp"
#include "nlgs/solver.hpp"
#include "nlgs/spectral.hpp"
#include "nlgs/sphere.hpp"

using nlohmann::ordered_json;

namespace {

struct GlobalConfig {
    double box_size = 0.0;    // 0 = per-command default
    int num_points = 0;       // 0 = per-command default
    std::string out_dir = ".";
    unsigned long long seed = 20240901;
    bool no_timestamp = false;
};

int worker_count() {
    if (const char* env = std::getenv("NLGS_THREADS")) {
        const int n = std::atoi(env);
        if (n >= 1) return n;
    }
    const unsigned hc = std::thread::hardware_concurrency();
    return hc == 0 ? 1 : static_cast<int>(hc);
}

// index-parallel map with deterministic (index-ordered) results
template <typename Fn>
void parallel_for(int count, Fn&& fn) {
    const int workers = std::min(worker_count(), count);
    if (workers <= 1) {
        for (int i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (int i = next.fetch_add(1); i < count; i = next.fetch_add(1)) fn(i);
        });
    for (auto& th : pool) th.join();
}

std::filesystem::path out_path(const GlobalConfig& cfg, const std::string& name) {
    std::filesystem::create_directories(cfg.out_dir);
    return std::filesystem::path(cfg.out_dir) / name;
}

void write_json(const std::filesystem::path& path, const ordered_json& j) {
    std::ofstream os(path);
    if (!os) throw std::runtime_error("cannot open for writing: " + path.string());
    os << j.dump(2) << '\n';
}

nlgs::GridSpec grid_for(const GlobalConfig& cfg, const nlgs::GridSpec& fallback) {
    const double L = cfg.box_size > 0.0 ? cfg.box_size : fallback.half_width;
    const int N = cfg.num_points > 0 ? cfg.num_points : fallback.num_points;
    return nlgs::GridSpec(L, N);
}

ordered_json grid_json(const nlgs::GridSpec& g) {
    return {{"L", g.half_width}, {"N", g.num_points}};
}

// ---------------------------------------------------------------------------
// solve

struct SolveConfig {
    std::string op = "ilw";
    double s = 0.5;
    double alpha = 1.0;
    double mu = 0.0;  // 0 = operator default (2/pi for ilw, 1 for frac)
    double tol = 1e-10;
    int max_iters = 2000;
    double init_center = 0.0;
    int symmetrize_every = 1;
};

int cmd_solve(const GlobalConfig& gcfg, const SolveConfig& cfg) {
    nlgs::FourierMultiplier m;
    double mu = cfg.mu;
    nlgs::GridSpec fallback = nlgs::default_grid();
    if (cfg.op == "ilw") {
        m = nlgs::ilw_multiplier();
        if (mu == 0.0) mu = 2.0 / M_PI;
    } else if (cfg.op == "frac") {
        if (!(cfg.s > 0.0 && cfg.s <= 1.0)) {
            std::cerr << "solve: --s must lie in (0, 1]\n";
            return 2;
        }
        if (!nlgs::gn_window_valid(cfg.s, cfg.alpha)) {
            std::cerr << "solve: alpha=" << cfg.alpha << " is supercritical for s=" << cfg.s
                      << " (needs alpha < 4s/(1-2s) below s = 1/2)\n";
            return 2;
        }
        m = nlgs::fractional_laplacian(cfg.s);
        if (mu == 0.0) mu = 1.0;
        if (cfg.s < 0.8) fallback = nlgs::large_grid();
    } else {
        std::cerr << "solve: unknown operator '" << cfg.op << "' (use ilw or frac)\n";
        return 2;
    }
    if (!(mu > 0.0) || !(cfg.alpha > 0.0)) {
        std::cerr << "solve: mu and alpha must be positive\n";
        return 2;
    }

    const nlgs::GridSpec grid = grid_for(gcfg, fallback);
    const double center = cfg.init_center;
    nlgs::Profile init = nlgs::sample(grid, [center](double t) {
        return std::exp(-(t - center) * (t - center));
    });
    nlgs::SolveParams params;
    params.residual_tol = cfg.tol;
    params.max_iters = cfg.max_iters;
    params.symmetrize_every = cfg.symmetrize_every;

    nlgs::SolveResult result = nlgs::petviashvili(m, mu, cfg.alpha, init, params);

    const auto profile_path = out_path(gcfg, "profile.csv");
    nlgs::write_profile_csv(profile_path.string(), result.q);

    ordered_json j;
    j["schema"] = nlgs::kReportSchema;
    j["params"] = {{"op", cfg.op},       {"s", cfg.s},   {"alpha", cfg.alpha},
                   {"mu", mu},           {"tol", cfg.tol}, {"max_iters", cfg.max_iters},
                   {"grid", grid_json(grid)}};
    j["residual_sup"] = result.residual_sup;
    j["iterations"] = result.iterations;
    j["converged"] = result.converged;
    j["stabilizing_factor"] = result.stabilizer;
    j["profile_ref"] = "profile.csv";
    write_json(out_path(gcfg, "solve_result.json"), j);

    std::cout << (result.converged ? "converged" : "NOT converged") << " in " << result.iterations
              << " iterations, residual " << result.residual_sup << "\n";
    return result.converged ? 0 : 1;
}

// ---------------------------------------------------------------------------
// verify

struct VerifyConfig {
    std::string only;  // empty = all groups
    double tau = 0.0;  // gr-identity override
    int lmax = 10;
    double theta = 0.0;  // el-residual/katosob/i-theta override
};

using GroupFn = std::function<void(nlgs::VerificationReport&)>;

void add_verify_groups(std::vector<std::pair<std::string, GroupFn>>& groups,
                       const VerifyConfig& vcfg, unsigned long long seed) {
    using nlgs::CheckRow;
    const nlgs::GridSpec grid = nlgs::default_grid();
    auto sech = [grid] {
        return nlgs::sample(grid, [](double t) { return 1.0 / std::cosh(t); }, nlgs::Parity::even);
    };

    groups.emplace_back("ilw-symbol", [](nlgs::VerificationReport& rep) {
        rep.add({"ilw-symbol-value", "ilw-dispersion-symbol", nlgs::ilw_symbol(2.0),
                 1.3708639740270612, 1e-12, false});
        rep.add({"ilw-symbol-asymptote", "ilw-dispersion-symbol", nlgs::ilw_symbol(50.0),
                 50.0 - 2.0 / M_PI, 1e-12, false});
        rep.add({"ilw-symbol-origin", "ilw-dispersion-symbol", nlgs::ilw_symbol(0.0), 0.0, 0.0, false});
    });

    groups.emplace_back("parseval", [grid, seed](nlgs::VerificationReport& rep) {
        nlgs::Profile u = nlgs::random_gaussian_profile(grid, seed, 0);
        rep.add({"parseval", "discrete-plancherel", nlgs::quadratic_form(nlgs::constant_multiplier(1.0), u),
                 std::pow(nlgs::lp_norm(u, 2.0), 2), 1e-12, true});
    });

    groups.emplace_back("sech-groundstate", [sech, grid](nlgs::VerificationReport& rep) {
        rep.add({"sech-form-value", "ilw-quadratic-form-at-sech",
                 nlgs::quadratic_form(nlgs::ilw_multiplier(), sech()), M_PI / 2.0 - 4.0 / M_PI,
                 1e-9, false});
        rep.add({"sech-equation-residual", "ilw-groundstate-equation",
                 nlgs::residual_sup_norm(nlgs::ilw_multiplier(), 2.0 / M_PI, 1.0, sech()), 0.0,
                 1e-8, false});
    });

    groups.emplace_back("ilw-sharp", [sech, grid, seed](nlgs::VerificationReport& rep) {
        const double sharp = std::cbrt(M_PI / 2.0);
        rep.add({"ilw-sharp-constant", "sharp-ilw-inequality", nlgs::ilw_quotient(sech()), sharp,
                 1e-6, false});
        double min_q = 1e300;
        for (int i = 0; i < 50; ++i)
            min_q = std::min(min_q, nlgs::ilw_quotient(nlgs::random_gaussian_profile(grid, seed, i)));
        rep.add({"ilw-minimality", "sharp-ilw-inequality", std::max(0.0, sharp - min_q), 0.0,
                 1e-6, false});
    });

    groups.emplace_back("gn-quotient", [seed](nlgs::VerificationReport& rep) {
        const nlgs::GridSpec big = nlgs::large_grid();
        nlgs::Profile lor = nlgs::sample(big, [](double t) { return 2.0 / (1.0 + t * t); },
                                         nlgs::Parity::even);
        const double base = nlgs::gn_quotient(0.5, 1.0, lor);
        rep.add({"gn-quotient-value", "gagliardo-nirenberg-half-laplacian", base,
                 1.0572099107934191, 1e-4, false});
        double min_q = 1e300;
        for (int i = 0; i < 20; ++i)
            min_q = std::min(min_q, nlgs::gn_quotient(0.5, 1.0,
                                                      nlgs::random_gaussian_profile(big, seed, i)));
        rep.add({"gn-minimality", "gagliardo-nirenberg-half-laplacian",
                 std::max(0.0, base - min_q), 0.0, 1e-4, false});
    });

    groups.emplace_back("sobolev-transport", [sech](nlgs::VerificationReport& rep) {
        const nlgs::HankelFormResult hf = nlgs::form_via_hankel(sech());
        const double psi32 = std::pow(4.0 * M_PI * std::pow(nlgs::lp_norm(sech(), 3.0), 3), 2.0 / 3.0);
        rep.add({"sobolev-transport", "sharp-sobolev-half-laplacian", hf.value / psi32,
                 2.7025676900634902, 1e-5, true});
    });

    groups.emplace_back("three-way-form", [grid](nlgs::VerificationReport& rep) {
        const std::vector<nlgs::Profile> suite = nlgs::bridge_form_suite(grid);
        double worst_sinh = 0.0, worst_hankel = 0.0, worst_bound = 0.0;
        for (const nlgs::Profile& phi : suite) {
            const double fs = nlgs::form_via_symbol(phi);
            worst_sinh = std::max(worst_sinh, std::abs(nlgs::form_via_sinh(phi).value - fs) / fs);
            worst_hankel = std::max(worst_hankel, std::abs(nlgs::form_via_hankel(phi).value - fs) / fs);
            const double lower = 8.0 * std::pow(nlgs::lp_norm(phi, 2.0), 2);
            worst_bound = std::max(worst_bound, (lower - fs) / fs);
        }
        rep.add({"three-way-sinh", "half-laplacian-bridge-form", worst_sinh, 0.0, 1e-5, false});
        rep.add({"three-way-hankel", "half-laplacian-bridge-form", worst_hankel, 0.0, 1e-5, false});
        rep.add({"form-lower-bound", "half-laplacian-bridge-form", std::max(0.0, worst_bound), 0.0,
                 1e-12, false});
    });

    groups.emplace_back("gr-identity", [&vcfg](nlgs::VerificationReport& rep) {
        std::vector<double> taus = {0.5, 1.0, 2.0, 5.0};
        if (vcfg.tau > 0.0) taus = {vcfg.tau};
        for (double tau : taus) {
            auto [quad, closed] = nlgs::gr_identity_check(tau);
            rep.add({"gr-identity-tau-" + nlgs::format_double(tau), "sinh-kernel-fourier-integral",
                     quad, closed, 1e-8, false});
        }
    });

    groups.emplace_back("angular-reduction", [seed](nlgs::VerificationReport& rep) {
        std::mt19937_64 rng(seed);
        std::uniform_real_distribution<double> radius(0.2, 3.0);
        double worst = 0.0;
        int used = 0;
        while (used < 20) {
            const double r = radius(rng), s_r = radius(rng);
            if (std::abs(r - s_r) < 0.1) continue;
            ++used;
            auto [quad, closed] = nlgs::angular_reduction_check(r, s_r);
            worst = std::max(worst, std::abs(quad - closed) / closed);
        }
        rep.add({"angular-reduction", "radial-angular-average", worst, 0.0, 1e-10, false});
    });

    groups.emplace_back("weight-maps", [sech](nlgs::VerificationReport& rep) {
        const nlgs::WeightMapReport wm = nlgs::weight_maps(sech());
        rep.add({"weight-map-cubic", "radial-cubic-norm-transport", wm.psi_l3_cubed,
                 4.0 * M_PI * wm.phi_l3_cubed, 1e-12, true});
        rep.add({"weight-map-hardy", "radial-hardy-form-transport", wm.hardy_form,
                 4.0 * M_PI * wm.phi_l2_squared, 1e-12, true});
    });

    groups.emplace_back("h1-analogue", [](nlgs::VerificationReport& rep) {
        const nlgs::GridSpec tight(8.0, 2048);  // box matched to the bump support
        nlgs::Profile bump = nlgs::sample(tight, [](double t) {
            if (std::abs(t) >= 1.0) return 0.0;
            return std::exp(-1.0 / (1.0 - t * t));
        }, nlgs::Parity::even);
        auto [lhs, rhs] = nlgs::h1_analogue_check(bump);
        rep.add({"h1-analogue", "gradient-form-log-substitution", lhs, rhs, 1e-6, true});
    });

    groups.emplace_back("lift", [sech](nlgs::VerificationReport& rep) {
        const nlgs::RadialProfile3D psi = nlgs::lift(sech());
        double worst = 0.0;
        for (int i = 0; i <= 40; ++i) {
            const double r = 0.1 * std::pow(100.0, i / 40.0);
            worst = std::max(worst, std::abs(psi(r) - 2.0 / (1.0 + r * r)));
        }
        rep.add({"lift-pointwise", "radial-lift-convention", worst, 0.0, 1e-13, false});
    });

    groups.emplace_back("katosob-family", [&vcfg, grid](nlgs::VerificationReport& rep) {
        std::vector<double> thetas = {M_PI / 6.0, M_PI / 4.0, M_PI / 3.0, M_PI / 2.0};
        if (vcfg.theta > 0.0) thetas = {vcfg.theta};
        for (double theta : thetas) {
            const std::string tag = nlgs::format_double(theta);
            rep.add({"el-residual-theta-" + tag, "kato-sobolev-euler-lagrange",
                     nlgs::euler_lagrange_residual_h_theta(theta, grid), 0.0, 1e-7, false});
            nlgs::Profile ht = nlgs::sample(grid, [theta](double t) {
                return nlgs::profile_h_theta(theta, t);
            }, nlgs::Parity::even);
            rep.add({"katosob-equality-theta-" + tag, "kato-sobolev-radial-inequality",
                     nlgs::katosob_radial_quotient(theta, ht), nlgs::sharp_constant_katosob(theta),
                     1e-6, false});
            const nlgs::IThetaQuadrature q = nlgs::i_theta_quadrature(theta);
            rep.add({"i-theta-routes-theta-" + tag, "kato-sobolev-sharp-constant", q.value,
                     nlgs::i_theta_closed(theta), 1e-9, true});
        }
        double worst = 0.0, prev = 0.0;
        for (int k = 1; k <= 50; ++k) {
            const double v = nlgs::sharp_constant_katosob(M_PI * k / 100.0);
            if (k > 1) worst = std::max(worst, prev - v);
            prev = v;
        }
        rep.add({"katosob-monotone", "kato-sobolev-sharp-constant", std::max(0.0, worst), 0.0,
                 0.0, false});
    });

    groups.emplace_back("funk-hecke", [&vcfg](nlgs::VerificationReport& rep) {
        for (int l = 0; l <= vcfg.lmax; ++l) {
            rep.add({"funk-hecke-l-" + std::to_string(l), "zonal-kernel-spectrum",
                     nlgs::funk_hecke_eigenvalue(l), 1.0 / (l + 1), 1e-12, false});
        }
        rep.add({"harmonic-dim-l-1", "zonal-kernel-multiplicity",
                 static_cast<double>(nlgs::harmonic_dim(1)), 4.0, 0.0, false});
    });

    groups.emplace_back("bs-radial", [](nlgs::VerificationReport& rep) {
        const nlgs::BsSpectrum spec = nlgs::bs_radial_eigenvalues(6);
        for (int l = 0; l < 6; ++l) {
            rep.add({"bs-eigenvalue-l-" + std::to_string(l), "birman-schwinger-radial-spectrum",
                     spec.eigenvalues[l], 1.0 / (l + 1), 1e-3, false});
        }
        int parity_violations = 0;
        for (int l = 0; l < 6; ++l)
            if (spec.parities[l] != (l % 2 == 0 ? 1 : -1)) ++parity_violations;
        rep.add({"bs-parity", "birman-schwinger-radial-spectrum",
                 static_cast<double>(parity_violations), 0.0, 0.0, false});
        rep.add({"bs-dilation-mode", "birman-schwinger-radial-spectrum",
                 2.0 * spec.eigenvalues[1], 1.0, 2e-3, false});
    });

    groups.emplace_back("conformal", [seed](nlgs::VerificationReport& rep) {
        std::mt19937_64 rng(seed);
        std::normal_distribution<double> dist(0.0, 2.0);
        double worst_norm = 0.0, worst_conf = 0.0;
        for (int i = 0; i < 1000; ++i) {
            const nlgs::Vec3 x{dist(rng), dist(rng), dist(rng)};
            const nlgs::Vec3 y{dist(rng), dist(rng), dist(rng)};
            const nlgs::SpherePoint p = nlgs::stereographic(x);
            double n = 0.0;
            for (double c : p) n += c * c;
            worst_norm = std::max(worst_norm, std::abs(n - 1.0));
            auto [lhs, rhs] = nlgs::conformal_identity_check(x, y);
            worst_conf = std::max(worst_conf, std::abs(lhs - rhs) / std::max(lhs, 1e-30));
        }
        rep.add({"stereographic-sweep", "stereographic-projection", worst_norm, 0.0, 1e-12, false});
        rep.add({"conformal-identity", "conformal-distance-factorization", worst_conf, 0.0,
                 1e-12, false});
        const double area = 4.0 * M_PI * nlgs::integrate_panels(0.0, 400.0, 800, 16, [](double r) {
            return nlgs::stereographic_jacobian({r, 0.0, 0.0}) * r * r;
        });
        rep.add({"jacobian-area", "stereographic-jacobian", area, 2.0 * M_PI * M_PI, 1e-6, true});
    });

    groups.emplace_back("kernel-transport", [](nlgs::VerificationReport& rep) {
        rep.add({"kernel-transport", "dilation-mode-transport",
                 nlgs::kernel_transport_check().max_rel_error, 0.0, 1e-10, false});
    });

    groups.emplace_back("nondegeneracy-ilw", [](nlgs::VerificationReport& rep) {
        const nlgs::GridSpec g = nlgs::spectral_grid();
        nlgs::Profile h = nlgs::sample(g, [](double t) { return 1.0 / std::cosh(t); },
                                       nlgs::Parity::even);
        nlgs::DenseOperator op = nlgs::build_linearized(nlgs::ilw_multiplier(), 2.0 / M_PI, 2.0, h, 1.0);
        const nlgs::NondegeneracyReport nd = nlgs::nondegeneracy_check(op, h);
        rep.add({"nondegeneracy-ilw-kernel", "ilw-linearization-kernel",
                 static_cast<double>(nd.zero_mode_count), 1.0, 0.0, false});
        rep.add({"nondegeneracy-ilw-overlap", "ilw-linearization-kernel", nd.kernel_overlap, 1.0,
                 1e-3, false});
        rep.add({"nondegeneracy-ilw-gap", "ilw-linearization-kernel",
                 nd.gap_factor >= 10.0 ? 1.0 : 0.0, 1.0, 0.0, false});
    });
}

int cmd_verify(const GlobalConfig& gcfg, const VerifyConfig& vcfg) {
    std::vector<std::pair<std::string, GroupFn>> groups;
    add_verify_groups(groups, vcfg, gcfg.seed);

    nlgs::VerificationReport report;
    report.config = {{"seed", gcfg.seed},
                     {"only", vcfg.only},
                     {"lmax", vcfg.lmax},
                     {"grid", grid_json(nlgs::default_grid())}};

    bool matched = false;
    for (auto& [name, fn] : groups) {
        if (!vcfg.only.empty() && vcfg.only != name) continue;
        matched = true;
        fn(report);
    }
    if (!matched) {
        std::cerr << "verify: unknown check group '" << vcfg.only << "'\nknown groups:";
        for (auto& [name, fn] : groups) std::cerr << ' ' << name;
        std::cerr << '\n';
        return 2;
    }

    write_json(out_path(gcfg, "verification_report.json"), report.to_json(!gcfg.no_timestamp));

    // companion report for the zonal spectrum and its 1D radial realization
    if (vcfg.only.empty() || vcfg.only == "funk-hecke" || vcfg.only == "bs-radial") {
        ordered_json sphere;
        sphere["schema"] = nlgs::kReportSchema;
        sphere["funk_hecke"] = ordered_json::array();
        for (int l = 0; l <= vcfg.lmax; ++l) {
            const double v = nlgs::funk_hecke_eigenvalue(l);
            sphere["funk_hecke"].push_back({{"l", l},
                                            {"funk_hecke_value", v},
                                            {"target", 1.0 / (l + 1)},
                                            {"abs_error", std::abs(v - 1.0 / (l + 1))}});
        }
        const nlgs::BsSpectrum bs = nlgs::bs_radial_eigenvalues(6);
        sphere["bs_eigenvalues"] = ordered_json::array();
        for (size_t l = 0; l < bs.eigenvalues.size(); ++l)
            sphere["bs_eigenvalues"].push_back({{"l", l},
                                                {"eigenvalue", bs.eigenvalues[l]},
                                                {"target", 1.0 / (l + 1)},
                                                {"parity", bs.parities[l]}});
        write_json(out_path(gcfg, "sphere_report.json"), sphere);
    }

    auto sorted = report.to_json(false)["checks"];
    for (const auto& row : sorted) {
        std::cout << (row["pass"].get<bool>() ? "PASS" : "FAIL") << "  "
                  << row["name"].get<std::string>() << "  lhs=" << row["lhs"].dump()
                  << " rhs=" << row["rhs"].dump() << " gap=" << row["abs_gap"].dump() << '\n';
    }
    std::cout << (report.overall_pass() ? "all checks passed" : "CHECK FAILURES PRESENT") << " ("
              << report.checks.size() << " checks)\n";
    return report.overall_pass() ? 0 : 1;
}

// ---------------------------------------------------------------------------
// continue

struct ContinueConfig {
    double alpha = 1.0;
    double s_to = 0.5;
    int steps = 50;
};

int cmd_continue(const GlobalConfig& gcfg, const ContinueConfig& cfg) {
    nlgs::BranchResult branch = nlgs::continue_branch(cfg.alpha, cfg.s_to, cfg.steps);

    std::ofstream csv(out_path(gcfg, "branch.csv"));
    csv << "# s,residual,even_gap,peak_value,l2_norm\n";
    ordered_json manifest;
    manifest["schema"] = nlgs::kReportSchema;
    manifest["alpha"] = cfg.alpha;
    manifest["s_to"] = cfg.s_to;
    manifest["steps"] = cfg.steps;
    manifest["completed"] = branch.completed;
    if (!branch.message.empty()) manifest["message"] = branch.message;
    // the endpoint s = 1/2, alpha = 1 has the closed form 2/(1+t^2)
    if (branch.completed && cfg.alpha == 1.0 && cfg.s_to == 0.5) {
        const nlgs::Profile& q = branch.points.back().q;
        double dist = 0.0;
        for (int j = 0; j < q.size(); ++j) {
            const double t = q.grid.node(j);
            dist = std::max(dist, std::abs(q.values[j] - 2.0 / (1.0 + t * t)));
        }
        manifest["endpoint_reference_distance"] = dist;
    }
    manifest["points"] = ordered_json::array();

    for (size_t i = 0; i < branch.points.size(); ++i) {
        const nlgs::BranchPoint& p = branch.points[i];
        double peak = 0.0, l2 = nlgs::lp_norm(p.q, 2.0);
        for (double v : p.q.values) peak = std::max(peak, v);
        csv << nlgs::format_double(p.s) << ',' << nlgs::format_double(p.residual_sup) << ','
            << nlgs::format_double(p.even_gap) << ',' << nlgs::format_double(peak) << ','
            << nlgs::format_double(l2) << '\n';
        char name[64];
        std::snprintf(name, sizeof(name), "branch_point_%03zu.csv", i);
        nlgs::write_profile_csv(out_path(gcfg, name).string(), p.q);
        manifest["points"].push_back({{"s", p.s},
                                      {"residual", p.residual_sup},
                                      {"even_gap", p.even_gap},
                                      {"profile_ref", name}});
    }
    write_json(out_path(gcfg, "branch_manifest.json"), manifest);

    std::cout << (branch.completed ? "branch complete" : "PARTIAL branch") << ": "
              << branch.points.size() << " points, final s = "
              << (branch.points.empty() ? 1.0 : branch.points.back().s) << '\n';
    return branch.completed ? 0 : 1;
}

// ---------------------------------------------------------------------------
// spectrum

struct SpectrumConfig {
    std::string op = "ilw";
    std::string profile = "sech";
    double s = 1.0;
    double alpha = 1.0;
    double mu = 0.0;
    double zero_tol_rel = 1e-6;
};

int cmd_spectrum(const GlobalConfig& gcfg, const SpectrumConfig& cfg) {
    nlgs::GridSpec grid = grid_for(gcfg, nlgs::spectral_grid());

    nlgs::FourierMultiplier m;
    double mu = cfg.mu, c = 0.0, p = 1.0;
    if (cfg.op == "ilw") {
        m = nlgs::ilw_multiplier();
        if (mu == 0.0) mu = 2.0 / M_PI;
        c = 2.0;
    } else if (cfg.op == "frac") {
        if (!(cfg.s > 0.0 && cfg.s <= 1.0)) {
            std::cerr << "spectrum: --s must lie in (0, 1]\n";
            return 2;
        }
        m = nlgs::fractional_laplacian(cfg.s);
        if (mu == 0.0) mu = 1.0;
        c = cfg.alpha + 1.0;
        p = cfg.alpha;
    } else {
        std::cerr << "spectrum: unknown operator '" << cfg.op << "'\n";
        return 2;
    }

    nlgs::Profile q = nlgs::zero_profile(grid);
    if (cfg.profile == "sech") {
        q = nlgs::sample(grid, [](double t) { return 1.0 / std::cosh(t); }, nlgs::Parity::even);
    } else if (cfg.profile == "local-soliton") {
        q = nlgs::local_soliton(cfg.alpha, grid);
    } else if (cfg.profile == "lorentzian") {
        q = nlgs::sample(grid, [](double t) { return 2.0 / (1.0 + t * t); }, nlgs::Parity::even);
    } else if (cfg.profile == "none") {
        // free operator: keep q = 0
    } else {
        std::cerr << "spectrum: unknown profile '" << cfg.profile
                  << "' (use sech, local-soliton, lorentzian, none)\n";
        return 2;
    }

    const nlgs::DenseOperator op = nlgs::build_linearized(m, mu, c, q, p);
    const nlgs::Profile qprime = nlgs::spectral_derivative(q);
    const nlgs::SpectralReport rep = nlgs::eigensolve(op, 0.0, qprime.values);
    const nlgs::NondegeneracyReport nd = nlgs::nondegeneracy_check(op, q, cfg.zero_tol_rel);

    std::ofstream csv(out_path(gcfg, "eigenvalues.csv"));
    for (size_t i = 0; i < rep.eigenvalues.size(); ++i)
        csv << i << ',' << nlgs::format_double(rep.eigenvalues[i]) << '\n';

    ordered_json j;
    j["schema"] = nlgs::kReportSchema;
    j["config"] = {{"op", cfg.op},   {"profile", cfg.profile}, {"s", cfg.s},
                   {"alpha", cfg.alpha}, {"mu", mu},           {"grid", grid_json(grid)},
                   {"zero_tol_rel", cfg.zero_tol_rel}};
    j["zero_tol"] = rep.zero_tol;
    j["zero_modes"] = rep.zero_modes;
    j["morse_index"] = rep.morse_index;
    j["overlaps"] = rep.overlaps;
    j["eigenvalues_ref"] = "eigenvalues.csv";
    j["eigenvalue_min"] = rep.eigenvalues.front();
    j["eigenvalue_max"] = rep.eigenvalues.back();
    j["nondegeneracy"] = {{"status", nd.passed() ? "pass"
                                     : nd.status == nlgs::NondegeneracyStatus::inconclusive
                                         ? "inconclusive"
                                         : "fail"},
                          {"zero_mode_count", nd.zero_mode_count},
                          {"kernel_overlap", nd.kernel_overlap},
                          {"gap_factor", nd.gap_factor},
                          {"morse_index", nd.morse_index}};
    write_json(out_path(gcfg, "spectral_report.json"), j);

    std::cout << "zero modes: " << rep.zero_modes.size() << ", morse index: " << rep.morse_index
              << ", nondegeneracy: " << (nd.passed() ? "pass" : "not certified") << '\n';
    return nd.passed() ? 0 : 1;
}

// ---------------------------------------------------------------------------
// constants

struct ConstantsConfig {
    double theta_min = 0.1;
    double theta_max = 3.0;
    int steps = 30;
};

int cmd_constants(const GlobalConfig& gcfg, const ConstantsConfig& cfg) {
    if (!(cfg.theta_min > 0.0 && cfg.theta_max < M_PI && cfg.theta_min <= cfg.theta_max)) {
        std::cerr << "constants: theta range must satisfy 0 < min <= max < pi\n";
        return 2;
    }
    if (cfg.steps < 1) {
        std::cerr << "constants: steps must be >= 1\n";
        return 2;
    }
    const nlgs::GridSpec grid = grid_for(gcfg, nlgs::default_grid());

    struct Row {
        double theta, closed, quadrature, el_residual;
    };
    std::vector<Row> rows(cfg.steps + 1);
    parallel_for(cfg.steps + 1, [&](int i) {
        const double theta = cfg.theta_min + (cfg.theta_max - cfg.theta_min) * i / cfg.steps;
        rows[i] = {theta, nlgs::i_theta_closed(theta), nlgs::i_theta_quadrature(theta).value,
                   nlgs::euler_lagrange_residual_h_theta(theta, grid)};
    });

    std::ofstream csv(out_path(gcfg, "constants.csv"));
    csv << "# theta,closed_constant,quadrature_constant,el_residual\n";
    for (const Row& r : rows)
        csv << nlgs::format_double(r.theta) << ',' << nlgs::format_double(r.closed) << ','
            << nlgs::format_double(r.quadrature) << ',' << nlgs::format_double(r.el_residual)
            << '\n';

    ordered_json manifest;
    manifest["schema"] = nlgs::kReportSchema;
    manifest["theta_min"] = cfg.theta_min;
    manifest["theta_max"] = cfg.theta_max;
    manifest["steps"] = cfg.steps;
    manifest["grid"] = grid_json(grid);
    manifest["csv_ref"] = "constants.csv";
    write_json(out_path(gcfg, "constants_manifest.json"), manifest);

    double worst = 0.0;
    for (const Row& r : rows)
        worst = std::max(worst, std::abs(r.closed - r.quadrature) / r.closed);
    std::cout << "wrote " << rows.size() << " rows; worst closed-vs-quadrature relative gap "
              << worst << '\n';
    return worst <= 1e-8 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"spectral verification suite for non-local ground-state equations"};
    app.require_subcommand(1);
    app.set_config("--config");

    GlobalConfig gcfg;
    app.add_option("--box-size", gcfg.box_size, "half-width L of the grid (0 = command default)");
    app.add_option("--num-points", gcfg.num_points, "grid size N, even (0 = command default)");
    app.add_option("--out", gcfg.out_dir, "output directory");
    app.add_option("--seed", gcfg.seed, "seed for randomized sweeps");
    app.add_flag("--no-timestamp", gcfg.no_timestamp, "omit the timestamp field from reports");

    SolveConfig scfg;
    CLI::App* solve = app.add_subcommand("solve", "compute a ground state");
    solve->add_option("--op", scfg.op, "operator: ilw or frac");
    solve->add_option("--s", scfg.s, "fractional exponent (frac only)");
    solve->add_option("--alpha", scfg.alpha, "nonlinearity power");
    solve->add_option("--mu", scfg.mu, "frequency shift (0 = operator default)");
    solve->add_option("--tol", scfg.tol, "residual tolerance");
    solve->add_option("--max-iters", scfg.max_iters, "iteration budget");
    solve->add_option("--init-center", scfg.init_center, "center of the Gaussian initial guess");
    solve->add_option("--symmetrize-every", scfg.symmetrize_every,
                      "even-symmetrization period (0 disables)");

    VerifyConfig vcfg;
    CLI::App* verify = app.add_subcommand("verify", "run the identity suite");
    verify->add_option("--only", vcfg.only, "run a single check group");
    verify->add_option("--tau", vcfg.tau, "frequency for the gr-identity group");
    verify->add_option("--lmax", vcfg.lmax, "largest zonal degree for funk-hecke");
    verify->add_option("--theta", vcfg.theta, "single theta for the katosob-family group");

    ContinueConfig ccfg;
    CLI::App* cont = app.add_subcommand("continue", "walk the exponent branch from s = 1");
    cont->add_option("--alpha", ccfg.alpha, "nonlinearity power");
    cont->add_option("--s-to", ccfg.s_to, "final exponent in (0, 1]");
    cont->add_option("--steps", ccfg.steps, "number of uniform steps");

    SpectrumConfig pcfg;
    CLI::App* spectrum = app.add_subcommand("spectrum", "dense linearization spectrum");
    spectrum->add_option("--op", pcfg.op, "operator: ilw or frac");
    spectrum->add_option("--profile", pcfg.profile, "sech | local-soliton | lorentzian | none");
    spectrum->add_option("--s", pcfg.s, "fractional exponent (frac only)");
    spectrum->add_option("--alpha", pcfg.alpha, "nonlinearity power");
    spectrum->add_option("--mu", pcfg.mu, "frequency shift (0 = operator default)");
    spectrum->add_option("--zero-tol-rel", pcfg.zero_tol_rel, "zero tolerance / spectral radius");

    ConstantsConfig kcfg;
    CLI::App* constants = app.add_subcommand("constants", "sweep the sharp-constant family");
    constants->add_option("--theta-min", kcfg.theta_min, "lower end of the sweep");
    constants->add_option("--theta-max", kcfg.theta_max, "upper end of the sweep");
    constants->add_option("--steps", kcfg.steps, "number of sweep intervals");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*solve) return cmd_solve(gcfg, scfg);
        if (*verify) return cmd_verify(gcfg, vcfg);
        if (*cont) return cmd_continue(gcfg, ccfg);
        if (*spectrum) return cmd_spectrum(gcfg, pcfg);
        if (*constants) return cmd_constants(gcfg, kcfg);
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid input: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}
