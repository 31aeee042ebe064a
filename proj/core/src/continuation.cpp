#include "nlgs/continuation.hpp"

#include <cmath>
#include <cstdio>

#include "nlgs/functionals.hpp"
#include "nlgs/lapack.hpp"
#include "nlgs/linearized.hpp"
#include "nlgs/multiplier.hpp"
#include "nlgs/solver.hpp"
#include "nlgs/spectral.hpp"

namespace nlgs {

namespace {

std::vector<double> to_even(const Profile& u) {
    const int n = u.grid.num_points;
    std::vector<double> q(n / 2 + 1);
    q[0] = u.values[0];
    q[n / 2] = u.values[n / 2];
    const double s2 = std::sqrt(2.0);
    for (int a = 1; a < n / 2; ++a) q[a] = s2 * u.values[a];
    return q;
}

Profile from_even(const std::vector<double>& q, const GridSpec& grid) {
    const int n = grid.num_points;
    std::vector<double> u(n);
    u[0] = q[0];
    u[n / 2] = q[n / 2];
    const double inv_s2 = 1.0 / std::sqrt(2.0);
    for (int a = 1; a < n / 2; ++a) {
        u[a] = q[a] * inv_s2;
        u[n - a] = q[a] * inv_s2;
    }
    return Profile(grid, std::move(u), Parity::even);
}

}  // namespace

Profile local_soliton(double alpha, const GridSpec& grid) {
    if (!(alpha > 0.0)) throw std::invalid_argument("local_soliton: alpha must be > 0");
    const double amp = std::pow(0.5 * (alpha + 2.0), 1.0 / alpha);
    const double e = 2.0 / alpha;
    Profile q = sample(grid, [amp, e, alpha](double t) {
        return amp * std::pow(1.0 / std::cosh(0.5 * alpha * t), e);
    }, Parity::even);
    const double res = residual_sup_norm(fractional_laplacian(1.0), 1.0, alpha, q);
    if (res > 1e-9) {
        char buf[64];
        std::snprintf(buf, sizeof(buf), "%.3e", res);
        throw std::runtime_error(std::string("local_soliton: discrete residual ") + buf +
                                 " exceeds 1e-9; grid too coarse");
    }
    return q;
}

Profile newton_correct(double s, double alpha, const Profile& q_init, double tol,
                       const NewtonOptions& opts) {
    const FourierMultiplier m = fractional_laplacian(s);
    const GridSpec grid = q_init.grid;
    const int nh = grid.num_points / 2 + 1;

    Profile q = symmetrize_even(q_init);
    for (int it = 0; it <= opts.max_iters; ++it) {
        const double res = residual_sup_norm(m, 1.0, alpha, q);
        if (res <= tol) {
            if (opts.check_gap) {
                const double gap = even_subspace_gap(m, 1.0, alpha + 1.0, q, alpha);
                if (gap <= opts.gap_floor)
                    throw NewtonFailure("newton_correct: even-subspace gap " + std::to_string(gap) +
                                        " at s=" + std::to_string(s) + " is below the floor");
            }
            return q;
        }
        if (it == opts.max_iters) break;

        const Profile aq = apply_multiplier(m, q);
        const Profile qa = nonlinear_power(q, alpha);
        std::vector<double> f(grid.num_points);
        for (int j = 0; j < grid.num_points; ++j)
            f[j] = aq.values[j] + q.values[j] - qa.values[j];
        std::vector<double> f_red = to_even(Profile(grid, std::move(f)));

        std::vector<double> jac = build_linearized_even(m, 1.0, alpha + 1.0, q, alpha);
        std::vector<double> dq;
        try {
            dq = solve_symmetric(std::move(jac), nh, std::move(f_red));
        } catch (const std::runtime_error&) {
            throw NewtonFailure("newton_correct: singular even-subspace Jacobian at s=" +
                                std::to_string(s));
        }
        std::vector<double> q_red = to_even(q);
        for (int a = 0; a < nh; ++a) q_red[a] -= dq[a];
        q = from_even(q_red, grid);
    }
    throw NewtonFailure("newton_correct: no convergence within " + std::to_string(opts.max_iters) +
                        " iterations at s=" + std::to_string(s));
}

GridSpec continuation_grid(double s_to, double alpha) {
    // exponential decay at s = 1 turns into inverse-power decay as s drops,
    // so branches heading below 0.8 run on the large box throughout
    const double L = s_to >= 0.8 ? 20.0 * M_PI : 200.0;
    // the s = 1 soliton sech^{2/alpha}(alpha t / 2) has spectral width ~ alpha
    const double tau_needed = 16.0 * std::max(1.0, alpha);
    int n = 1024;
    while (M_PI * n / (2.0 * L) < tau_needed) n *= 2;
    return GridSpec(L, n);
}

namespace {

Profile advance(double s_from, const Profile& q_from, double s_target, double alpha,
                const BranchOptions& opts, int depth) {
    NewtonOptions inner = opts.newton;
    inner.check_gap = false;  // the branch certifies the gap once per accepted point
    try {
        return newton_correct(s_target, alpha, q_from, opts.corrector_tol, inner);
    } catch (const NewtonFailure&) {
        if (depth >= opts.max_halvings) throw;
        const double mid = 0.5 * (s_from + s_target);
        const Profile q_mid = advance(s_from, q_from, mid, alpha, opts, depth + 1);
        return advance(mid, q_mid, s_target, alpha, opts, depth + 1);
    }
}

}  // namespace

BranchResult continue_branch(double alpha, double s_to, int steps, const BranchOptions& opts) {
    if (!(s_to > 0.0 && s_to <= 1.0))
        throw std::invalid_argument("continue_branch: s_to must lie in (0, 1]");
    if (steps < 1) throw std::invalid_argument("continue_branch: steps must be >= 1");
    if (!gn_window_valid(s_to, alpha))
        throw std::invalid_argument(
            "continue_branch: alpha is supercritical at the endpoint (needs alpha < 4s/(1-2s) "
            "for s < 1/2)");

    const GridSpec grid = continuation_grid(s_to, alpha);
    const FourierMultiplier m1 = fractional_laplacian(1.0);

    BranchResult out;
    Profile q = local_soliton(alpha, grid);
    out.points.push_back({1.0, q, residual_sup_norm(m1, 1.0, alpha, q),
                          even_subspace_gap(m1, 1.0, alpha + 1.0, q, alpha)});
    if (s_to == 1.0) {
        out.completed = true;
        return out;
    }

    const double ds = (1.0 - s_to) / steps;
    for (int k = 1; k <= steps; ++k) {
        const double s = 1.0 - k * ds;
        // secant predictor once two points exist
        Profile pred = q;
        if (out.points.size() >= 2) {
            const Profile& prev2 = out.points[out.points.size() - 2].q;
            std::vector<double> v(q.values.size());
            for (size_t j = 0; j < v.size(); ++j)
                v[j] = 2.0 * q.values[j] - prev2.values[j];
            pred = Profile(grid, std::move(v));
        }
        try {
            q = advance(out.points.back().s, pred, s, alpha, opts, 0);
        } catch (const NewtonFailure& err) {
            out.message = err.what();
            return out;  // partial branch
        }
        const FourierMultiplier ms = fractional_laplacian(s);
        const double gap = even_subspace_gap(ms, 1.0, alpha + 1.0, q, alpha);
        if (gap <= opts.newton.gap_floor) {
            out.message = "even-subspace gap collapsed at s=" + std::to_string(s);
            return out;
        }
        out.points.push_back({s, q, residual_sup_norm(ms, 1.0, alpha, q), gap});
    }
    out.completed = true;
    return out;
}

}  // namespace nlgs
