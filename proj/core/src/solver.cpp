#include "nlgs/solver.hpp"

#include <cmath>
#include <stdexcept>

#include "nlgs/spectral.hpp"

namespace nlgs {

double residual_sup_norm(const FourierMultiplier& m, double mu, double alpha, const Profile& q) {
    const Profile aq = apply_multiplier(m, q);
    const Profile qa = nonlinear_power(q, alpha);
    double sup = 0.0;
    for (int j = 0; j < q.size(); ++j)
        sup = std::max(sup, std::abs(aq.values[j] - qa.values[j] + mu * q.values[j]));
    return sup;
}

SolveResult petviashvili(const FourierMultiplier& m, double mu, double alpha,
                         const Profile& init, const SolveParams& params) {
    if (!(mu > 0.0)) throw std::invalid_argument("petviashvili: mu must be > 0");
    if (!(alpha > 0.0)) throw std::invalid_argument("petviashvili: alpha must be > 0");
    if (params.max_iters < 1) throw std::invalid_argument("petviashvili: max_iters must be >= 1");
    if (!(params.residual_tol > 0.0)) throw std::invalid_argument("petviashvili: residual_tol must be > 0");
    const double gamma =
        params.petviashvili_gamma > 0.0 ? params.petviashvili_gamma : (alpha + 1.0) / alpha;
    if (!(gamma > 1.0)) throw std::invalid_argument("petviashvili: gamma must be > 1");
    if (init.max_abs() == 0.0) throw std::invalid_argument("petviashvili: init must not vanish");

    const FourierMultiplier form_symbol = shifted(m, mu);
    {
        // the inversion below needs m + mu > 0 on the grid
        const auto s = symbol_on_bins(m, init.grid);
        for (double v : s)
            if (!(v + mu > 0.0))
                throw std::invalid_argument("petviashvili: m + mu not positive on the grid");
    }

    Profile q = params.symmetrize_every > 0 ? symmetrize_even(init) : init;
    double res = residual_sup_norm(m, mu, alpha, q);
    Profile best = q;
    double best_res = res;
    double stab = 0.0;
    for (int n = 1; n <= params.max_iters; ++n) {
        if (params.symmetrize_every > 0 && n % params.symmetrize_every == 0) q = symmetrize_even(q);
        const Profile qa = nonlinear_power(q, alpha);
        const double num = quadratic_form(form_symbol, q);
        const double den = inner_product(q, qa);
        if (!(den > 0.0))
            throw std::runtime_error(
                "petviashvili: (Q, Q^{alpha+1}) <= 0 -- iterate collapsed toward zero; "
                "try a positive initial guess");
        stab = num / den;
        Profile next = invert_shifted(m, mu, qa);
        const double scale = std::pow(stab, gamma);
        for (double& v : next.values) v *= scale;
        q = std::move(next);
        res = residual_sup_norm(m, mu, alpha, q);
        if (res <= params.residual_tol && std::abs(stab - 1.0) <= 1e-8)
            return {std::move(q), res, n, true, stab};
        if (res < best_res) {
            best = q;
            best_res = res;
        }
    }
    return {std::move(best), best_res, params.max_iters, false, stab};
}

}  // namespace nlgs
