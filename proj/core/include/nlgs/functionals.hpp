#ifndef NLGS_FUNCTIONALS_HPP
#define NLGS_FUNCTIONALS_HPP

#include "nlgs/grid.hpp"

namespace nlgs {

// Subcriticality window of the fractional problem: any alpha > 0 for
// s >= 1/2, and alpha < 4s/(1-2s) below it.
bool gn_window_valid(double s, double alpha);

enum class QuotientKind { gagliardo_nirenberg, ilw, katosob_radial };

// A variational quotient together with its parameter window; construction
// validates the window, evaluate() dispatches to the matching quotient.
struct QuotientSpec {
    QuotientKind kind;
    double s = 0.0;      // gagliardo_nirenberg
    double alpha = 0.0;  // gagliardo_nirenberg
    double theta = 0.0;  // katosob_radial

    static QuotientSpec gagliardo_nirenberg(double s, double alpha);
    static QuotientSpec ilw();
    static QuotientSpec katosob_radial(double theta);

    double evaluate(const Profile& u) const;
};

// || (-Delta)^{s/2} u ||_2^theta * ||u||_2^(1-theta) / ||u||_{alpha+2}
// with theta = alpha / (2 s (alpha+2)); invariant under dilation and scaling.
double gn_quotient(double s, double alpha, const Profile& u);

// [ (phi, T phi) + (2/pi) ||phi||_2^2 ] / ||phi||_3^2; minimized by sech
// translates with minimum value (pi/2)^(1/3).
double ilw_quotient(const Profile& phi);

// [ (phi, T phi) + (2/pi)(1 - theta*cot(theta)) ||phi||_2^2 ] / ||phi||_3^2
double katosob_radial_quotient(double theta, const Profile& phi);

// (2 theta / (pi sin theta))^(2/3) * (theta (2 + cos 2theta) - (3/2) sin 2theta)^(1/3)
double sharp_constant_katosob(double theta);

// 1 - theta*cot(theta), with a series fallback near 0.
double one_minus_theta_cot_theta(double theta);

// Closed-form equality profiles.
double profile_h(double t);                       // sech t
double profile_h_theta(double theta, double t);   // (2 theta/pi) sin(theta) / (cosh(2 theta t / pi) + cos theta)
double profile_H(double r);                       // (1 + r^2)^{-1}
double profile_H_theta(double theta, double r);   // r^{-1} (r^{2theta/pi} + r^{-2theta/pi} + 2 cos theta)^{-1}

// sup-norm of T h_theta + (2/pi)(1 - theta cot theta) h_theta - h_theta^2
// on the grid; near zero certifies h_theta as the travelling-wave profile.
double euler_lagrange_residual_h_theta(double theta, const GridSpec& grid);

double i_theta_closed(double theta);  // same value as sharp_constant_katosob

struct IThetaQuadrature {
    double value = 0.0;
    double tail_bound = 0.0;   // bound on the truncated tail of the t-integral
    bool converged = false;    // tail_bound <= 1e-10 * value
};
// Independent route: (2 theta sin theta / pi) * (2 int_0^T (cosh(2 theta t/pi) + cos theta)^{-3} dt)^{1/3}
IThetaQuadrature i_theta_quadrature(double theta);

// Deterministic family of Gaussian test profiles a*exp(-((t-c)/w)^2) used by
// the minimality sweeps; the seed is part of the reported configuration.
Profile random_gaussian_profile(const GridSpec& grid, unsigned long long seed, int index);

}  // namespace nlgs

#endif
