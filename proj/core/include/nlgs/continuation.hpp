#ifndef NLGS_CONTINUATION_HPP
#define NLGS_CONTINUATION_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "nlgs/grid.hpp"

namespace nlgs {

// Closed-form ground state of the local (s = 1) problem,
//   Q_1(t) = ((alpha+2)/2)^{1/alpha} sech^{2/alpha}(alpha t / 2),
// sampled on the grid; throws if its discrete residual exceeds 1e-9 (a sign
// the grid is too coarse for the branch to start from).
Profile local_soliton(double alpha, const GridSpec& grid);

struct NewtonFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NewtonOptions {
    int max_iters = 25;
    double gap_floor = 1e-8;  // minimal acceptable even-subspace gap
    bool check_gap = true;    // callers that certify the gap themselves disable this
};

// Newton iteration on the even subspace for F(Q) = (-Delta)^s Q + Q - Q^{alpha+1}.
// The translational zero mode Q' is odd, so the even-restricted Jacobian stays
// invertible wherever the ground state is non-degenerate. Throws NewtonFailure
// on a singular Jacobian, a collapsed gap, or too many iterations.
Profile newton_correct(double s, double alpha, const Profile& q_init, double tol,
                       const NewtonOptions& opts = {});

struct BranchPoint {
    double s = 0.0;
    Profile q;
    double residual_sup = 0.0;
    double even_gap = 0.0;
};

struct BranchResult {
    std::vector<BranchPoint> points;
    bool completed = false;
    std::string message;
};

struct BranchOptions {
    double corrector_tol = 1e-10;
    int max_halvings = 4;  // rescue depth when a corrector step fails
    NewtonOptions newton;
};

// Predictor-corrector walk of s from 1 down to s_to on a uniform grid of
// `steps` increments. Every accepted point carries its residual and even-gap
// certificate; corrector failure (after the halving rescue) ends the walk
// with the partial branch and completed = false. The grid is chosen from the
// final exponent: boxes grow as s decreases because the profiles' decay slows.
BranchResult continue_branch(double alpha, double s_to, int steps,
                             const BranchOptions& opts = {});

// Grid used by continue_branch for a branch ending at s_to. The box follows
// the endpoint's decay (larger for s_to < 0.8); the resolution follows the
// soliton bandwidth, which scales with alpha.
GridSpec continuation_grid(double s_to, double alpha = 1.0);

}  // namespace nlgs

#endif
