#ifndef NLGS_SOLVER_HPP
#define NLGS_SOLVER_HPP

#include "nlgs/grid.hpp"
#include "nlgs/multiplier.hpp"

namespace nlgs {

struct SolveParams {
    int max_iters = 2000;
    double residual_tol = 1e-10;
    // <= 0 selects the classical optimal-contraction exponent (alpha+1)/alpha.
    double petviashvili_gamma = 0.0;
    // Even-symmetrize every k-th iterate; 0 disables (the iteration then keeps
    // whatever center the initial guess had).
    int symmetrize_every = 1;
};

struct SolveResult {
    Profile q;
    double residual_sup = 0.0;
    int iterations = 0;
    bool converged = false;
    double stabilizer = 0.0;  // last Petviashvili factor M_n; 1 at a fixed point
};

// Fixed-point iteration Q <- M^gamma (A + mu)^{-1} Q^{alpha+1} with
// M = (Q, (A + mu) Q) / (Q, Q^{alpha+1}) for the ground state of
// A Q - Q^{alpha+1} = -mu Q. Convergence requires both the sup-norm residual
// below tolerance and |M - 1| <= 1e-8. Non-convergence returns the best
// iterate with converged = false; collapse to zero ((Q, Q^{alpha+1}) <= 0)
// throws.
SolveResult petviashvili(const FourierMultiplier& m, double mu, double alpha,
                         const Profile& init, const SolveParams& params = {});

// sup_j | (A Q)_j - Q_j^{alpha+1} + mu Q_j |
double residual_sup_norm(const FourierMultiplier& m, double mu, double alpha, const Profile& q);

}  // namespace nlgs

#endif
