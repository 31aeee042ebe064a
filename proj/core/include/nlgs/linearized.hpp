#ifndef NLGS_LINEARIZED_HPP
#define NLGS_LINEARIZED_HPP

#include <string>
#include <vector>

#include "nlgs/grid.hpp"
#include "nlgs/multiplier.hpp"

namespace nlgs {

// Dense symmetric discretization of A + mu - c Q^p on a grid.
struct DenseOperator {
    GridSpec grid;
    std::string label;
    std::vector<double> matrix;  // row-major N x N

    int size() const { return grid.num_points; }
    double entry(int i, int j) const { return matrix[static_cast<size_t>(i) * size() + j]; }
    double symmetry_defect() const;  // max |M - M^T| entry
    double max_abs_entry() const;
    double trace() const;
};

// matrix = F^{-1} diag(m(tau_k)) F + mu I - diag(c Q^p), symmetrized.
// Q >= 0 is required when p is not an integer.
DenseOperator build_linearized(const FourierMultiplier& m, double mu, double c,
                               const Profile& q, double p);

struct SpectralReport {
    std::vector<double> eigenvalues;   // ascending
    std::vector<int> zero_modes;       // indices with |lambda| <= zero_tol
    int morse_index = 0;               // count of lambda < -zero_tol
    double zero_tol = 0.0;
    std::vector<double> overlaps;      // |<v_i, ref>| for each zero mode, normalized
};

struct EigenSolution {
    std::vector<double> eigenvalues;  // ascending
    std::vector<double> vectors;      // row-major, column i = eigenvector i
    int n = 0;

    std::vector<double> eigenvector(int i) const;
};

EigenSolution eigensolve_full(const DenseOperator& op);

// zero_tol <= 0 selects the default 1e-6 * max|eigenvalue|. `reference` (may
// be empty) is the vector the zero modes are overlapped against, usually Q'.
SpectralReport eigensolve(const DenseOperator& op, double zero_tol,
                          const std::vector<double>& reference = {});

enum class NondegeneracyStatus { pass, fail, inconclusive };

struct NondegeneracyReport {
    NondegeneracyStatus status = NondegeneracyStatus::fail;
    int zero_mode_count = 0;
    double zero_tol = 0.0;
    double kernel_overlap = 0.0;   // |<v0, Q'>| / (|v0| |Q'|)
    double next_abs_eigenvalue = 0.0;
    double gap_factor = 0.0;       // next_abs_eigenvalue / zero_tol
    int morse_index = 0;

    bool passed() const { return status == NondegeneracyStatus::pass; }
};

// Certifies ker = span{Q'}: exactly one eigenvalue within zero_tol of zero,
// its eigenvector aligned with Q' (overlap >= 0.999), and the next |eigenvalue|
// at least 10x zero_tol. Two near-zero eigenvalues closer than that factor
// give an inconclusive status rather than a failure.
NondegeneracyReport nondegeneracy_check(const DenseOperator& op, const Profile& q,
                                        double zero_tol_relative = 1e-6);

// Restriction of the same operator to even grid vectors, in the orthonormal
// basis {e_0, (e_j + e_{N-j})/sqrt(2), e_{N/2}}; dimension N/2 + 1.
std::vector<double> build_linearized_even(const FourierMultiplier& m, double mu, double c,
                                          const Profile& q, double p);

// Smallest |eigenvalue| of the even-restricted linearization.
double even_subspace_gap(const FourierMultiplier& m, double mu, double c,
                         const Profile& q, double p);

}  // namespace nlgs

#endif
