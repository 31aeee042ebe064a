#ifndef NLGS_LAPACK_HPP
#define NLGS_LAPACK_HPP

#include <vector>

namespace nlgs {

// Thin wrappers over LAPACKE for dense symmetric problems. Matrices are
// row-major n x n (symmetry makes the layout immaterial for these routines).

// Eigenvalues in ascending order; if `vectors` is non-null it receives the
// eigenvectors (row-major, column i of the logical matrix = eigenvector i,
// accessed as (*vectors)[j * n + i]).
std::vector<double> symmetric_eigenvalues(const std::vector<double>& a, int n,
                                          std::vector<double>* vectors = nullptr);

// Solve A x = b for symmetric indefinite A (Bunch-Kaufman). Returns x.
std::vector<double> solve_symmetric(std::vector<double> a, int n, std::vector<double> b);

// Smallest |eigenvalue| of a symmetric matrix via factorize-once inverse
// iteration; far cheaper than a full eigensolve when only the gap is needed.
double smallest_abs_eigenvalue(const std::vector<double>& a, int n, unsigned seed = 1234);

}  // namespace nlgs

#endif
