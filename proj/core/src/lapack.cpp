#include "nlgs/lapack.hpp"

#include <lapacke.h>

#include <cmath>
#include <random>
#include <stdexcept>

namespace nlgs {

std::vector<double> symmetric_eigenvalues(const std::vector<double>& a, int n,
                                          std::vector<double>* vectors) {
    if (static_cast<int>(a.size()) != n * n)
        throw std::invalid_argument("symmetric_eigenvalues: size mismatch");
    std::vector<double> work = a;
    std::vector<double> w(n);
    const char jobz = vectors ? 'V' : 'N';
    const lapack_int info =
        LAPACKE_dsyevd(LAPACK_ROW_MAJOR, jobz, 'U', n, work.data(), n, w.data());
    if (info != 0) throw std::runtime_error("dsyevd failed to converge");
    if (vectors) *vectors = std::move(work);
    return w;
}

std::vector<double> solve_symmetric(std::vector<double> a, int n, std::vector<double> b) {
    if (static_cast<int>(a.size()) != n * n || static_cast<int>(b.size()) != n)
        throw std::invalid_argument("solve_symmetric: size mismatch");
    std::vector<lapack_int> ipiv(n);
    const lapack_int info = LAPACKE_dsysv(LAPACK_ROW_MAJOR, 'U', n, 1, a.data(), n,
                                          ipiv.data(), b.data(), 1);
    if (info != 0) throw std::runtime_error("dsysv: singular factorization");
    return b;
}

double smallest_abs_eigenvalue(const std::vector<double>& a, int n, unsigned seed) {
    if (static_cast<int>(a.size()) != n * n)
        throw std::invalid_argument("smallest_abs_eigenvalue: size mismatch");
    std::vector<double> fac = a;
    std::vector<lapack_int> ipiv(n);
    lapack_int info = LAPACKE_dsytrf(LAPACK_ROW_MAJOR, 'U', n, fac.data(), n, ipiv.data());
    if (info != 0) return 0.0;  // exactly singular: the gap is zero

    std::mt19937 rng(seed);
    std::normal_distribution<double> dist;
    std::vector<double> x(n);
    for (double& v : x) v = dist(rng);

    // power iteration on A^{-2}: immune to the smallest eigenvalue coming as a
    // near +/- pair, which would stall plain inverse iteration
    auto solve_inplace = [&](std::vector<double>& v) {
        if (LAPACKE_dsytrs(LAPACK_ROW_MAJOR, 'U', n, 1, fac.data(), n, ipiv.data(), v.data(), 1) != 0)
            throw std::runtime_error("dsytrs failed");
    };
    double prev_growth = 0.0;
    for (int it = 0; it < 80; ++it) {
        std::vector<double> y = x;
        solve_inplace(y);
        solve_inplace(y);
        double norm = 0.0;
        for (double v : y) norm += v * v;
        norm = std::sqrt(norm);
        if (!(norm > 0.0)) break;
        for (int i = 0; i < n; ++i) x[i] = y[i] / norm;
        if (it > 4 && std::abs(norm - prev_growth) < 1e-10 * norm) break;
        prev_growth = norm;
    }
    // x now lies in the eigenspace of the smallest |lambda|; ||A x|| equals it
    double img = 0.0;
    for (int i = 0; i < n; ++i) {
        double row = 0.0;
        for (int j = 0; j < n; ++j) row += a[static_cast<size_t>(i) * n + j] * x[j];
        img += row * row;
    }
    return std::sqrt(img);
}

}  // namespace nlgs
