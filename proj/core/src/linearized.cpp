#include "nlgs/linearized.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "nlgs/lapack.hpp"
#include "nlgs/spectral.hpp"

namespace nlgs {

namespace {

std::vector<double> potential_values(const Profile& q, double c, double p) {
    const bool integer_p = (p == std::floor(p));
    std::vector<double> d(q.values.size());
    for (size_t j = 0; j < d.size(); ++j) {
        const double v = q.values[j];
        if (!integer_p && v < 0.0)
            throw std::invalid_argument("build_linearized: Q must be >= 0 for non-integer p");
        d[j] = c * (integer_p ? std::pow(v, static_cast<int>(p)) : std::pow(v, p));
    }
    return d;
}

}  // namespace

double DenseOperator::symmetry_defect() const {
    const int n = size();
    double defect = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            defect = std::max(defect, std::abs(entry(i, j) - entry(j, i)));
    return defect;
}

double DenseOperator::max_abs_entry() const {
    double m = 0.0;
    for (double v : matrix) m = std::max(m, std::abs(v));
    return m;
}

double DenseOperator::trace() const {
    const int n = size();
    double t = 0.0;
    for (int i = 0; i < n; ++i) t += entry(i, i);
    return t;
}

DenseOperator build_linearized(const FourierMultiplier& m, double mu, double c,
                               const Profile& q, double p) {
    const int n = q.grid.num_points;
    const std::vector<double> gen = circulant_generator(m, q.grid);
    const std::vector<double> pot = potential_values(q, c, p);
    DenseOperator op{q.grid, m.label + " + mu - c Q^p", std::vector<double>(static_cast<size_t>(n) * n)};
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            // gen is even in its index (real even symbol), so this is symmetric
            // up to roundoff; the explicit (M + M^T)/2 below removes that.
            op.matrix[static_cast<size_t>(i) * n + j] = gen[(i - j + n) % n];
        }
        op.matrix[static_cast<size_t>(i) * n + i] += mu - pot[i];
    }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const double avg = 0.5 * (op.matrix[static_cast<size_t>(i) * n + j] +
                                      op.matrix[static_cast<size_t>(j) * n + i]);
            op.matrix[static_cast<size_t>(i) * n + j] = avg;
            op.matrix[static_cast<size_t>(j) * n + i] = avg;
        }
    return op;
}

std::vector<double> EigenSolution::eigenvector(int i) const {
    std::vector<double> v(n);
    for (int j = 0; j < n; ++j) v[j] = vectors[static_cast<size_t>(j) * n + i];
    return v;
}

EigenSolution eigensolve_full(const DenseOperator& op) {
    const int n = op.size();
    if (op.max_abs_entry() > 0.0 && op.symmetry_defect() > 1e-10 * op.max_abs_entry())
        throw std::invalid_argument("eigensolve: operator is not symmetric within tolerance");
    EigenSolution out;
    out.n = n;
    out.eigenvalues = symmetric_eigenvalues(op.matrix, n, &out.vectors);
    return out;
}

namespace {

SpectralReport report_from(const EigenSolution& sol, double zero_tol,
                           const std::vector<double>& reference) {
    SpectralReport rep;
    rep.eigenvalues = sol.eigenvalues;
    double radius = 0.0;
    for (double w : sol.eigenvalues) radius = std::max(radius, std::abs(w));
    rep.zero_tol = zero_tol > 0.0 ? zero_tol : 1e-6 * radius;
    double ref_norm = 0.0;
    for (double v : reference) ref_norm += v * v;
    ref_norm = std::sqrt(ref_norm);
    for (int i = 0; i < sol.n; ++i) {
        const double w = sol.eigenvalues[i];
        if (w < -rep.zero_tol) ++rep.morse_index;
        if (std::abs(w) <= rep.zero_tol) {
            rep.zero_modes.push_back(i);
            if (ref_norm > 0.0) {
                const auto v = sol.eigenvector(i);
                double dot = 0.0, vn = 0.0;
                for (int j = 0; j < sol.n; ++j) {
                    dot += v[j] * reference[j];
                    vn += v[j] * v[j];
                }
                rep.overlaps.push_back(std::abs(dot) / (std::sqrt(vn) * ref_norm));
            }
        }
    }
    return rep;
}

}  // namespace

SpectralReport eigensolve(const DenseOperator& op, double zero_tol,
                          const std::vector<double>& reference) {
    return report_from(eigensolve_full(op), zero_tol, reference);
}

NondegeneracyReport nondegeneracy_check(const DenseOperator& op, const Profile& q,
                                        double zero_tol_relative) {
    const EigenSolution sol = eigensolve_full(op);
    double radius = 0.0;
    for (double w : sol.eigenvalues) radius = std::max(radius, std::abs(w));
    const double zero_tol = zero_tol_relative * radius;

    const Profile qprime = spectral_derivative(q);
    NondegeneracyReport rep;
    rep.zero_tol = zero_tol;

    int zero_count = 0;
    int zero_index = -1;
    double next_abs = std::numeric_limits<double>::max();
    for (int i = 0; i < sol.n; ++i) {
        const double w = sol.eigenvalues[i];
        if (w < -zero_tol) ++rep.morse_index;
        if (std::abs(w) <= zero_tol) {
            ++zero_count;
            zero_index = i;
        } else {
            next_abs = std::min(next_abs, std::abs(w));
        }
    }
    rep.zero_mode_count = zero_count;
    rep.next_abs_eigenvalue = next_abs;
    rep.gap_factor = next_abs / zero_tol;

    if (zero_count == 1) {
        const auto v = sol.eigenvector(zero_index);
        double dot = 0.0, vn = 0.0, qn = 0.0;
        for (int j = 0; j < sol.n; ++j) {
            dot += v[j] * qprime.values[j];
            vn += v[j] * v[j];
            qn += qprime.values[j] * qprime.values[j];
        }
        rep.kernel_overlap = std::abs(dot) / std::sqrt(vn * qn);
    }

    if (zero_count == 1 && rep.kernel_overlap >= 0.999 && rep.gap_factor >= 10.0)
        rep.status = NondegeneracyStatus::pass;
    else if (zero_count >= 2 || (zero_count == 1 && rep.gap_factor < 10.0))
        rep.status = NondegeneracyStatus::inconclusive;
    else
        rep.status = NondegeneracyStatus::fail;
    return rep;
}

std::vector<double> build_linearized_even(const FourierMultiplier& m, double mu, double c,
                                          const Profile& q, double p) {
    const int n = q.grid.num_points;
    const int nh = n / 2 + 1;
    const std::vector<double> gen = circulant_generator(m, q.grid);
    const std::vector<double> pot = potential_values(q, c, p);

    // basis: phi_0 = e_0, phi_a = (e_a + e_{N-a})/sqrt(2) for 0 < a < N/2,
    // phi_{N/2} = e_{N/2}. Circulant part: <phi_a, C phi_b> combines the
    // difference and sum offsets with sqrt(2) edge weights.
    auto circ = [&](int d) { return gen[((d % n) + n) % n]; };
    std::vector<double> red(static_cast<size_t>(nh) * nh);
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    for (int a = 0; a < nh; ++a) {
        const bool edge_a = (a == 0 || a == n / 2);
        for (int b = a; b < nh; ++b) {
            const bool edge_b = (b == 0 || b == n / 2);
            double v = circ(a - b) + circ(a + b);
            if (edge_a && edge_b) v = circ(a - b);          // single spikes both sides
            else if (edge_a || edge_b) v *= inv_sqrt2;      // one spike, one pair
            red[static_cast<size_t>(a) * nh + b] = v;
            red[static_cast<size_t>(b) * nh + a] = v;
        }
        red[static_cast<size_t>(a) * nh + a] += mu - pot[a];
    }
    return red;
}

double even_subspace_gap(const FourierMultiplier& m, double mu, double c,
                         const Profile& q, double p) {
    const int nh = q.grid.num_points / 2 + 1;
    return smallest_abs_eigenvalue(build_linearized_even(m, mu, c, q, p), nh);
}

}  // namespace nlgs
