#ifndef NLGS_QUADRATURE_HPP
#define NLGS_QUADRATURE_HPP

#include <functional>
#include <vector>

namespace nlgs {

// Gauss-Legendre nodes and weights on [-1, 1].
struct GaussLegendre {
    explicit GaussLegendre(int n);
    std::vector<double> nodes;
    std::vector<double> weights;

    // integral of f over [a, b] with this rule
    double integrate(double a, double b, const std::function<double(double)>& f) const;
};

// Composite rule over [a, b] split into `panels` equal panels.
double integrate_panels(double a, double b, int panels, int order,
                        const std::function<double(double)>& f);

// Composite rule on [0, b] with panel edges b/2^j, j = 0, 1, ...; resolves
// endpoint singularities in derivatives at 0 (integrand values must be finite).
double integrate_graded(double b, int levels, int order,
                        const std::function<double(double)>& f);

}  // namespace nlgs

#endif
