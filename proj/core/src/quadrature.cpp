#include "nlgs/quadrature.hpp"

#include <cmath>
#include <stdexcept>

namespace nlgs {

GaussLegendre::GaussLegendre(int n) {
    if (n < 1) throw std::invalid_argument("GaussLegendre: order must be >= 1");
    nodes.resize(n);
    weights.resize(n);
    // Newton iteration from the Chebyshev initial guess; converges in a handful
    // of steps for any practical order.
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        nodes[i] = -x;
        nodes[n - 1 - i] = x;
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        weights[i] = w;
        weights[n - 1 - i] = w;
    }
}

double GaussLegendre::integrate(double a, double b, const std::function<double(double)>& f) const {
    const double c = 0.5 * (a + b), s = 0.5 * (b - a);
    double acc = 0.0;
    for (size_t i = 0; i < nodes.size(); ++i) acc += weights[i] * f(c + s * nodes[i]);
    return s * acc;
}

double integrate_panels(double a, double b, int panels, int order,
                        const std::function<double(double)>& f) {
    const GaussLegendre gl(order);
    const double w = (b - a) / panels;
    double acc = 0.0;
    for (int i = 0; i < panels; ++i) acc += gl.integrate(a + i * w, a + (i + 1) * w, f);
    return acc;
}

double integrate_graded(double b, int levels, int order,
                        const std::function<double(double)>& f) {
    const GaussLegendre gl(order);
    double acc = 0.0;
    double hi = b;
    for (int j = 0; j < levels; ++j) {
        const double lo = hi / 2.0;
        acc += gl.integrate(lo, hi, f);
        hi = lo;
    }
    acc += gl.integrate(0.0, hi, f);
    return acc;
}

}  // namespace nlgs
