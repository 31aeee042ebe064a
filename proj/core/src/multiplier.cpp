#include "nlgs/multiplier.hpp"

#include <cmath>
#include <stdexcept>

namespace nlgs {

double ilw_symbol(double tau) {
    const double a = std::abs(tau);
    const double x = 0.5 * M_PI * a;
    if (x < 1e-4) {
        // tau*coth(x) = 2/pi + a*(x/3 - x^3/45 + ...), so the 2/pi cancels exactly.
        return a * (x / 3.0 - x * x * x / 45.0);
    }
    if (x > 350.0) return a - 2.0 / M_PI;  // coth(x) = 1 to machine precision
    const double coth = 1.0 + 2.0 / std::expm1(2.0 * x);
    return a * coth - 2.0 / M_PI;
}

double fractional_laplacian_symbol(double s, double tau) {
    if (!(s > 0.0 && s <= 1.0))
        throw std::invalid_argument("fractional_laplacian_symbol: s must lie in (0, 1]");
    if (tau == 0.0) return 0.0;
    return std::pow(std::abs(tau), 2.0 * s);
}

FourierMultiplier ilw_multiplier() {
    return {[](double tau) { return ilw_symbol(tau); }, "ilw"};
}

FourierMultiplier fractional_laplacian(double s) {
    if (!(s > 0.0 && s <= 1.0))
        throw std::invalid_argument("fractional_laplacian: s must lie in (0, 1]");
    return {[s](double tau) { return fractional_laplacian_symbol(s, tau); },
            "frac_lap(s=" + std::to_string(s) + ")"};
}

FourierMultiplier constant_multiplier(double value, std::string label) {
    return {[value](double) { return value; }, std::move(label)};
}

FourierMultiplier shifted(const FourierMultiplier& m, double shift) {
    auto base = m.symbol;
    return {[base, shift](double tau) { return base(tau) + shift; }, m.label + "+shift"};
}

}  // namespace nlgs
