#ifndef NLGS_MULTIPLIER_HPP
#define NLGS_MULTIPLIER_HPP

#include <functional>
#include <string>

namespace nlgs {

// Symbol of the dispersive operator of the intermediate long-wave problem:
//   tau * coth(pi*tau/2) - 2/pi.
// Even, nonnegative, vanishing only at tau = 0, and approaching |tau| - 2/pi
// at large |tau|. Evaluated by a cancellation-free formula near tau = 0.
double ilw_symbol(double tau);

// |tau|^(2s); the valid exponent range is 0 < s <= 1.
double fractional_laplacian_symbol(double s, double tau);

// An even real symbol m(tau) defining a Fourier-multiplier operator on real
// profiles. Evenness is what keeps real inputs real, so constructors of
// derived operators should only ever supply even symbols.
struct FourierMultiplier {
    std::function<double(double)> symbol;
    std::string label;

    double operator()(double tau) const { return symbol(tau); }
};

FourierMultiplier ilw_multiplier();
FourierMultiplier fractional_laplacian(double s);  // throws unless 0 < s <= 1
FourierMultiplier constant_multiplier(double value, std::string label = "const");

// m(tau) + shift, used for quadratic forms of shifted operators.
FourierMultiplier shifted(const FourierMultiplier& m, double shift);

}  // namespace nlgs

#endif
