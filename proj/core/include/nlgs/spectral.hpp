#ifndef NLGS_SPECTRAL_HPP
#define NLGS_SPECTRAL_HPP

#include <complex>
#include <vector>

#include "nlgs/grid.hpp"
#include "nlgs/multiplier.hpp"

namespace nlgs {

// Discrete transforms follow the convention
//   phi_hat(tau) = (2*pi)^(-1/2) * integral e^(-i*tau*t) phi(t) dt,
// scaled so that sum_k |phi_hat(tau_k)|^2 * (pi/L) equals h * sum_j |phi_j|^2
// exactly (discrete Parseval). All operations below work through the raw
// unnormalized real-to-complex FFT; the scaling constants live in one place.

// Raw forward FFT bins c_k = sum_j u_j e^(-2*pi*i*j*k/N), k = 0..N/2.
std::vector<std::complex<double>> forward_fft(const std::vector<double>& u);

// Inverse of forward_fft (divides by N). `n` is the real output length.
std::vector<double> inverse_fft(const std::vector<std::complex<double>>& c, int n);

// Symbol sampled on the grid's FFT bins k = 0..N/2, Nyquist at +tau_{N/2}.
std::vector<double> symbol_on_bins(const FourierMultiplier& m, const GridSpec& grid);

// u -> real profile with Fourier coefficients m(tau_k) * u_hat_k.
Profile apply_multiplier(const FourierMultiplier& m, const Profile& u);

// sum_k m(tau_k) |u_hat(tau_k)|^2 * (pi/L); equals ||u||_2^2 when m == 1.
double quadratic_form(const FourierMultiplier& m, const Profile& u);

// Solve (A + mu) v = f where A is the multiplier operator; requires
// m(tau_k) + mu > 0 on every sampled frequency.
Profile invert_shifted(const FourierMultiplier& m, double mu, const Profile& f);

// (h * sum_j |u_j|^p)^(1/p), p >= 1.
double lp_norm(const Profile& u, double p);

// h * sum_j u_j v_j.
double inner_product(const Profile& u, const Profile& v);

// Spectral derivative d/dt (odd image of even profiles and vice versa).
Profile spectral_derivative(const Profile& u);

// Translate by delta via the Fourier phase e^(i*tau*delta); exact for
// band-limited profiles.
Profile fourier_shift(const Profile& u, double delta);

// Trigonometric upsampling to factor*N points on the same box.
Profile refine(const Profile& u, int factor);

// Even average u(t) <-> u(-t).
Profile symmetrize_even(const Profile& u);

// Pointwise power u^(alpha+1). Integer alpha evaluates the product on a
// zero-padded grid and truncates back (alias-free through quartic powers);
// non-integer alpha clamps negative values to zero first.
Profile nonlinear_power(const Profile& u, double alpha);

// First column of the operator matrix F^-1 diag(m(tau_k)) F; entry d is the
// coupling at grid offset d. The full N x N matrix is circulant in this vector.
std::vector<double> circulant_generator(const FourierMultiplier& m, const GridSpec& grid);

// Value of the trigonometric interpolant at an arbitrary point t (O(N) sum).
double trig_interpolate(const Profile& u, double t);

// Locate the peak of a single-bump profile to sub-grid accuracy using the
// phase of the first Fourier mode.
double peak_location(const Profile& u);

}  // namespace nlgs

#endif
