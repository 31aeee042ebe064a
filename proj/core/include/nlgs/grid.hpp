#ifndef NLGS_GRID_HPP
#define NLGS_GRID_HPP

#include <functional>
#include <string>
#include <vector>

namespace nlgs {

// Uniform symmetric grid on [-L, L) with N points (N even) and the matching
// set of discrete frequencies tau_k = pi*k/L, k = -N/2 .. N/2-1.
struct GridSpec {
    GridSpec(double half_width, int num_points);

    double half_width;  // L
    int num_points;     // N, even

    double spacing() const { return 2.0 * half_width / num_points; }
    double node(int j) const { return -half_width + j * spacing(); }
    std::vector<double> nodes() const;

    // Frequencies in FFT bin order: k = 0..N/2 maps to tau = pi*k/L; the
    // Nyquist bin N/2 is evaluated at +tau_{N/2}.
    double frequency(int k) const;
    double max_frequency() const { return frequency(num_points / 2); }

    bool operator==(const GridSpec& other) const {
        return half_width == other.half_width && num_points == other.num_points;
    }
};

enum class Parity { none, even, odd };

// Real-valued samples on a GridSpec, optionally tagged with a parity that is
// validated on construction (u[j] = +/- u[(N-j) mod N] to 1e-12 relative).
struct Profile {
    Profile(GridSpec grid, std::vector<double> values, Parity parity = Parity::none);

    GridSpec grid;
    std::vector<double> values;
    Parity parity = Parity::none;

    int size() const { return grid.num_points; }
    double parity_defect() const;  // sup |u[j] -/+ u[(N-j)%N]| for the tagged parity
    double max_abs() const;
};

// Sample a function of t on the grid.
Profile sample(const GridSpec& grid, const std::function<double(double)>& f,
               Parity parity = Parity::none);

Profile zero_profile(const GridSpec& grid);

// Default boxes: exponential-decay profiles live comfortably on [-20pi, 20pi);
// algebraically decaying ones need the larger box.
GridSpec default_grid();        // L = 20*pi, N = 2048
GridSpec large_grid();          // L = 200,   N = 8192
GridSpec spectral_grid();       // L = 20*pi, N = 1024 (dense eigensolves)

}  // namespace nlgs

#endif
