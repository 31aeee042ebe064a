#include "nlgs/spectral.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

namespace nlgs {

namespace {

// FFTW plans are cached per transform size. Buffers are owned by the cache and
// guarded by a mutex; callers copy in and out, so the public API stays pure.
struct FftWorkspace {
    int n = 0;
    double* real = nullptr;
    fftw_complex* cplx = nullptr;
    fftw_plan fwd = nullptr;
    fftw_plan bwd = nullptr;

    explicit FftWorkspace(int n_) : n(n_) {
        real = fftw_alloc_real(n);
        cplx = fftw_alloc_complex(n / 2 + 1);
        fwd = fftw_plan_dft_r2c_1d(n, real, cplx, FFTW_ESTIMATE);
        bwd = fftw_plan_dft_c2r_1d(n, cplx, real, FFTW_ESTIMATE);
    }
    ~FftWorkspace() {
        fftw_destroy_plan(bwd);
        fftw_destroy_plan(fwd);
        fftw_free(cplx);
        fftw_free(real);
    }
    FftWorkspace(const FftWorkspace&) = delete;
    FftWorkspace& operator=(const FftWorkspace&) = delete;
};

std::mutex& fft_mutex() {
    static std::mutex m;
    return m;
}

FftWorkspace& workspace(int n) {
    static std::map<int, std::unique_ptr<FftWorkspace>> cache;
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, std::make_unique<FftWorkspace>(n)).first;
    return *it->second;
}

void require_same_grid(const Profile& u, const GridSpec& g) {
    if (!(u.grid == g)) throw std::invalid_argument("grid mismatch");
}

// Even real symbols commute with reflection, so a tagged output is exactly
// symmetric in exact arithmetic; this folds away the roundoff asymmetry that
// large symbol values amplify, making the tag true by construction.
Profile tagged_profile(const GridSpec& grid, std::vector<double> v, Parity parity) {
    const int n = grid.num_points;
    if (parity == Parity::even) {
        for (int j = 1; j <= n / 2; ++j) {
            const double avg = 0.5 * (v[j] + v[n - j]);
            v[j] = avg;
            if (j < n / 2) v[n - j] = avg;
        }
    } else if (parity == Parity::odd) {
        v[0] = 0.0;
        v[n / 2] = 0.0;
        for (int j = 1; j < n / 2; ++j) {
            const double avg = 0.5 * (v[j] - v[n - j]);
            v[j] = avg;
            v[n - j] = -avg;
        }
    }
    return Profile(grid, std::move(v), parity);
}

}  // namespace

std::vector<std::complex<double>> forward_fft(const std::vector<double>& u) {
    const int n = static_cast<int>(u.size());
    std::lock_guard<std::mutex> lock(fft_mutex());
    FftWorkspace& ws = workspace(n);
    std::copy(u.begin(), u.end(), ws.real);
    fftw_execute(ws.fwd);
    std::vector<std::complex<double>> out(n / 2 + 1);
    for (int k = 0; k <= n / 2; ++k) out[k] = {ws.cplx[k][0], ws.cplx[k][1]};
    return out;
}

std::vector<double> inverse_fft(const std::vector<std::complex<double>>& c, int n) {
    if (static_cast<int>(c.size()) != n / 2 + 1)
        throw std::invalid_argument("inverse_fft: bin count does not match output length");
    std::lock_guard<std::mutex> lock(fft_mutex());
    FftWorkspace& ws = workspace(n);
    for (int k = 0; k <= n / 2; ++k) {
        ws.cplx[k][0] = c[k].real();
        ws.cplx[k][1] = c[k].imag();
    }
    fftw_execute(ws.bwd);
    std::vector<double> out(n);
    const double inv = 1.0 / n;
    for (int j = 0; j < n; ++j) out[j] = ws.real[j] * inv;
    return out;
}

std::vector<double> symbol_on_bins(const FourierMultiplier& m, const GridSpec& grid) {
    const int nb = grid.num_points / 2 + 1;
    std::vector<double> s(nb);
    for (int k = 0; k < nb; ++k) s[k] = m(grid.frequency(k));
    return s;
}

Profile apply_multiplier(const FourierMultiplier& m, const Profile& u) {
    auto c = forward_fft(u.values);
    const auto s = symbol_on_bins(m, u.grid);
    for (size_t k = 0; k < c.size(); ++k) c[k] *= s[k];
    return tagged_profile(u.grid, inverse_fft(c, u.grid.num_points), u.parity);
}

double quadratic_form(const FourierMultiplier& m, const Profile& u) {
    const int n = u.grid.num_points;
    const auto c = forward_fft(u.values);
    const auto s = symbol_on_bins(m, u.grid);
    double acc = s[0] * std::norm(c[0]);
    for (int k = 1; k < n / 2; ++k) acc += 2.0 * s[k] * std::norm(c[k]);
    acc += s[n / 2] * std::norm(c[n / 2]);
    return acc * u.grid.spacing() / n;
}

Profile invert_shifted(const FourierMultiplier& m, double mu, const Profile& f) {
    auto c = forward_fft(f.values);
    const auto s = symbol_on_bins(m, f.grid);
    for (size_t k = 0; k < c.size(); ++k) {
        const double d = s[k] + mu;
        if (!(d > 0.0))
            throw std::invalid_argument("invert_shifted: shifted symbol not positive at a sampled frequency");
        c[k] /= d;
    }
    return tagged_profile(f.grid, inverse_fft(c, f.grid.num_points), f.parity);
}

double lp_norm(const Profile& u, double p) {
    if (!(p >= 1.0)) throw std::invalid_argument("lp_norm: p must be >= 1");
    double acc = 0.0;
    for (double v : u.values) acc += std::pow(std::abs(v), p);
    return std::pow(u.grid.spacing() * acc, 1.0 / p);
}

double inner_product(const Profile& u, const Profile& v) {
    require_same_grid(v, u.grid);
    double acc = 0.0;
    for (int j = 0; j < u.size(); ++j) acc += u.values[j] * v.values[j];
    return u.grid.spacing() * acc;
}

Profile spectral_derivative(const Profile& u) {
    auto c = forward_fft(u.values);
    const int n = u.grid.num_points;
    for (int k = 0; k < n / 2; ++k) c[k] *= std::complex<double>(0.0, u.grid.frequency(k));
    c[n / 2] = 0.0;  // odd image of the unpaired Nyquist mode
    Parity p = u.parity;
    if (p == Parity::even) p = Parity::odd;
    else if (p == Parity::odd) p = Parity::even;
    return tagged_profile(u.grid, inverse_fft(c, n), p);
}

Profile fourier_shift(const Profile& u, double delta) {
    // v(t) = u(t - delta): multiply the k-th coefficient by e^{-i tau_k delta}
    auto c = forward_fft(u.values);
    const int n = u.grid.num_points;
    for (int k = 0; k <= n / 2; ++k) {
        const double phase = u.grid.frequency(k) * delta;
        c[k] *= std::complex<double>(std::cos(phase), -std::sin(phase));
    }
    return Profile(u.grid, inverse_fft(c, n), Parity::none);
}

Profile refine(const Profile& u, int factor) {
    if (factor < 1) throw std::invalid_argument("refine: factor must be >= 1");
    if (factor == 1) return u;
    const int n = u.grid.num_points;
    const int m = factor * n;
    auto c = forward_fft(u.values);
    std::vector<std::complex<double>> cm(m / 2 + 1, 0.0);
    for (int k = 0; k < n / 2; ++k) cm[k] = c[k] * static_cast<double>(factor);
    cm[n / 2] = c[n / 2] * (0.5 * factor);  // old Nyquist bin becomes a paired bin
    return tagged_profile(GridSpec(u.grid.half_width, m), inverse_fft(cm, m), u.parity);
}

Profile symmetrize_even(const Profile& u) {
    const int n = u.grid.num_points;
    std::vector<double> v(n);
    for (int j = 0; j < n; ++j) v[j] = 0.5 * (u.values[j] + u.values[(n - j) % n]);
    return Profile(u.grid, std::move(v), Parity::even);
}

Profile nonlinear_power(const Profile& u, double alpha) {
    const double p = alpha + 1.0;
    const bool integer_alpha = (alpha == std::floor(alpha));
    if (!integer_alpha) {
        std::vector<double> v(u.values.size());
        for (size_t j = 0; j < v.size(); ++j) {
            const double base = std::max(u.values[j], 0.0);
            v[j] = std::pow(base, p);
        }
        return tagged_profile(u.grid, std::move(v),
                              u.parity == Parity::even ? Parity::even : Parity::none);
    }
    // 3/2-rule zero padding: evaluate the power on the refined grid, then
    // truncate the spectrum back to the original modes.
    const int n = u.grid.num_points;
    Profile fine = refine(u, 3);
    const int ip = static_cast<int>(p);
    for (double& v : fine.values) {
        double acc = 1.0;
        for (int q = 0; q < ip; ++q) acc *= v;
        v = acc;
    }
    auto cf = forward_fft(fine.values);
    std::vector<std::complex<double>> c(n / 2 + 1);
    for (int k = 0; k <= n / 2; ++k) c[k] = cf[k] / 3.0;
    return tagged_profile(u.grid, inverse_fft(c, n),
                          u.parity == Parity::even ? Parity::even : Parity::none);
}

std::vector<double> circulant_generator(const FourierMultiplier& m, const GridSpec& grid) {
    const int n = grid.num_points;
    std::vector<std::complex<double>> c(n / 2 + 1);
    const auto s = symbol_on_bins(m, grid);
    for (int k = 0; k <= n / 2; ++k) c[k] = s[k];
    return inverse_fft(c, n);
}

double trig_interpolate(const Profile& u, double t) {
    const int n = u.grid.num_points;
    const auto c = forward_fft(u.values);
    // u(t) = (1/N) [c_0 + 2 sum_k Re(c_k e^{i tau_k (t + L)}) + c_{N/2} cos(tau_{N/2} (t + L))]
    const double x = t + u.grid.half_width;
    double acc = c[0].real();
    for (int k = 1; k < n / 2; ++k) {
        const double phase = u.grid.frequency(k) * x;
        acc += 2.0 * (c[k].real() * std::cos(phase) - c[k].imag() * std::sin(phase));
    }
    acc += c[n / 2].real() * std::cos(u.grid.frequency(n / 2) * x);
    return acc / n;
}

double peak_location(const Profile& u) {
    const auto c = forward_fft(u.values);
    // For an even bump translated by s, the k = 1 coefficient carries the
    // phase e^{-i tau_1 (s + L)} times a positive amplitude.
    const double tau1 = u.grid.frequency(1);
    double s = -std::arg(c[1]) / tau1 - u.grid.half_width;
    const double period = 2.0 * u.grid.half_width;
    while (s >= u.grid.half_width) s -= period;
    while (s < -u.grid.half_width) s += period;
    return s;
}

}  // namespace nlgs
