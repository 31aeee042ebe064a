#include "nlgs/grid.hpp"

#include <cmath>
#include <stdexcept>

namespace nlgs {

GridSpec::GridSpec(double half_width_, int num_points_)
    : half_width(half_width_), num_points(num_points_) {
    if (!(half_width > 0.0)) throw std::invalid_argument("GridSpec: half_width must be > 0");
    if (num_points <= 0 || num_points % 2 != 0)
        throw std::invalid_argument("GridSpec: num_points must be a positive even integer");
}

std::vector<double> GridSpec::nodes() const {
    std::vector<double> t(num_points);
    for (int j = 0; j < num_points; ++j) t[j] = node(j);
    return t;
}

double GridSpec::frequency(int k) const {
    if (k < 0 || k > num_points / 2) throw std::invalid_argument("GridSpec: frequency bin out of range");
    return M_PI * k / half_width;
}

Profile::Profile(GridSpec grid_, std::vector<double> values_, Parity parity_)
    : grid(grid_), values(std::move(values_)), parity(parity_) {
    if (static_cast<int>(values.size()) != grid.num_points)
        throw std::invalid_argument("Profile: value count does not match grid");
    for (double v : values)
        if (!std::isfinite(v)) throw std::invalid_argument("Profile: non-finite sample");
    if (parity != Parity::none) {
        double scale = max_abs();
        if (scale > 0.0 && parity_defect() > 1e-12 * scale)
            throw std::invalid_argument("Profile: samples violate the declared parity");
    }
}

double Profile::parity_defect() const {
    const int n = grid.num_points;
    const double sign = (parity == Parity::odd) ? -1.0 : 1.0;
    double defect = 0.0;
    for (int j = 0; j < n; ++j) {
        double mirrored = sign * values[(n - j) % n];
        defect = std::max(defect, std::abs(values[j] - mirrored));
    }
    return defect;
}

double Profile::max_abs() const {
    double m = 0.0;
    for (double v : values) m = std::max(m, std::abs(v));
    return m;
}

Profile sample(const GridSpec& grid, const std::function<double(double)>& f, Parity parity) {
    std::vector<double> vals(grid.num_points);
    for (int j = 0; j < grid.num_points; ++j) vals[j] = f(grid.node(j));
    return Profile(grid, std::move(vals), parity);
}

Profile zero_profile(const GridSpec& grid) {
    return Profile(grid, std::vector<double>(grid.num_points, 0.0), Parity::even);
}

GridSpec default_grid() { return GridSpec(20.0 * M_PI, 2048); }
GridSpec large_grid() { return GridSpec(200.0, 8192); }
GridSpec spectral_grid() { return GridSpec(20.0 * M_PI, 1024); }

}  // namespace nlgs
